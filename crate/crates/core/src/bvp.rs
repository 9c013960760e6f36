//! Closed-form positive solutions of
//!
//! ```text
//! (p - q) u' - pq (u')² + (p + q) u u'' + 1 = 0,   u(0) = u(H) = 0,
//! ```
//!
//! of the nonlocal problem
//!
//! ```text
//! φ' - (φ')² + φ φ'' + (2/H) ∫_0^H (φ')² dt = 0,   φ(0) = φ(H) = 0,
//! ```
//!
//! and of the `p = q`, `H = 1` special case, together with residual checks.
//! Residuals differentiate numerically so they stay independent of the
//! closed forms they verify.

use crate::error::{Error, Result};
use crate::gtf::{conjugate, extend_sin_symmetric, pi_pq, sin_cos_split, ParamPair};
use crate::quadrature::integrate;

/// Finite-difference step as a fraction of the interval length.
pub const FD_STEP_FRACTION: f64 = 1e-4;
/// End strips excluded from the finite-difference closure integral, as a fraction of `H`.
pub const CLOSURE_STRIP_FRACTION: f64 = 1e-3;

const CLOSURE_TOL: f64 = 1e-12;

/// Interval length and exponents of the local problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BvpSpec {
    length: f64,
    p: f64,
    q: f64,
}

impl BvpSpec {
    pub fn new(length: f64, p: f64, q: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::domain(format!(
                "interval length must be positive, got {length}"
            )));
        }
        if !(p > 1.0 && q > 1.0 && p.is_finite() && q.is_finite()) {
            return Err(Error::domain(format!(
                "exponents must lie in (1, ∞), got p = {p}, q = {q}"
            )));
        }
        Ok(Self { length, p, q })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// The pair `(p*, q)` whose functions build the solution.
    pub fn trig_params(&self) -> ParamPair {
        ParamPair::new(conjugate(self.p), self.q).expect("p* and q lie in (1, ∞)")
    }
}

/// Interval length and amplitude parameter `m` of the nonlocal problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonlocalSpec {
    length: f64,
    m: f64,
}

impl NonlocalSpec {
    pub fn new(length: f64, m: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::domain(format!(
                "interval length must be positive, got {length}"
            )));
        }
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::domain(format!(
                "amplitude parameter m must be positive, got {m}"
            )));
        }
        Ok(Self { length, m })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// `√(m² + 1/4)`
    pub fn radius(&self) -> f64 {
        self.m.hypot(0.5)
    }

    /// `r = (1/2 + 1/(4√(m² + 1/4)))⁻¹ ∈ (1, 2)`
    pub fn r(&self) -> f64 {
        1.0 / (0.5 + 0.25 / self.radius())
    }

    /// The local problem with `p* = q = r`.
    pub fn local(&self) -> BvpSpec {
        let r = self.r();
        BvpSpec::new(self.length, conjugate(r), r).expect("r lies in (1, 2)")
    }
}

/// Which problem a solution belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem {
    General(BvpSpec),
    Nonlocal(NonlocalSpec),
    /// `p = q` on `[0, 1]`, written with `sin_{2,p}` over the full period.
    PqEqual {
        p: f64,
    },
}

/// A closed-form solution, evaluable anywhere on `[0, H]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BvpSolution {
    problem: Problem,
    local: BvpSpec,
    trig: ParamPair,
    half_period: f64,
    /// Multiplier from the local solution `u` to the returned profile.
    scale: f64,
}

impl BvpSolution {
    fn from_local(problem: Problem, local: BvpSpec, scale: f64) -> Self {
        let trig = local.trig_params();
        Self {
            problem,
            local,
            trig,
            half_period: 0.5 * pi_pq(trig),
            scale,
        }
    }

    pub fn problem(&self) -> Problem {
        self.problem
    }

    /// The local problem `u` solves; the profile is `scale · u`.
    pub fn local(&self) -> BvpSpec {
        self.local
    }

    pub fn length(&self) -> f64 {
        self.local.length
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    fn check_x(&self, x: f64) -> Result<f64> {
        let h = self.local.length;
        if !(-4.0 * f64::EPSILON * h..=h * (1.0 + 4.0 * f64::EPSILON)).contains(&x) {
            return Err(Error::domain(format!("x = {x} lies outside [0, {h}]")));
        }
        Ok(x.clamp(0.0, h))
    }

    /// The angle `π_{p*,q} x / (2H)` and its complement to `π_{p*,q}/2`.
    fn angle(&self, x: f64) -> (f64, f64) {
        let h = self.local.length;
        (self.half_period * x / h, self.half_period * (h - x) / h)
    }

    /// `u(x)` of the local problem, from the general closed form.
    fn local_value(&self, x: f64) -> Result<f64> {
        let (theta, theta_c) = self.angle(x);
        let (s, c) = sin_cos_split(self.trig, theta, theta_c)?;
        let amplitude = self.local.length / (self.local.q * self.half_period);
        Ok(amplitude * c.powf(self.trig.p() - 1.0) * s)
    }

    /// The profile at `x ∈ [0, H]`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let x = self.check_x(x)?;
        match self.problem {
            Problem::PqEqual { p } => {
                let full = pi_pq(ParamPair::new(2.0, p)?);
                Ok(extend_sin_symmetric(p, full * x)? / (p * full))
            }
            _ => Ok(self.scale * self.local_value(x)?),
        }
    }

    /// `v = u'` from the phase-plane parametrization, `-1/p + (1/p + 1/q) cos^{p*}`.
    pub fn phase_slope(&self, x: f64) -> Result<f64> {
        let x = self.check_x(x)?;
        let (theta, theta_c) = self.angle(x);
        let (_, c) = sin_cos_split(self.trig, theta, theta_c)?;
        let (inv_p, inv_q) = (1.0 / self.local.p, 1.0 / self.local.q);
        Ok(-inv_p + (inv_p + inv_q) * c.powf(self.trig.p()))
    }

    /// Samples the profile on `points` equally spaced nodes including both ends.
    pub fn profile(&self, points: usize) -> Result<Vec<(f64, f64)>> {
        if points < 2 {
            return Err(Error::domain("a profile needs at least two points"));
        }
        let h = self.local.length;
        (0..points)
            .map(|i| {
                let x = if i + 1 == points {
                    h
                } else {
                    h * i as f64 / (points - 1) as f64
                };
                Ok((x, self.eval(x)?))
            })
            .collect()
    }

    /// First and second derivatives of the profile by central differences,
    /// extrapolated once.
    pub fn derivatives(&self, x: f64) -> Result<(f64, f64)> {
        let h = FD_STEP_FRACTION * self.local.length;
        if !(x - 2.0 * h > 0.0 && x + 2.0 * h < self.local.length) {
            return Err(Error::domain(format!(
                "x = {x} is too close to the boundary for the difference stencil"
            )));
        }
        let f = |t: f64| self.eval(t);
        let (m2, m1, c0, p1, p2) = (
            f(x - 2.0 * h)?,
            f(x - h)?,
            f(x)?,
            f(x + h)?,
            f(x + 2.0 * h)?,
        );
        let d1 = |step: f64, lo: f64, hi: f64| (hi - lo) / (2.0 * step);
        let d2 = |step: f64, lo: f64, hi: f64| (hi - 2.0 * c0 + lo) / (step * step);
        let first = (4.0 * d1(h, m1, p1) - d1(2.0 * h, m2, p2)) / 3.0;
        let second = (4.0 * d2(h, m1, p1) - d2(2.0 * h, m2, p2)) / 3.0;
        Ok((first, second))
    }
}

/// Solution of the local problem on `[0, H]`.
pub fn solve_general(spec: BvpSpec) -> BvpSolution {
    BvpSolution::from_local(Problem::General(spec), spec, 1.0)
}

/// `φ = 2√(m² + 1/4) u` with `u` the local solution for `p* = q = r`.
pub fn solve_nonlocal(spec: NonlocalSpec) -> BvpSolution {
    BvpSolution::from_local(Problem::Nonlocal(spec), spec.local(), 2.0 * spec.radius())
}

/// `u = sin_{2,p}(π_{2,p} x) / (p π_{2,p})` on `[0, 1]`.
pub fn solve_pq_equal(p: f64) -> Result<BvpSolution> {
    let local = BvpSpec::new(1.0, p, p)?;
    Ok(BvpSolution::from_local(Problem::PqEqual { p }, local, 1.0))
}

/// `|(p - q) u' - pq (u')² + (p + q) u u'' + 1|` at interior `x`, where `u`
/// is the local solution underlying `sol`.
pub fn residual_general(sol: &BvpSolution, x: f64) -> Result<f64> {
    let (d1, d2) = sol.derivatives(x)?;
    let u = sol.eval(x)? / sol.scale;
    let (u1, u2) = (d1 / sol.scale, d2 / sol.scale);
    let BvpSpec { p, q, .. } = sol.local;
    Ok(((p - q) * u1 - p * q * u1 * u1 + (p + q) * u * u2 + 1.0).abs())
}

/// `|φ' - (φ')² + φ φ'' + m²|` at interior `x` for a nonlocal solution.
pub fn residual_nonlocal(sol: &BvpSolution, x: f64) -> Result<f64> {
    let Problem::Nonlocal(spec) = sol.problem else {
        return Err(Error::domain("not a nonlocal solution"));
    };
    let (d1, d2) = sol.derivatives(x)?;
    let phi = sol.eval(x)?;
    Ok((d1 - d1 * d1 + phi * d2 + spec.m * spec.m).abs())
}

/// `|u - C |v + 1/p|^{1/p} |v - 1/q|^{1/q}|` with `v` from the phase-plane
/// parametrization and `C = 2H / (p (1/p + 1/q)^{1/p+1/q} π_{q*,p})`.
pub fn phase_curve_residual(sol: &BvpSolution, x: f64) -> Result<f64> {
    let BvpSpec { length, p, q } = sol.local;
    let (inv_p, inv_q) = (1.0 / p, 1.0 / q);
    let sum = inv_p + inv_q;
    let pi_dual = pi_pq(ParamPair::new(conjugate(q), p)?);
    let constant = 2.0 * length / (p * sum.powf(sum) * pi_dual);
    let v = sol.phase_slope(x)?;
    let curve = constant * (v + inv_p).abs().powf(inv_p) * (v - inv_q).abs().powf(inv_q);
    Ok((sol.eval(x)? / sol.scale - curve).abs())
}

/// Outcome of checking `(2/H) ∫_0^H (φ')² dt = m²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosureReport {
    pub integral: f64,
    pub m_squared: f64,
    pub relative_error: f64,
}

/// `(2/H) ∫_0^H (φ')² dt` against `m²`.
///
/// The interior uses the finite-difference derivative; the two end strips of
/// width [`CLOSURE_STRIP_FRACTION`]`·H` use the phase-plane slope.
pub fn nonlocal_closure(sol: &BvpSolution) -> Result<ClosureReport> {
    let Problem::Nonlocal(spec) = sol.problem else {
        return Err(Error::domain("not a nonlocal solution"));
    };
    let h = spec.length;
    let strip = CLOSURE_STRIP_FRACTION * h;
    let interior = integrate(
        |x| sol.derivatives(x).map_or(f64::NAN, |(d1, _)| d1 * d1),
        strip,
        h - strip,
        CLOSURE_TOL,
    )?;
    let slope_sq = |x: f64| {
        sol.phase_slope(x)
            .map_or(f64::NAN, |v| (sol.scale * v).powi(2))
    };
    let left = integrate(slope_sq, 0.0, strip, CLOSURE_TOL)?;
    let right = integrate(slope_sq, h - strip, h, CLOSURE_TOL)?;
    let integral = 2.0 / h * (interior.value + left.value + right.value);
    let m_squared = spec.m * spec.m;
    Ok(ClosureReport {
        integral,
        m_squared,
        relative_error: (integral - m_squared).abs() / m_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const GRID: [f64; 4] = [1.5, 2.0, 3.0, 4.0];

    fn interior(h: f64, n: usize) -> impl Iterator<Item = f64> {
        (1..=n).map(move |i| h * i as f64 / (n + 1) as f64)
    }

    #[test]
    fn spec_validation() {
        assert!(BvpSpec::new(0.0, 2.0, 2.0).is_err());
        assert!(BvpSpec::new(1.0, 1.0, 2.0).is_err());
        assert!(BvpSpec::new(1.0, 2.0, f64::INFINITY).is_err());
        assert!(NonlocalSpec::new(1.0, 0.0).is_err());
        assert!(NonlocalSpec::new(-1.0, 1.0).is_err());
        assert!(solve_pq_equal(1.0).is_err());
    }

    #[test]
    fn nonlocal_exponent() {
        let spec = NonlocalSpec::new(1.0, 3f64.sqrt() / 2.0).unwrap();
        assert!((spec.radius() - 1.0).abs() < 1e-15);
        assert!((spec.r() - 4.0 / 3.0).abs() < 1e-15);
        let local = spec.local();
        assert!((local.q() - 4.0 / 3.0).abs() < 1e-15);
        assert!((local.p() - 4.0).abs() < 1e-13);
        for m in [1e-3, 0.5, 1.0, 10.0, 1e3] {
            let r = NonlocalSpec::new(1.0, m).unwrap().r();
            assert!(r > 1.0 && r < 2.0);
        }
    }

    #[test]
    fn classical_profile() {
        let sol = solve_general(BvpSpec::new(1.0, 2.0, 2.0).unwrap());
        assert!((sol.eval(0.5).unwrap() - 1.0 / (2.0 * PI)).abs() < 1e-15);
        for x in interior(1.0, 9) {
            let want = (PI * x).sin() / (2.0 * PI);
            assert!((sol.eval(x).unwrap() - want).abs() < 1e-15);
            assert!((sol.phase_slope(x).unwrap() - 0.5 * (PI * x).cos()).abs() < 1e-15);
        }
        assert!(residual_general(&sol, 0.5).unwrap() <= 1e-8);
        assert!(sol.eval(1.5).is_err());
    }

    #[test]
    fn boundary_values_and_positivity() {
        for &p in &GRID {
            for &q in &GRID {
                for h in [1.0, 2.5] {
                    let sol = solve_general(BvpSpec::new(h, p, q).unwrap());
                    assert!(sol.eval(0.0).unwrap().abs() <= 1e-10);
                    assert!(sol.eval(h).unwrap().abs() <= 1e-10);
                    for x in interior(h, 15) {
                        assert!(sol.eval(x).unwrap() > 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn ode_residuals_on_grid() {
        let mut worst: f64 = 0.0;
        for &p in &GRID {
            for &q in &GRID {
                for h in [1.0, 2.5] {
                    let sol = solve_general(BvpSpec::new(h, p, q).unwrap());
                    for x in interior(h, 33) {
                        worst = worst.max(residual_general(&sol, x).unwrap());
                    }
                }
            }
        }
        assert!(worst <= 1e-6, "{worst}");
    }

    #[test]
    fn named_residual_points() {
        let sol = solve_general(BvpSpec::new(1.0, 3.0, 2.0).unwrap());
        assert!(residual_general(&sol, 0.25).unwrap() <= 1e-6);
        let sol = solve_general(BvpSpec::new(1.0, 2.0, 4.0).unwrap());
        assert!(residual_general(&sol, 0.9).unwrap() <= 1e-6);
        assert!(residual_general(&sol, 0.0).is_err());
    }

    #[test]
    fn phase_curve() {
        let sol = solve_general(BvpSpec::new(1.0, 2.0, 2.0).unwrap());
        assert!(phase_curve_residual(&sol, 0.3).unwrap() <= 1e-10);
        let sol = solve_general(BvpSpec::new(1.0, 3.0, 1.5).unwrap());
        assert!(phase_curve_residual(&sol, 0.6).unwrap() <= 1e-9);
        assert!((sol.phase_slope(0.0).unwrap() - 1.0 / 1.5).abs() < 1e-15);
        assert!((sol.phase_slope(1.0).unwrap() + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn phase_slope_range() {
        for &p in &GRID {
            for &q in &GRID {
                let sol = solve_general(BvpSpec::new(2.5, p, q).unwrap());
                for x in interior(2.5, 20) {
                    let v = sol.phase_slope(x).unwrap();
                    assert!(v >= -1.0 / p && v <= 1.0 / q);
                }
            }
        }
    }

    #[test]
    fn phase_slope_matches_numerical_derivative() {
        let sol = solve_general(BvpSpec::new(1.0, 3.0, 2.0).unwrap());
        for x in interior(1.0, 7) {
            let (d1, _) = sol.derivatives(x).unwrap();
            assert!((d1 - sol.phase_slope(x).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn nonlocal_solutions() {
        for m in [0.5, 1.0, 2.0, 10.0] {
            let sol = solve_nonlocal(NonlocalSpec::new(1.0, m).unwrap());
            let closure = nonlocal_closure(&sol).unwrap();
            assert!(closure.relative_error <= 1e-6, "m = {m}: {closure:?}");
            // Terms of the equation are of size m²; the residual is measured against that.
            for x in interior(1.0, 9) {
                assert!(residual_nonlocal(&sol, x).unwrap() <= 1e-7 * (m * m).max(1.0));
            }
        }
        let local = solve_general(BvpSpec::new(1.0, 2.0, 2.0).unwrap());
        assert!(residual_nonlocal(&local, 0.5).is_err());
        assert!(nonlocal_closure(&local).is_err());
    }

    #[test]
    fn nonlocal_unit_example() {
        let sol = solve_nonlocal(NonlocalSpec::new(1.0, 1.0).unwrap());
        for x in interior(1.0, 33) {
            assert!(residual_nonlocal(&sol, x).unwrap() <= 1e-6);
        }
        assert!(nonlocal_closure(&sol).unwrap().relative_error <= 1e-6);
    }

    #[test]
    fn nonlocal_amplitude_grows_with_m() {
        let peaks: Vec<f64> = [0.5, 1.0, 10.0]
            .iter()
            .map(|&m| {
                let sol = solve_nonlocal(NonlocalSpec::new(1.0, m).unwrap());
                let profile = sol.profile(201).unwrap();
                let (imax, &(_, peak)) = profile
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
                    .unwrap();
                // single interior maximum: rises then falls
                assert!(imax > 0 && imax < 200);
                assert!(profile[..=imax].windows(2).all(|w| w[1].1 >= w[0].1));
                assert!(profile[imax..].windows(2).all(|w| w[1].1 <= w[0].1));
                peak
            })
            .collect();
        assert!(peaks.windows(2).all(|w| w[1] > w[0]), "{peaks:?}");
    }

    #[test]
    fn pq_equal_solutions() {
        let sol = solve_pq_equal(2.0).unwrap();
        for x in interior(1.0, 9) {
            assert!((sol.eval(x).unwrap() - (PI * x).sin() / (2.0 * PI)).abs() < 1e-11);
        }
        for p in [1.1, 2.0, 5.0] {
            let sol = solve_pq_equal(p).unwrap();
            let general = solve_general(BvpSpec::new(1.0, p, p).unwrap());
            assert!(sol.eval(0.0).unwrap().abs() <= 1e-10);
            assert!(sol.eval(1.0).unwrap().abs() <= 1e-10);
            for x in interior(1.0, 19) {
                let u = sol.eval(x).unwrap();
                assert!(u > 0.0);
                assert!((u - sol.eval(1.0 - x).unwrap()).abs() <= 1e-11);
                assert!(
                    (u - general.eval(x).unwrap()).abs() <= 1e-10,
                    "p = {p}, x = {x}"
                );
            }
        }
    }
}
