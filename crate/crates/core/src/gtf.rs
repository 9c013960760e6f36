//! Generalized trigonometric functions with two parameters.
//!
//! `sin_{p,q}` is the inverse of `x ↦ ∫_0^x (1 - t^q)^(-1/p) dt` on `[0, 1]`,
//! `π_{p,q}` is twice that integral at `x = 1`, and `cos_{p,q}` is the
//! derivative of `sin_{p,q}`, which satisfies `cos^p + sin^q = 1`.
//!
//! Evaluation goes through the regularized incomplete beta function:
//! `sin_{p,q}^{-1}(x) = (π_{p,q}/2) I_{x^q}(1/q, 1/p*)`.

use crate::error::{Error, Result};
use crate::specfun::{beta, inc_beta_inv_split, inc_beta_split, BetaArgs};

/// Conjugate exponent `p* = p / (p - 1)`, with `1* = ∞` and `∞* = 1`.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// Exponent pair `(p, q)`.
///
/// [`ParamPair::new`] accepts `p, q ∈ (1, ∞)`. [`ParamPair::extended`] also
/// admits `q = 1` and `p = ∞`, which only [`pi_pq`] understands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    p: f64,
    q: f64,
}

impl ParamPair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p > 1.0 && p.is_finite() && q > 1.0 && q.is_finite()) {
            return Err(Error::domain(format!(
                "exponents must satisfy p, q in (1, inf), got p = {p}, q = {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn extended(p: f64, q: f64) -> Result<Self> {
        if !(p > 1.0 && q >= 1.0 && q.is_finite()) {
            return Err(Error::domain(format!(
                "extended exponents must satisfy p in (1, inf], q in [1, inf), got p = {p}, q = {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn p_conj(&self) -> f64 {
        conjugate(self.p)
    }

    pub fn q_conj(&self) -> f64 {
        conjugate(self.q)
    }

    /// `(q*, p*)`, the pair appearing in the reflection formulas.
    pub fn dual(&self) -> Result<Self> {
        Self::new(self.q_conj(), self.p_conj())
    }

    pub fn is_standard(&self) -> bool {
        self.p.is_finite() && self.q > 1.0
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "degenerate pair (p = {}, q = {}) is only defined for pi_pq",
                self.p, self.q
            )))
        }
    }

    /// Shape parameters `(1/q, 1/p*)` of the underlying beta distribution.
    fn beta_shape(&self) -> (f64, f64) {
        (1.0 / self.q, 1.0 - 1.0 / self.p)
    }
}

/// Generalized π: `π_{p,q} = (2/q) B(1/p*, 1/q)`, with `π_{s,1} = 2s*` and `π_{∞,s} = 2`.
pub fn pi_pq(params: ParamPair) -> f64 {
    if params.p.is_infinite() {
        return 2.0;
    }
    if params.q == 1.0 {
        return 2.0 * params.p_conj();
    }
    let (a, b) = params.beta_shape();
    2.0 / params.q * beta(BetaArgs { x: b, y: a })
}

/// `sin_{p,q}^{-1}(x)` for `x ∈ [0, 1]`.
pub fn asin_pq(params: ParamPair, x: f64) -> Result<f64> {
    params.require_standard()?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "asin_pq requires x in [0, 1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let z = x.powf(params.q);
    let zc = -(params.q * x.ln()).exp_m1();
    let (a, b) = params.beta_shape();
    let (frac, _) = inc_beta_split(a, b, z, zc);
    Ok(0.5 * pi_pq(params) * frac)
}

/// A point of the principal branch together with both function values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GtfSample {
    pub x: f64,
    /// `sin_{p,q}(x)`
    pub s: f64,
    /// `cos_{p,q}(x)`
    pub c: f64,
}

impl GtfSample {
    pub fn at(params: ParamPair, x: f64) -> Result<Self> {
        let (s, c) = sin_cos_pq(params, x)?;
        Ok(Self { x, s, c })
    }
}

/// `sin_{p,q}(x)` for `x ∈ [0, π_{p,q}/2]`.
pub fn sin_pq(params: ParamPair, x: f64) -> Result<f64> {
    sin_cos_pq(params, x).map(|(s, _)| s)
}

/// `cos_{p,q}(x) = (1 - sin_{p,q}^q(x))^(1/p)` for `x ∈ [0, π_{p,q}/2]`.
pub fn cos_pq(params: ParamPair, x: f64) -> Result<f64> {
    sin_cos_pq(params, x).map(|(_, c)| c)
}

/// Both `sin_{p,q}(x)` and `cos_{p,q}(x)` from a single inversion.
pub fn sin_cos_pq(params: ParamPair, x: f64) -> Result<(f64, f64)> {
    params.require_standard()?;
    let half = 0.5 * pi_pq(params);
    let x = principal(x, half, "sin_pq/cos_pq")?;
    sin_cos_split(params, x, half - x)
}

/// Clamps rounding overshoot of a few ulps onto the interval `[0, upper]`.
pub(crate) fn principal(x: f64, upper: f64, what: &str) -> Result<f64> {
    let slack = 4.0 * f64::EPSILON * upper;
    if !(x >= -slack && x <= upper + slack) {
        return Err(Error::domain(format!(
            "{what} requires x in [0, {upper}], got {x}"
        )));
    }
    Ok(x.clamp(0.0, upper))
}

/// `(sin, cos)` at `x` where `xc = π_{p,q}/2 - x` is given separately.
///
/// Near the top of the branch the inverse beta is solved for `1 - sin^q`
/// directly, so `cos` keeps full relative precision there.
pub(crate) fn sin_cos_split(params: ParamPair, x: f64, xc: f64) -> Result<(f64, f64)> {
    let half = 0.5 * pi_pq(params);
    let (a, b) = params.beta_shape();
    let (t, tc) = inc_beta_inv_split(a, b, x.max(0.0) / half, xc.max(0.0) / half)?;
    Ok((t.powf(1.0 / params.q), tc.powf(1.0 / params.p)))
}

/// Absolute residual of `(cos^{p-1})' = -((p-1)q/p) sin^{q-1}` at an interior
/// point, with the derivative taken by central differences (step `1e-5`).
///
/// The right-hand side carries a minus sign because `cos^{p-1}` decreases.
pub fn dcos_power_identity_residual(params: ParamPair, x: f64) -> Result<f64> {
    params.require_standard()?;
    let half = 0.5 * pi_pq(params);
    let h = 1e-5;
    if !(x - h > 0.0 && x + h < half) {
        return Err(Error::domain(format!(
            "x = {x} must be interior to (0, {half}) with room for the difference stencil"
        )));
    }
    let p = params.p;
    let q = params.q;
    let c_pow = |t: f64| -> Result<f64> { Ok(cos_pq(params, t)?.powf(p - 1.0)) };
    let derivative = (c_pow(x + h)? - c_pow(x - h)?) / (2.0 * h);
    let s = sin_pq(params, x)?;
    Ok((derivative + (p - 1.0) * q / p * s.powf(q - 1.0)).abs())
}

/// Residuals of the reflection formulas
///
/// `sin_{p,q}(π_{p,q} x/2) = cos_{q*,p*}^{q*-1}(π_{q*,p*}(1-x)/2)` and
/// `cos_{p,q}(π_{p,q} x/2) = sin_{q*,p*}^{p*-1}(π_{q*,p*}(1-x)/2)`
///
/// for `x ∈ [0, 1]`, returned as left minus right for each.
pub fn sin_symmetry_appendix(params: ParamPair, x01: f64) -> Result<(f64, f64)> {
    params.require_standard()?;
    if !(0.0..=1.0).contains(&x01) {
        return Err(Error::domain(format!("x must lie in [0, 1], got {x01}")));
    }
    let dual = params.dual()?;
    let half = 0.5 * pi_pq(params);
    let dual_half = 0.5 * pi_pq(dual);
    let (s, c) = sin_cos_split(params, half * x01, half * (1.0 - x01))?;
    let (ds, dc) = sin_cos_split(dual, dual_half * (1.0 - x01), dual_half * x01)?;
    Ok((
        s - dc.powf(dual.p - 1.0),
        c - ds.powf(params.p_conj() - 1.0),
    ))
}

/// `sin_{2,p}` on `[0, π_{2,p}]`, mirrored about `π_{2,p}/2`.
pub fn extend_sin_symmetric(p: f64, x: f64) -> Result<f64> {
    let params = ParamPair::new(2.0, p)?;
    let full = pi_pq(params);
    let half = 0.5 * full;
    let x = principal(x, full, "extend_sin_symmetric")?;
    let (s, _) = if x <= half {
        sin_cos_split(params, x, half - x)?
    } else {
        sin_cos_split(params, full - x, x - half)?
    };
    Ok(s)
}

/// Residual of `sin_{2,p}(2^{2/p} x) = 2^{2/p} sin_{p*,p}(x) cos_{p*,p}^{p*-1}(x)`
/// for `x ∈ [0, π_{p*,p}/2]`.
pub fn multiple_angle_residual(p: f64, x: f64) -> Result<f64> {
    let params = ParamPair::new(conjugate(p), p)?;
    let half = 0.5 * pi_pq(params);
    let x = principal(x, half, "multiple_angle_residual")?;
    let scale = 2f64.powf(2.0 / p);
    let full = pi_pq(ParamPair::new(2.0, p)?);
    let lhs = extend_sin_symmetric(p, (scale * x).min(full))?;
    let (s, c) = sin_cos_split(params, x, half - x)?;
    let rhs = scale * s * c.powf(params.p - 1.0);
    Ok((lhs - rhs).abs())
}
