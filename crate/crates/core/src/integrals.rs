//! Integral formulas for `sin_{p,q}` and `cos_{p,q}`: primitives through the
//! Gauss hypergeometric function, definite integrals through the beta
//! function, Wallis-type formulas, the lemniscate catalog, generalized
//! complete elliptic integrals with Elliott's identity, and the infinite
//! product for `π_{p,q}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::error::{Error, Result};
use crate::gtf::{conjugate, pi_pq, principal, sin_cos_split, ParamPair};
use crate::specfun::{beta_fn, hyp2f1_split, HyperParams};

fn check_k(k: f64) -> Result<()> {
    if k > -1.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "sine exponent k must exceed -1, got {k}"
        )))
    }
}

fn check_l(params: ParamPair, l: f64) -> Result<()> {
    if l > 1.0 - params.p() && l.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "cosine exponent l must exceed 1 - p = {}, got {l}",
            1.0 - params.p()
        )))
    }
}

/// `∫_0^x sin^k cos^l dt = sin^{k+1}(x)/(k+1) · F((k+1)/q, (1-l)/p; 1+(k+1)/q; sin^q x)`.
///
/// At `x = π_{p,q}/2` the value comes from [`definite_sin_cos`].
pub fn primitive_sin_cos(params: ParamPair, k: f64, l: f64, x: f64) -> Result<f64> {
    check_k(k)?;
    check_l(params, l)?;
    let half = 0.5 * pi_pq(params);
    let x = principal(x, half, "primitive_sin_cos")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == half {
        return definite_sin_cos(params, k, l);
    }
    let (s, c) = sin_cos_split(params, x, half - x)?;
    let a = (k + 1.0) / params.q();
    let hyper = HyperParams::new(a, (1.0 - l) / params.p(), 1.0 + a)?;
    let f = hyp2f1_split(hyper, s.powf(params.q()), c.powf(params.p()))?;
    Ok(s.powf(k + 1.0) / (k + 1.0) * f)
}

/// `∫_0^{π_{p,q}/2} sin^k cos^l dt = (1/q) B((k+1)/q, 1 + (l-1)/p)`.
pub fn definite_sin_cos(params: ParamPair, k: f64, l: f64) -> Result<f64> {
    check_k(k)?;
    check_l(params, l)?;
    Ok(beta_fn((k + 1.0) / params.q(), 1.0 + (l - 1.0) / params.p())? / params.q())
}

/// `∫_0^x sin^k cos^{pn+1} dt` as the terminating sum
/// `Σ_{m=0}^n (-1)^m C(n, m) sin^{k+1+qm}(x) / (k+1+qm)`.
pub fn primitive_finite_sum(params: ParamPair, k: f64, n: u32, x: f64) -> Result<f64> {
    check_k(k)?;
    let half = 0.5 * pi_pq(params);
    let x = principal(x, half, "primitive_finite_sum")?;
    let (s, _) = sin_cos_split(params, x, half - x)?;
    let q = params.q();
    let mut binom = 1.0;
    let mut total = 0.0;
    for m in 0..=n {
        let e = k + 1.0 + q * m as f64;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * binom * s.powf(e) / e;
        binom = binom * (n - m) as f64 / (m + 1) as f64;
    }
    Ok(total)
}

/// `Π_{j<n} (a + j) / (b + j)`, i.e. `(a)_n / (b)_n` without forming either factorial.
fn pochhammer_ratio(a: f64, b: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, j| acc * (a + j as f64) / (b + j as f64))
}

/// Exponent data for the Wallis-type formulas: `∫ sin^{qn+r}` or `∫ cos^{pn+r}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallisQuery {
    pub params: ParamPair,
    pub n: u32,
    pub r: f64,
}

impl WallisQuery {
    pub fn new(params: ParamPair, n: u32, r: f64) -> Self {
        Self { params, n, r }
    }

    /// `qn + r`
    pub fn sin_exponent(&self) -> f64 {
        self.params.q() * self.n as f64 + self.r
    }

    /// `pn + r`
    pub fn cos_exponent(&self) -> f64 {
        self.params.p() * self.n as f64 + self.r
    }
}

/// `∫_0^{π_{p,q}/2} sin^{qn+r} = u (1/u)_n / (q (1/p* + 1/u)_n) · π_{p,u}/2`
/// with `1/u = (r+1)/q`, for `r ∈ (-1, q-1]`.
///
/// `r = q - 1` gives `u = 1` and uses `π_{p,1} = 2p*`.
pub fn wallis_sin(query: WallisQuery) -> Result<f64> {
    let WallisQuery { params, n, r } = query;
    let (p, q) = (params.p(), params.q());
    if !(r > -1.0 && r <= q - 1.0) {
        return Err(Error::domain(format!(
            "sine Wallis offset r must lie in (-1, {}], got {r}",
            q - 1.0
        )));
    }
    let inv_pc = 1.0 - 1.0 / p;
    if r == q - 1.0 {
        let pi_p1 = pi_pq(ParamPair::extended(p, 1.0)?);
        return Ok(pochhammer_ratio(1.0, inv_pc + 1.0, n) / q * pi_p1 / 2.0);
    }
    let inv_u = (r + 1.0) / q;
    let u = 1.0 / inv_u;
    let pi_pu = pi_pq(ParamPair::new(p, u)?);
    Ok(u * pochhammer_ratio(inv_u, inv_pc + inv_u, n) / q * pi_pu / 2.0)
}

/// `∫_0^{π_{p,q}/2} cos^{pn+r} = (1/v)_n / (1/v + 1/q)_n · π_{v*,q}/2`
/// with `1/v = (r+p-1)/p`, for `r ∈ (1-p, 1]`.
///
/// `r = 1` gives `v* = ∞` and uses `π_{∞,q} = 2`.
pub fn wallis_cos(query: WallisQuery) -> Result<f64> {
    let WallisQuery { params, n, r } = query;
    let (p, q) = (params.p(), params.q());
    if !(r > 1.0 - p && r <= 1.0) {
        return Err(Error::domain(format!(
            "cosine Wallis offset r must lie in ({}, 1], got {r}",
            1.0 - p
        )));
    }
    let inv_q = 1.0 / q;
    if r == 1.0 {
        let pi_inf = pi_pq(ParamPair::extended(f64::INFINITY, q)?);
        return Ok(pochhammer_ratio(1.0, 1.0 + inv_q, n) * pi_inf / 2.0);
    }
    let inv_v = (r + p - 1.0) / p;
    let v_conj = conjugate(1.0 / inv_v);
    let pi_vq = pi_pq(ParamPair::new(v_conj, q)?);
    Ok(pochhammer_ratio(inv_v, inv_v + inv_q, n) * pi_vq / 2.0)
}

/// The six specializations of the Wallis-type formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallisCase {
    /// `∫ sin^{qn}`
    SinQn,
    /// `∫ sin^{qn+q-2}`
    SinQnQm2,
    /// `∫ sin^{qn+q-1}`
    SinQnQm1,
    /// `∫ cos^{pn}`
    CosPn,
    /// `∫ cos^{pn+2-p}`
    CosPn2mp,
    /// `∫ cos^{pn+1}`
    CosPn1,
}

impl WallisCase {
    pub const ALL: [WallisCase; 6] = [
        WallisCase::SinQn,
        WallisCase::SinQnQm2,
        WallisCase::SinQnQm1,
        WallisCase::CosPn,
        WallisCase::CosPn2mp,
        WallisCase::CosPn1,
    ];

    pub fn is_sine(self) -> bool {
        matches!(self, Self::SinQn | Self::SinQnQm2 | Self::SinQnQm1)
    }

    /// The offset `r` this case corresponds to in [`wallis_sin`] / [`wallis_cos`].
    pub fn offset(self, params: ParamPair) -> f64 {
        match self {
            Self::SinQn | Self::CosPn => 0.0,
            Self::SinQnQm2 => params.q() - 2.0,
            Self::SinQnQm1 => params.q() - 1.0,
            Self::CosPn2mp => 2.0 - params.p(),
            Self::CosPn1 => 1.0,
        }
    }
}

/// Evaluates one of the six special Wallis formulas directly from Pochhammer
/// ratios and generalized π values.
pub fn wallis_special_cases(params: ParamPair, n: u32, which: WallisCase) -> Result<f64> {
    let (p, q) = (params.p(), params.q());
    let (inv_p, inv_q) = (1.0 / p, 1.0 / q);
    let inv_pc = 1.0 - inv_p;
    let inv_qc = 1.0 - inv_q;
    let half_pi = |a: f64, b: f64| -> Result<f64> { Ok(0.5 * pi_pq(ParamPair::new(a, b)?)) };
    Ok(match which {
        WallisCase::SinQn => pochhammer_ratio(inv_q, inv_pc + inv_q, n) * half_pi(p, q)?,
        WallisCase::SinQnQm2 => {
            pochhammer_ratio(inv_qc, inv_pc + inv_qc, n) / (q - 1.0) * half_pi(p, params.q_conj())?
        }
        WallisCase::SinQnQm1 => pochhammer_ratio(1.0, inv_pc + 1.0, n) * params.p_conj() / q,
        WallisCase::CosPn => pochhammer_ratio(inv_pc, inv_pc + inv_q, n) * half_pi(p, q)?,
        WallisCase::CosPn2mp => {
            pochhammer_ratio(inv_p, inv_p + inv_q, n) * half_pi(params.p_conj(), q)?
        }
        WallisCase::CosPn1 => pochhammer_ratio(1.0, 1.0 + inv_q, n),
    })
}

/// `∫_0^{ϖ/2} sl^{4n+residue}` from the explicit rational products.
pub fn lemniscate_wallis(n: u32, residue: u32) -> Result<f64> {
    let varpi = lemniscate_constant();
    let prod = |f: &dyn Fn(f64) -> f64| (1..=n).fold(1.0, |acc, j| acc * f(j as f64));
    Ok(match residue {
        0 => prod(&|j| (4.0 * j - 3.0) / (4.0 * j - 1.0)) * varpi / 2.0,
        1 => prod(&|j| (2.0 * j - 1.0) / (2.0 * j)) * FRAC_PI_4,
        2 => prod(&|j| (4.0 * j - 1.0) / (4.0 * j + 1.0)) * FRAC_PI_2 / varpi,
        3 => prod(&|j| 2.0 * j / (2.0 * j + 1.0)) * 0.5,
        _ => {
            return Err(Error::domain(format!(
                "residue must be one of 0, 1, 2, 3, got {residue}"
            )))
        }
    })
}

/// The lemniscate constant `ϖ = π_{2,4}`.
pub fn lemniscate_constant() -> f64 {
    pi_pq(ParamPair::new(2.0, 4.0).expect("valid pair"))
}

/// The six displayed Wallis products for `sin`/`cos` and the lemniscate sine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalWallis {
    /// `∫_0^{π/2} sin^{2n}`
    SinEven,
    /// `∫_0^{π/2} sin^{2n+1}`
    SinOdd,
    /// `∫_0^{ϖ/2} sl^{4n+residue}`
    Lemniscate(u32),
}

impl ClassicalWallis {
    pub const ALL: [ClassicalWallis; 6] = [
        ClassicalWallis::SinEven,
        ClassicalWallis::SinOdd,
        ClassicalWallis::Lemniscate(0),
        ClassicalWallis::Lemniscate(1),
        ClassicalWallis::Lemniscate(2),
        ClassicalWallis::Lemniscate(3),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::SinEven => "sin_2n",
            Self::SinOdd => "sin_2n+1",
            Self::Lemniscate(0) => "sl_4n",
            Self::Lemniscate(1) => "sl_4n+1",
            Self::Lemniscate(2) => "sl_4n+2",
            Self::Lemniscate(_) => "sl_4n+3",
        }
    }

    /// `(p, q)` of the underlying function: `(2, 2)` or `(2, 4)`.
    pub fn params(self) -> ParamPair {
        match self {
            Self::SinEven | Self::SinOdd => ParamPair::new(2.0, 2.0),
            Self::Lemniscate(_) => ParamPair::new(2.0, 4.0),
        }
        .expect("valid pair")
    }

    pub fn exponent(self, n: u32) -> u32 {
        match self {
            Self::SinEven => 2 * n,
            Self::SinOdd => 2 * n + 1,
            Self::Lemniscate(residue) => 4 * n + residue,
        }
    }

    /// Value of the displayed product.
    pub fn value(self, n: u32) -> Result<f64> {
        let prod = |f: &dyn Fn(f64) -> f64| (1..=n).fold(1.0, |acc, j| acc * f(j as f64));
        match self {
            Self::SinEven => Ok(prod(&|j| (2.0 * j - 1.0) / (2.0 * j)) * FRAC_PI_2),
            Self::SinOdd => Ok(prod(&|j| 2.0 * j / (2.0 * j + 1.0))),
            Self::Lemniscate(residue) => lemniscate_wallis(n, residue),
        }
    }
}

/// Partial product `Π_{n=1}^N (1 - 1/(pn(qn + 1 - q/p)))^{-1}`, which
/// increases to `π_{p,q}/2`.
pub fn pi_product_partial(params: ParamPair, n_terms: u64) -> Result<f64> {
    let partials = pi_product_partials(params, n_terms)?;
    Ok(*partials.last().expect("at least one term"))
}

/// All partial products for `N = 1..=n_terms`.
pub fn pi_product_partials(params: ParamPair, n_terms: u64) -> Result<Vec<f64>> {
    if n_terms == 0 {
        return Err(Error::domain("the product needs at least one factor"));
    }
    let (p, q) = (params.p(), params.q());
    let mut acc = 1.0;
    let mut out = Vec::with_capacity(n_terms as usize);
    for n in 1..=n_terms {
        let n = n as f64;
        let denom = p * n * (q * n + 1.0 - q / p);
        let factor = denom / (denom - 1.0);
        debug_assert!(factor > 1.0 && factor.is_finite());
        acc *= factor;
        out.push(acc);
    }
    Ok(out)
}

/// Arguments of the generalized complete elliptic integrals `K_{p,q,r}(k)`
/// and `E_{p,q,r}(k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticQuery {
    pub params: ParamPair,
    pub r: f64,
    pub k: f64,
}

impl EllipticQuery {
    pub fn new(params: ParamPair, r: f64, k: f64) -> Result<Self> {
        if !(r > 1.0 && r.is_finite()) {
            return Err(Error::domain(format!("r must lie in (1, inf), got {r}")));
        }
        if !(0.0..1.0).contains(&k) {
            return Err(Error::domain(format!(
                "modulus k must lie in [0, 1), got {k}"
            )));
        }
        Ok(Self { params, r, k })
    }

    /// `k' = (1 - k^q)^{1/r}`
    pub fn complementary_modulus(&self) -> f64 {
        (1.0 - self.k.powf(self.params.q())).powf(1.0 / self.r)
    }
}

/// `K_{p,q,r}(k) = (π_{p,q}/2) F(1/q, 1/r; 1/p* + 1/q; k^q)`.
pub fn elliptic_k(query: EllipticQuery) -> Result<f64> {
    let z = query.k.powf(query.params.q());
    elliptic_k_at(query.params, query.r, z, 1.0 - z)
}

/// `E_{p,q,r}(k) = (π_{p,q}/2) F(1/q, -1/r*; 1/p* + 1/q; k^q)`.
pub fn elliptic_e(query: EllipticQuery) -> Result<f64> {
    let z = query.k.powf(query.params.q());
    elliptic_e_at(query.params, query.r, z, 1.0 - z)
}

/// `K` with its hypergeometric argument `z = k^q` and `1 - z` given directly.
fn elliptic_k_at(params: ParamPair, r: f64, z: f64, zc: f64) -> Result<f64> {
    let inv_q = 1.0 / params.q();
    let hyper = HyperParams::new(inv_q, 1.0 / r, 1.0 - 1.0 / params.p() + inv_q)?;
    Ok(0.5 * pi_pq(params) * hyp2f1_split(hyper, z, zc)?)
}

fn elliptic_e_at(params: ParamPair, r: f64, z: f64, zc: f64) -> Result<f64> {
    let inv_q = 1.0 / params.q();
    let hyper = HyperParams::new(inv_q, -(1.0 - 1.0 / r), 1.0 - 1.0 / params.p() + inv_q)?;
    Ok(0.5 * pi_pq(params) * hyp2f1_split(hyper, z, zc)?)
}

/// Both sides of Elliott's identity
///
/// `E_{p,q,r*}(k) K_{p,r,q*}(k') + K_{p,q,r*}(k) E_{p,r,q*}(k') - K_{p,q,r*}(k) K_{p,r,q*}(k')
///  = π_{p,q} π_{s,r} / 4`, with `k' = (1 - k^q)^{1/r}` and `1/s = 1/p - 1/q`.
///
/// Requires `p <= q`; `p = q` gives `s = ∞`.
pub fn elliott_sides(params: ParamPair, r: f64, k: f64) -> Result<(f64, f64)> {
    let (p, q) = (params.p(), params.q());
    if p > q {
        return Err(Error::domain(format!(
            "Elliott's identity needs p <= q so that 1/s = 1/p - 1/q >= 0, got p = {p}, q = {q}"
        )));
    }
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::domain(format!(
            "modulus k must lie in (0, 1), got {k}"
        )));
    }
    if !(r > 1.0 && r.is_finite()) {
        return Err(Error::domain(format!("r must lie in (1, inf), got {r}")));
    }
    let r_conj = conjugate(r);
    let q_conj = conjugate(q);
    let dual = ParamPair::new(p, r)?;
    let kq = k.powf(q);
    // k'^r = 1 - k^q
    let (z, zc) = (kq, 1.0 - kq);
    let k_k = elliptic_k_at(params, r_conj, z, zc)?;
    let e_k = elliptic_e_at(params, r_conj, z, zc)?;
    let k_kp = elliptic_k_at(dual, q_conj, zc, z)?;
    let e_kp = elliptic_e_at(dual, q_conj, zc, z)?;
    let lhs = e_k * k_kp + k_k * e_kp - k_k * k_kp;

    let inv_s = 1.0 / p - 1.0 / q;
    let s = if inv_s == 0.0 {
        f64::INFINITY
    } else {
        1.0 / inv_s
    };
    let rhs = pi_pq(params) * pi_pq(ParamPair::extended(s, r)?) / 4.0;
    Ok((lhs, rhs))
}

/// `|LHS - RHS|` of Elliott's identity; see [`elliott_sides`].
pub fn elliott_residual(params: ParamPair, r: f64, k: f64) -> Result<f64> {
    let (lhs, rhs) = elliott_sides(params, r, k)?;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const GRID: [f64; 5] = [1.5, 2.0, 2.5, 3.0, 4.0];

    fn pair(p: f64, q: f64) -> ParamPair {
        ParamPair::new(p, q).unwrap()
    }

    #[test]
    fn lemniscate_primitive() {
        let params = pair(2.0, 4.0);
        let varpi = lemniscate_constant();
        for &x in &[0.2, 0.7, 1.0, 1.3] {
            let sl = crate::gtf::sin_pq(params, x).unwrap();
            let want = 0.5 * (sl * sl).asin();
            assert!((primitive_sin_cos(params, 1.0, 0.0, x).unwrap() - want).abs() < 1e-14);
        }
        assert_relative_eq!(
            primitive_sin_cos(params, 1.0, 0.0, varpi / 2.0).unwrap(),
            FRAC_PI_4,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            definite_sin_cos(params, 1.0, 0.0).unwrap(),
            FRAC_PI_4,
            max_relative = 1e-14
        );
    }

    #[test]
    fn primitive_trivial_cases() {
        assert_eq!(
            primitive_sin_cos(pair(3.0, 1.7), 0.4, -1.2, 0.0).unwrap(),
            0.0
        );
        assert_relative_eq!(
            primitive_sin_cos(pair(2.0, 2.0), 2.0, 0.0, FRAC_PI_2).unwrap(),
            FRAC_PI_4,
            max_relative = 1e-14
        );
        // ∫_0^x sin² = x/2 - sin(2x)/4
        let x = 1.1_f64;
        assert!(
            (primitive_sin_cos(pair(2.0, 2.0), 2.0, 0.0, x).unwrap()
                - (x / 2.0 - (2.0 * x).sin() / 4.0))
                .abs()
                < 1e-14
        );
        assert_relative_eq!(
            definite_sin_cos(pair(2.0, 2.0), 0.0, 0.0).unwrap(),
            FRAC_PI_2,
            max_relative = 1e-15
        );
    }

    #[test]
    fn primitive_domain_errors() {
        let params = pair(2.0, 3.0);
        assert!(primitive_sin_cos(params, -1.0, 0.0, 0.5).is_err());
        assert!(primitive_sin_cos(params, 0.0, -1.0, 0.5).is_err());
        assert!(primitive_sin_cos(params, 0.0, 0.0, 10.0).is_err());
        assert!(definite_sin_cos(params, -2.0, 0.0).is_err());
    }

    #[test]
    fn primitive_continuous_at_top() {
        // Bounded integrands: the gap to the beta value is at most the last sliver.
        for &(p, q, k, l) in &[
            (2.0, 4.0, 1.0, 0.0),
            (3.0, 1.5, 0.2, 0.5),
            (1.5, 2.5, -0.5, 2.0),
        ] {
            let params = pair(p, q);
            let half = 0.5 * pi_pq(params);
            let top = definite_sin_cos(params, k, l).unwrap();
            let near = primitive_sin_cos(params, k, l, half * (1.0 - 1e-12)).unwrap();
            assert!(
                (near - top).abs() < 1e-9,
                "{p} {q} {k} {l}: {near} vs {top}"
            );
        }
    }

    #[test]
    fn finite_sum_examples() {
        let params = pair(2.0, 2.0);
        assert_relative_eq!(
            primitive_finite_sum(params, 0.0, 1, FRAC_PI_2).unwrap(),
            2.0 / 3.0,
            max_relative = 1e-15
        );
        let x = 0.8;
        let s = crate::gtf::sin_pq(pair(3.0, 2.5), x).unwrap();
        assert_relative_eq!(
            primitive_finite_sum(pair(3.0, 2.5), 0.7, 0, x).unwrap(),
            s.powf(1.7) / 1.7,
            max_relative = 1e-15
        );
        let params = pair(2.0, 4.0);
        let lhs = primitive_finite_sum(params, 1.0, 2, 1.0).unwrap();
        let rhs = primitive_sin_cos(params, 1.0, 5.0, 1.0).unwrap();
        assert!((lhs - rhs).abs() < 1e-11);
    }

    #[test]
    fn finite_sum_matches_hypergeometric_on_grid() {
        for &p in &GRID {
            for &q in &GRID {
                let params = pair(p, q);
                let half = 0.5 * pi_pq(params);
                for n in 0..4 {
                    for &k in &[-0.5, 0.0, 1.3] {
                        for &frac in &[0.1, 0.5, 0.9, 0.999] {
                            let x = half * frac;
                            let a = primitive_finite_sum(params, k, n, x).unwrap();
                            let b = primitive_sin_cos(params, k, p * n as f64 + 1.0, x).unwrap();
                            assert!(
                                (a - b).abs() <= 1e-11,
                                "p={p} q={q} n={n} k={k} x={x}: {a} {b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classical_wallis() {
        let params = pair(2.0, 2.0);
        let mut even = FRAC_PI_2;
        let mut odd = 1.0;
        for n in 1..=8u32 {
            let nf = n as f64;
            even *= (2.0 * nf - 1.0) / (2.0 * nf);
            odd *= 2.0 * nf / (2.0 * nf + 1.0);
            let q = WallisQuery::new(params, n, 0.0);
            assert!((wallis_sin(q).unwrap() - even).abs() <= 1e-13);
            assert!((wallis_cos(WallisQuery::new(params, n, 0.0)).unwrap() - even).abs() <= 1e-13);
            assert!((wallis_sin(WallisQuery::new(params, n, 1.0)).unwrap() - odd).abs() <= 1e-13);
            assert!((wallis_cos(WallisQuery::new(params, n, 1.0)).unwrap() - odd).abs() <= 1e-13);
        }
    }

    #[test]
    fn lemniscate_wallis_examples() {
        let varpi = lemniscate_constant();
        let sl = pair(2.0, 4.0);
        assert_relative_eq!(
            wallis_sin(WallisQuery::new(sl, 1, 1.0)).unwrap(),
            PI / 8.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            wallis_sin(WallisQuery::new(sl, 1, 2.0)).unwrap(),
            0.6 * PI / (2.0 * varpi),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            lemniscate_wallis(1, 0).unwrap(),
            varpi / 6.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            lemniscate_wallis(1, 2).unwrap(),
            0.6 * PI / (2.0 * varpi),
            max_relative = 1e-15
        );
        assert_eq!(lemniscate_wallis(0, 3).unwrap(), 0.5);
        assert!(lemniscate_wallis(2, 4).is_err());
        for n in 0..6 {
            for residue in 0..4 {
                let general = wallis_sin(WallisQuery::new(sl, n, residue as f64)).unwrap();
                let direct = lemniscate_wallis(n, residue).unwrap();
                assert_relative_eq!(general, direct, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn wallis_range_errors() {
        let params = pair(3.0, 2.0);
        assert!(wallis_sin(WallisQuery::new(params, 1, -1.0)).is_err());
        assert!(wallis_sin(WallisQuery::new(params, 1, 1.01)).is_err());
        assert!(wallis_cos(WallisQuery::new(params, 1, -2.0)).is_err());
        assert!(wallis_cos(WallisQuery::new(params, 1, 1.5)).is_err());
        assert_eq!(wallis_cos(WallisQuery::new(params, 0, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn special_cases_agree_with_general_formulas() {
        for &p in &GRID {
            for &q in &GRID {
                let params = pair(p, q);
                for n in 0..6 {
                    for case in WallisCase::ALL {
                        let r = case.offset(params);
                        let query = WallisQuery::new(params, n, r);
                        let general = if case.is_sine() {
                            if !(r > -1.0) {
                                continue;
                            }
                            wallis_sin(query).unwrap()
                        } else {
                            wallis_cos(query).unwrap()
                        };
                        let special = wallis_special_cases(params, n, case).unwrap();
                        assert_relative_eq!(special, general, max_relative = 1e-13);
                    }
                }
            }
        }
        assert_relative_eq!(
            wallis_special_cases(pair(2.0, 2.0), 1, WallisCase::SinQn).unwrap(),
            0.5 * FRAC_PI_2,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            wallis_special_cases(pair(2.0, 4.0), 1, WallisCase::SinQn).unwrap(),
            lemniscate_constant() / 6.0,
            max_relative = 1e-14
        );
        assert_eq!(
            wallis_special_cases(pair(2.7, 1.9), 0, WallisCase::CosPn1).unwrap(),
            1.0
        );
    }

    #[test]
    fn sine_and_cosine_recurrences() {
        for &p in &GRID {
            for &q in &GRID {
                let params = pair(p, q);
                let pc = params.p_conj();
                for n in 1..5u32 {
                    for &r in &[-0.5, 0.5 * (q - 1.0), q - 1.0] {
                        let k = q * n as f64 + r;
                        let i_k = definite_sin_cos(params, k, 0.0).unwrap();
                        let i_prev = definite_sin_cos(params, k - q, 0.0).unwrap();
                        let factor = (k - q + 1.0) / (q / pc + k - q + 1.0);
                        assert_relative_eq!(i_k, factor * i_prev, max_relative = 1e-12);
                        assert_relative_eq!(
                            wallis_sin(WallisQuery::new(params, n, r)).unwrap(),
                            i_k,
                            max_relative = 1e-12
                        );
                    }
                    for &r in &[0.5 * (1.0 - p), 0.0, 1.0] {
                        let l = p * n as f64 + r;
                        let j_l = definite_sin_cos(params, 0.0, l).unwrap();
                        let j_prev = definite_sin_cos(params, 0.0, l - p).unwrap();
                        let factor = (l - 1.0) / (l - 1.0 + p / q);
                        assert_relative_eq!(j_l, factor * j_prev, max_relative = 1e-12);
                        assert_relative_eq!(
                            wallis_cos(WallisQuery::new(params, n, r)).unwrap(),
                            j_l,
                            max_relative = 1e-12
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_ordering_of_sine_moments() {
        for &p in &GRID {
            for &q in &GRID {
                let params = pair(p, q);
                for n in 1..8u32 {
                    let upper = wallis_sin(WallisQuery::new(params, n, q - 1.0)).unwrap();
                    let mid = wallis_sin(WallisQuery::new(params, n, 0.0)).unwrap();
                    let lower = wallis_sin(WallisQuery::new(params, n - 1, q - 1.0)).unwrap();
                    assert!(0.0 < upper && upper < mid && mid < lower);
                }
            }
        }
    }

    #[test]
    fn product_partials() {
        assert_relative_eq!(
            pi_product_partial(pair(2.0, 2.0), 1).unwrap(),
            4.0 / 3.0,
            max_relative = 1e-15
        );
        let seq = pi_product_partials(pair(2.0, 4.0), 2000).unwrap();
        assert!(seq.windows(2).all(|w| w[1] > w[0]));
        let limit = lemniscate_constant() / 2.0;
        assert!(seq.iter().all(|&v| v < limit));
        assert!((seq.last().unwrap() - limit).abs() < 1e-3);
        // The lemniscate form of the factor.
        let direct: f64 = (1..=2000)
            .map(|n| {
                let n = n as f64;
                1.0 / (1.0 - 1.0 / (2.0 * n * (4.0 * n - 1.0)))
            })
            .product();
        assert_relative_eq!(*seq.last().unwrap(), direct, max_relative = 1e-12);
        assert!(pi_product_partial(pair(2.0, 2.0), 0).is_err());
    }

    #[test]
    fn elliptic_examples() {
        let params = pair(2.7, 1.8);
        let half = 0.5 * pi_pq(params);
        let q0 = EllipticQuery::new(params, 3.0, 0.0).unwrap();
        assert_eq!(elliptic_k(q0).unwrap(), half);
        assert_eq!(elliptic_e(q0).unwrap(), half);
        let classical = EllipticQuery::new(pair(2.0, 2.0), 2.0, 0.5).unwrap();
        assert_relative_eq!(
            elliptic_k(classical).unwrap(),
            1.685_750_354_812_596,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            elliptic_e(classical).unwrap(),
            1.467_462_209_339_427,
            max_relative = 1e-13
        );
        assert!(EllipticQuery::new(params, 3.0, 1.0).is_err());
        assert!(EllipticQuery::new(params, 1.0, 0.5).is_err());
        assert_relative_eq!(
            classical.complementary_modulus(),
            0.75_f64.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn elliott_examples() {
        let (lhs, rhs) = elliott_sides(pair(2.0, 2.0), 2.0, 0.5).unwrap();
        assert_relative_eq!(rhs, FRAC_PI_2, max_relative = 1e-15);
        assert!((lhs - rhs).abs() <= 1e-9);
        assert!(elliott_residual(pair(2.0, 3.0), 2.0, 0.3).unwrap() <= 1e-7);
        assert!(elliott_residual(pair(1.5, 2.0), 3.0, 0.7).unwrap() <= 1e-7);
        assert!(elliott_residual(pair(3.0, 2.0), 2.0, 0.5).is_err());
    }
}
