//! Independent quadrature evaluations of the defining integrals.
//!
//! Nothing here calls the incomplete beta function or the hypergeometric
//! series; moments over the full quarter period are computed in the
//! variable `s = sin_{p,q} t`, where `dt = (1 - s^q)^{-1/p} ds`.

use crate::error::{Error, Result};
use crate::gtf::{pi_pq, sin_cos_pq, ParamPair};
use crate::quadrature::{integrate, integrate_with_offsets};

/// Absolute tolerance used by the oracles.
pub const ORACLE_TOL: f64 = 1e-12;

/// `1 - s^q` for `s = 1 - d`, without cancellation when `d` is tiny.
fn one_minus_pow(q: f64, d: f64) -> f64 {
    -(q * (-d).ln_1p()).exp_m1()
}

/// `∫_0^x (1 - t^q)^{-1/p} dt` for `x ∈ [0, 1]`.
pub fn asin_by_quadrature(p: f64, q: f64, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x must lie in [0, 1], got {x}")));
    }
    let gap = 1.0 - x;
    let r = integrate_with_offsets(
        |_, _, to_x| one_minus_pow(q, gap + to_x).powf(-1.0 / p),
        0.0,
        x,
        ORACLE_TOL,
    )?;
    Ok(r.value)
}

/// `π_{p,q} = 2 ∫_0^1 (1 - t^q)^{-1/p} dt`.
pub fn pi_by_quadrature(p: f64, q: f64) -> Result<f64> {
    Ok(2.0 * asin_by_quadrature(p, q, 1.0)?)
}

/// `sin_{p,q} x` by bisection on [`asin_by_quadrature`].
pub fn sin_by_bisection(p: f64, q: f64, x: f64) -> Result<f64> {
    let half = 0.5 * pi_by_quadrature(p, q)?;
    if !(0.0..=half).contains(&x) {
        return Err(Error::domain(format!("x must lie in [0, {half}], got {x}")));
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > 4.0 * f64::EPSILON {
        let mid = 0.5 * (lo + hi);
        if asin_by_quadrature(p, q, mid)? < x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `∫_0^{π_{p,q}/2} sin^k cos^l dt = ∫_0^1 s^k (1 - s^q)^{(l-1)/p} ds`.
pub fn moment_by_quadrature(params: ParamPair, k: f64, l: f64) -> Result<f64> {
    let (p, q) = (params.p(), params.q());
    let r = integrate_with_offsets(
        |_, s, to_one| s.powf(k) * one_minus_pow(q, to_one).powf((l - 1.0) / p),
        0.0,
        1.0,
        ORACLE_TOL,
    )?;
    Ok(r.value)
}

/// `∫_0^x sin^k cos^l dt` integrated in `t`, evaluating the functions pointwise.
pub fn primitive_by_quadrature(params: ParamPair, k: f64, l: f64, x: f64) -> Result<f64> {
    let half = 0.5 * pi_pq(params);
    if !(0.0..=half).contains(&x) {
        return Err(Error::domain(format!("x must lie in [0, {half}], got {x}")));
    }
    let r = integrate(
        |t| sin_cos_pq(params, t).map_or(f64::NAN, |(s, c)| s.powf(k) * c.powf(l)),
        0.0,
        x,
        ORACLE_TOL,
    )?;
    Ok(r.value)
}

/// `K_{p,q,r}(k) = ∫_0^1 (1 - k^q s^q)^{-1/r} (1 - s^q)^{-1/p} ds`.
pub fn elliptic_k_by_quadrature(params: ParamPair, r: f64, k: f64) -> Result<f64> {
    elliptic_by_quadrature(params, -1.0 / r, k)
}

/// `E_{p,q,r}(k) = ∫_0^1 (1 - k^q s^q)^{1/r*} (1 - s^q)^{-1/p} ds`.
pub fn elliptic_e_by_quadrature(params: ParamPair, r: f64, k: f64) -> Result<f64> {
    elliptic_by_quadrature(params, 1.0 - 1.0 / r, k)
}

fn elliptic_by_quadrature(params: ParamPair, power: f64, k: f64) -> Result<f64> {
    let (p, q) = (params.p(), params.q());
    let kq = k.powf(q);
    let r = integrate_with_offsets(
        |_, s, to_one| (1.0 - kq * s.powf(q)).powf(power) * one_minus_pow(q, to_one).powf(-1.0 / p),
        0.0,
        1.0,
        ORACLE_TOL,
    )?;
    Ok(r.value)
}
