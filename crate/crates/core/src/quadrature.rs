//! Numerical integration oracle.
//!
//! Tanh-sinh (double-exponential) quadrature on each interval, refined by
//! halving the step, with adaptive bisection of the interval as a fallback
//! when a single transform does not converge. The node map clusters
//! abscissae at both endpoints so algebraic endpoint singularities with
//! exponent above -1 are integrated at a geometric rate.
//!
//! This module deliberately depends on nothing but `error`: every
//! closed-form identity in the crate is checked against it.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Default absolute tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Hard cap on integrand evaluations per call.
pub const MAX_EVALUATIONS: usize = 2_000_000;

const MAX_LEVEL: u32 = 10;
const MIN_LEVEL: u32 = 3;
const MAX_DEPTH: u32 = 24;
// Beyond |t| = 6.1 the distance to the nearest endpoint is below 1e-300.
const T_MAX: f64 = 6.1;

/// Value of an integral with its a-posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Disagreement between the last two step halvings (summed over subintervals).
    pub err_estimate: f64,
    pub evaluations: usize,
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Nodes that round onto an endpoint are skipped, so `f` is never
/// evaluated exactly at `a` or `b`.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    integrate_with_offsets(
        |x, from_a, to_b| {
            if from_a <= 0.0 || to_b <= 0.0 || x <= a || x >= b {
                0.0
            } else {
                f(x)
            }
        },
        a,
        b,
        tol,
    )
}

/// Like [`integrate`], but the integrand receives `(x, x - a, b - x)` with
/// both offsets computed without cancellation.
///
/// Integrands that are singular at `b` should use `b - x` rather than
/// recomputing it from `x`, which loses all precision within an ulp of `b`.
pub fn integrate_with_offsets<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::domain(format!(
            "integration bounds must be finite with a <= b, got [{a}, {b}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    let mut evaluations = 0usize;
    let outcome = adaptive(&f, a, b, a, b, tol, 0, &mut evaluations)?;
    let result = QuadResult {
        value: outcome.value,
        err_estimate: outcome.err,
        evaluations,
    };
    if outcome.converged {
        Ok(result)
    } else {
        Err(Error::ToleranceNotMet {
            value: result.value,
            err_estimate: result.err_estimate,
            tol,
        })
    }
}

/// `∫_0^upper t^(a_exp - 1) (1 - t)^(b_exp - 1) dt` to tolerance `1e-12`.
pub fn integrate_singular_beta(a_exp: f64, b_exp: f64, upper: f64) -> Result<QuadResult> {
    if !(a_exp > 0.0 && b_exp > 0.0) {
        return Err(Error::domain(format!(
            "beta exponents must be positive, got ({a_exp}, {b_exp})"
        )));
    }
    if !(0.0..=1.0).contains(&upper) {
        return Err(Error::domain(format!(
            "upper limit must lie in [0, 1], got {upper}"
        )));
    }
    let gap = 1.0 - upper;
    integrate_with_offsets(
        |_, t, to_upper| t.powf(a_exp - 1.0) * (gap + to_upper).powf(b_exp - 1.0),
        0.0,
        upper,
        1e-12,
    )
}

struct Outcome {
    value: f64,
    err: f64,
    converged: bool,
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F>(
    f: &F,
    lo: f64,
    hi: f64,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    evaluations: &mut usize,
) -> Result<Outcome>
where
    F: Fn(f64, f64, f64) -> f64,
{
    let single = tanh_sinh(f, lo, hi, a, b, tol, evaluations)?;
    if single.converged || depth >= MAX_DEPTH || *evaluations >= MAX_EVALUATIONS {
        return Ok(single);
    }
    let mid = 0.5 * (lo + hi);
    if mid <= lo || mid >= hi {
        return Ok(single);
    }
    let left = adaptive(f, lo, mid, a, b, 0.5 * tol, depth + 1, evaluations)?;
    let right = adaptive(f, mid, hi, a, b, 0.5 * tol, depth + 1, evaluations)?;
    Ok(Outcome {
        value: left.value + right.value,
        err: left.err + right.err,
        converged: left.converged && right.converged,
    })
}

/// One tanh-sinh pass over `[lo, hi]`, a subinterval of the original `[a, b]`.
fn tanh_sinh<F>(
    f: &F,
    lo: f64,
    hi: f64,
    a: f64,
    b: f64,
    tol: f64,
    evaluations: &mut usize,
) -> Result<Outcome>
where
    F: Fn(f64, f64, f64) -> f64,
{
    let width = hi - lo;
    let lo_offset = lo - a;
    let hi_offset = b - hi;

    let mut node = |t: f64| -> Result<f64> {
        let y = FRAC_PI_2 * t.sinh();
        let left = 1.0 / (1.0 + (-2.0 * y).exp());
        let right = 1.0 / (1.0 + (2.0 * y).exp());
        let weight = width * std::f64::consts::PI * t.cosh() * left * right;
        let from_lo = width * left;
        let to_hi = width * right;
        if weight == 0.0 || from_lo == 0.0 || to_hi == 0.0 {
            return Ok(0.0);
        }
        let x = if left <= right {
            lo + from_lo
        } else {
            hi - to_hi
        };
        *evaluations += 1;
        if *evaluations > MAX_EVALUATIONS {
            return Err(Error::ToleranceNotMet {
                value: f64::NAN,
                err_estimate: f64::INFINITY,
                tol,
            });
        }
        let fx = f(x, lo_offset + from_lo, hi_offset + to_hi);
        if !fx.is_finite() {
            return Err(Error::domain(format!("integrand is not finite at x = {x}")));
        }
        Ok(weight * fx)
    };

    let mut h = 1.0;
    let mut sum = node(0.0)?;
    let mut k = 1.0;
    while k * h <= T_MAX {
        sum += node(k * h)? + node(-k * h)?;
        k += 1.0;
    }
    let mut estimate = h * sum;
    let mut err = f64::INFINITY;

    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut t = h;
        while t <= T_MAX {
            sum += node(t)? + node(-t)?;
            t += 2.0 * h;
        }
        let refined = h * sum;
        err = (refined - estimate).abs();
        estimate = refined;
        if level >= MIN_LEVEL && err <= tol {
            return Ok(Outcome {
                value: estimate,
                err,
                converged: true,
            });
        }
    }
    Ok(Outcome {
        value: estimate,
        err,
        converged: false,
    })
}
