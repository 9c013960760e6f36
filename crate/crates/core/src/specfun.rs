//! Scalar special functions: log-gamma, beta, Pochhammer symbols, the
//! regularized incomplete beta function and its inverse, and the Gauss
//! hypergeometric function on `[0, 1]`.
//!
//! Everything here is `f64` and pure. Arguments are assumed positive where
//! the gamma function is involved; no reflection formula is provided.

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const CF_TINY: f64 = 1e-300;
const CF_MAX_ITER: usize = 20_000;

/// Iteration cap for the hypergeometric series.
pub const HYP2F1_MAX_TERMS: usize = 100_000;
/// Absolute bound the hypergeometric tail must certify before the sum is accepted.
pub const HYP2F1_TAIL_TOL: f64 = 1e-13;

const INV_MAX_ITER: usize = 200;

/// Parameters `(a, b, c)` of the Gauss hypergeometric function `F(a, b; c; x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HyperParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain("hypergeometric parameters must be finite"));
        }
        if c <= 0.0 && c == c.round() {
            return Err(Error::domain(format!(
                "c = {c} is a nonpositive integer; (c)_n vanishes"
            )));
        }
        Ok(Self { a, b, c })
    }
}

/// A pair of strictly positive beta-function arguments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaArgs {
    pub x: f64,
    pub y: f64,
}

impl BetaArgs {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
            return Err(Error::domain(format!(
                "beta arguments must be positive and finite, got ({x}, {y})"
            )));
        }
        Ok(Self { x, y })
    }
}

/// `ln Γ(x)` for `x > 0`.
///
/// Lanczos approximation (g = 7, nine terms) for `x >= 0.5`; smaller
/// arguments are shifted up with `Γ(x) = Γ(x + 1) / x`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        return ln_gamma_pos(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + sum.ln()
}

/// Rising factorial `(a)_n = a (a + 1) ... (a + n - 1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + k as f64))
}

/// `ln B(x, y)`.
pub fn ln_beta(args: BetaArgs) -> f64 {
    ln_gamma_pos(args.x) + ln_gamma_pos(args.y) - ln_gamma_pos(args.x + args.y)
}

/// Euler beta function `B(x, y) = Γ(x) Γ(y) / Γ(x + y)`.
pub fn beta(args: BetaArgs) -> f64 {
    ln_beta(args).exp()
}

/// Shorthand for `beta(BetaArgs::new(x, y)?)`.
pub fn beta_fn(x: f64, y: f64) -> Result<f64> {
    Ok(beta(BetaArgs::new(x, y)?))
}

fn check_beta_shape(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::domain(format!(
            "incomplete beta requires a, b > 0, got ({a}, {b})"
        )));
    }
    Ok(())
}

/// Regularized incomplete beta `I_x(a, b)`.
pub fn inc_beta_reg(a: f64, b: f64, x: f64) -> Result<f64> {
    check_beta_shape(a, b)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "incomplete beta requires x in [0, 1], got {x}"
        )));
    }
    Ok(inc_beta_split(a, b, x, 1.0 - x).0)
}

/// `(I_x(a, b), 1 - I_x(a, b))` with `xc = 1 - x` supplied by the caller so
/// that arguments near 1 keep their relative precision.
pub(crate) fn inc_beta_split(a: f64, b: f64, x: f64, xc: f64) -> (f64, f64) {
    if x <= 0.0 {
        return (0.0, 1.0);
    }
    if xc <= 0.0 {
        return (1.0, 0.0);
    }
    let ln_front = a * x.ln() + b * xc.ln() - ln_beta(BetaArgs { x: a, y: b });
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        let lower = front * beta_cf(a, b, x) / a;
        (lower, 1.0 - lower)
    } else {
        let upper = front * beta_cf(b, a, xc) / b;
        (1.0 - upper, upper)
    }
}

/// Continued fraction for the incomplete beta function, modified Lentz.
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let clamp = |v: f64| if v.abs() < CF_TINY { CF_TINY } else { v };

    let mut c = 1.0;
    let mut d = 1.0 / clamp(1.0 - qab * x / qap);
    let mut h = d;
    for m in 1..=CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 / clamp(1.0 + aa * d);
        c = clamp(1.0 + aa / c);
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 / clamp(1.0 + aa * d);
        c = clamp(1.0 + aa / c);
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() <= f64::EPSILON {
            break;
        }
    }
    h
}

/// Inverse of `x ↦ I_x(a, b)`: returns `x` in `[0, 1]` with
/// `|I_x(a, b) - y| <= 1e-14`.
pub fn inc_beta_reg_inv(a: f64, b: f64, y: f64) -> Result<f64> {
    check_beta_shape(a, b)?;
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::domain(format!(
            "inverse incomplete beta requires y in [0, 1], got {y}"
        )));
    }
    inc_beta_inv_split(a, b, y, 1.0 - y).map(|(x, _)| x)
}

/// Split form of the inverse: takes `(y, 1 - y)` and returns `(x, 1 - x)`.
///
/// The unknown is always solved on the half `[0, 1/2]` where it is small:
/// targets below `I_{1/2}(a, b)` are solved directly, the rest through the
/// mirrored problem `I_w(b, a) = 1 - y` with `w = 1 - x`.
pub(crate) fn inc_beta_inv_split(a: f64, b: f64, y: f64, yc: f64) -> Result<(f64, f64)> {
    if y <= 0.0 {
        return Ok((0.0, 1.0));
    }
    if yc <= 0.0 {
        return Ok((1.0, 0.0));
    }
    let (mid, _) = inc_beta_split(a, b, 0.5, 0.5);
    if y <= mid {
        let w = solve_lower_half(a, b, y)?;
        Ok((w, 1.0 - w))
    } else {
        let w = solve_lower_half(b, a, yc)?;
        Ok((1.0 - w, w))
    }
}

/// Finds `w` in `[0, 1/2]` with `I_w(a, b) = target`; requires `target <= I_{1/2}(a, b)`.
fn solve_lower_half(a: f64, b: f64, target: f64) -> Result<f64> {
    let ln_b = ln_beta(BetaArgs { x: a, y: b });
    let residual = |w: f64| inc_beta_split(a, b, w, 1.0 - w).0 - target;

    let mut lo = 0.0_f64;
    let mut hi = 0.5_f64;
    // Leading-order behaviour I_w ≈ w^a / (a B(a, b)).
    let guess = ((target.ln() + a.ln() + ln_b) / a).exp();
    let mut w = if guess.is_finite() && guess > 0.0 && guess < hi {
        guess
    } else {
        0.5 * hi
    };

    for _ in 0..INV_MAX_ITER {
        let f = residual(w);
        if f == 0.0 {
            return Ok(w);
        }
        if f < 0.0 {
            lo = w;
        } else {
            hi = w;
        }
        let ln_deriv = (a - 1.0) * w.ln() + (b - 1.0) * (-w).ln_1p() - ln_b;
        let newton = w - f / ln_deriv.exp();
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - w).abs();
        w = next;
        if step <= 2.0 * f64::EPSILON * w || hi - lo <= 2.0 * f64::EPSILON * hi {
            break;
        }
    }
    if residual(w).abs() <= 1e-14 {
        Ok(w)
    } else {
        Err(Error::ConvergenceFailure {
            what: "inverse incomplete beta",
            iterations: INV_MAX_ITER,
        })
    }
}

/// Gauss hypergeometric function `F(a, b; c; x)` for `x` in `[0, 1]`.
///
/// At `x = 1` the Gauss summation formula is used (requires `c > a + b`).
/// Inside the interval the defining series is summed until a ratio-test
/// bound certifies the tail below [`HYP2F1_TAIL_TOL`].
pub fn hyp2f1(params: HyperParams, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "hyp2f1 is evaluated on [0, 1] only, got x = {x}"
        )));
    }
    hyp2f1_split(params, x, 1.0 - x)
}

/// `hyp2f1` with the complement `xc = 1 - x` supplied separately.
pub(crate) fn hyp2f1_split(params: HyperParams, x: f64, xc: f64) -> Result<f64> {
    let HyperParams { a, b, c } = params;
    if x == 0.0 {
        return Ok(1.0);
    }
    let a = snap_integer(a);
    let b = snap_integer(b);
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return Ok(terminating_sum(a, b, c, x));
    }
    if xc <= 0.0 {
        return gauss_sum(a, b, c);
    }
    // F(a, b; a + 1; x) is an incomplete beta integral; near x = 1 use
    // B_x(a, 1 - b) = B(a, 1 - b) - B_{1 - x}(1 - b, a).
    let beta_family = (c - a - 1.0).abs() <= 4.0 * f64::EPSILON * c.abs().max(1.0);
    if beta_family && x > 0.5 && a > 0.0 && b < 1.0 {
        let bb = 1.0 - b;
        let full = beta(BetaArgs { x: a, y: bb });
        let reflected = hyp2f1_series(bb, 1.0 - a, bb + 1.0, xc)?;
        let partial = full - xc.powf(bb) / bb * reflected;
        return Ok(a * x.powf(-a) * partial);
    }
    hyp2f1_series(a, b, c, x)
}

fn snap_integer(v: f64) -> f64 {
    let r = v.round();
    if (v - r).abs() <= 8.0 * f64::EPSILON * v.abs().max(1.0) {
        r
    } else {
        v
    }
}

fn is_nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v == v.round()
}

fn terminating_sum(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0.0;
    loop {
        let num = (a + n) * (b + n);
        if num == 0.0 {
            return sum;
        }
        term *= num / ((c + n) * (n + 1.0)) * x;
        sum += term;
        n += 1.0;
    }
}

fn gauss_sum(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(c > a + b) {
        return Err(Error::domain(format!(
            "F(a, b; c; 1) needs c > a + b, got a = {a}, b = {b}, c = {c}"
        )));
    }
    let args = [c, c - a - b, c - a, c - b];
    if args.iter().any(|&v| v <= 0.0) {
        return Err(Error::domain(
            "Gauss summation needs positive gamma arguments c, c - a, c - b",
        ));
    }
    Ok(
        (ln_gamma_pos(c) + ln_gamma_pos(c - a - b) - ln_gamma_pos(c - a) - ln_gamma_pos(c - b))
            .exp(),
    )
}

/// Tail bound to stop at: [`HYP2F1_TAIL_TOL`], tightened to a fraction of an ulp of the sum.
fn tail_target(sum: f64) -> f64 {
    HYP2F1_TAIL_TOL.min(0.25 * f64::EPSILON * sum.abs())
}

/// Plain power series with a certified tail bound.
///
/// For `m >= n` the term ratio is bounded by `x * G_n` where
/// `G_n = 1 + max(0, a + b - c - 1) / (c + n) + |ab - c| / ((c + n)(1 + n))`,
/// so once `x * G_n < 1` the tail is at most `|t_n| ρ / (1 - ρ)`.
fn hyp2f1_series(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let excess = (a + b - c - 1.0).max(0.0);
    let cross = (a * b - c).abs();
    for n in 0..HYP2F1_MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        let m = nf + 1.0;
        if c + m > 0.0 {
            let rho = x * (1.0 + excess / (c + m) + cross / ((c + m) * (1.0 + m)));
            if rho < 1.0 && term.abs() * rho / (1.0 - rho) <= tail_target(sum) {
                return Ok(sum);
            }
        }
    }
    Err(Error::ConvergenceFailure {
        what: "hypergeometric series",
        iterations: HYP2F1_MAX_TERMS,
    })
}
