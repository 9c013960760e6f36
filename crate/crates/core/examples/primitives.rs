//! Antiderivatives of sin^k cos^l via the hypergeometric closed form.

use gentrig::gtf::{pi_pq, ParamPair};
use gentrig::integrals::{definite_sin_cos, primitive_finite_sum, primitive_sin_cos};
use gentrig::oracle::primitive_by_quadrature;

fn main() -> gentrig::Result<()> {
    let params = ParamPair::new(2.0, 3.0)?;
    let (k, l) = (1.5, 0.5);
    let half = 0.5 * pi_pq(params);
    println!("F(x) = int_0^x sin^{k} cos^{l}, p = 2, q = 3");
    for i in 1..=5 {
        let x = half * i as f64 / 5.0;
        let closed = primitive_sin_cos(params, k, l, x)?;
        let quad = primitive_by_quadrature(params, k, l, x)?;
        println!(
            "x = {x:.6}  F = {closed:.14}  quadrature diff = {:.1e}",
            (closed - quad).abs()
        );
    }
    println!("definite integral {:.14}", definite_sin_cos(params, k, l)?);

    // l = pn + 1 reduces to a finite sum
    let x = 0.7 * half;
    for n in 0..4 {
        let sum = primitive_finite_sum(params, k, n, x)?;
        let hyper = primitive_sin_cos(params, k, 2.0 * n as f64 + 1.0, x)?;
        println!(
            "n = {n}: finite sum {sum:.14}, diff {:.1e}",
            (sum - hyper).abs()
        );
    }
    Ok(())
}
