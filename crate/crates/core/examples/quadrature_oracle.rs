//! Cross-checks closed forms against the tanh-sinh quadrature oracles.

use gentrig::gtf::{asin_pq, pi_pq, sin_pq, ParamPair};
use gentrig::oracle::{asin_by_quadrature, pi_by_quadrature, sin_by_bisection};
use gentrig::quadrature::integrate;

fn main() -> gentrig::Result<()> {
    let grid = [1.5, 2.0, 3.0, 4.0];
    let mut worst = [0.0f64; 3];
    for p in grid {
        for q in grid {
            let params = ParamPair::new(p, q)?;
            worst[0] = worst[0].max((pi_pq(params) - pi_by_quadrature(p, q)?).abs());
            worst[1] = worst[1].max((asin_pq(params, 0.9)? - asin_by_quadrature(p, q, 0.9)?).abs());
            worst[2] = worst[2].max((sin_pq(params, 0.6)? - sin_by_bisection(p, q, 0.6)?).abs());
        }
    }
    println!("max |pi - quadrature|   {:.2e}", worst[0]);
    println!("max |asin - quadrature| {:.2e}", worst[1]);
    println!("max |sin - bisection|   {:.2e}", worst[2]);

    let gauss = integrate(|x| (-x * x).exp(), 0.0, 3.0, 1e-14)?;
    println!(
        "int_0^3 exp(-x^2) = {:.15} ({} evaluations, est. error {:.1e})",
        gauss.value, gauss.evaluations, gauss.err_estimate
    );
    Ok(())
}
