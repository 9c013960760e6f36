//! Convergence of the infinite product for pi_{p,q}/2.

use gentrig::gtf::{pi_pq, ParamPair};
use gentrig::integrals::pi_product_partials;

fn main() -> gentrig::Result<()> {
    for (p, q) in [(2.0, 2.0), (2.0, 4.0), (3.0, 1.5)] {
        let params = ParamPair::new(p, q)?;
        let target = 0.5 * pi_pq(params);
        let partials = pi_product_partials(params, 100_000)?;
        println!("p = {p}, q = {q}, pi_pq/2 = {target:.12}");
        for n in [1, 10, 100, 1_000, 10_000, 100_000] {
            let value = partials[n - 1];
            println!("  N = {n:>6}  {value:.12}  gap {:.3e}", target - value);
        }
    }
    Ok(())
}
