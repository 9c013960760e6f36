//! The lemniscate constant, computed three ways.

use gentrig::gtf::{pi_pq, ParamPair};
use gentrig::integrals::{lemniscate_constant, pi_product_partial};
use gentrig::quadrature::integrate_with_offsets;

fn main() -> gentrig::Result<()> {
    let varpi = lemniscate_constant();
    println!("beta closed form  {varpi:.16}");

    // 1 - t^4 = (1 - t)(1 + t)(1 + t^2)
    let arc = integrate_with_offsets(
        |t, _, to_one| 1.0 / (to_one * (1.0 + t) * (1.0 + t * t)).sqrt(),
        0.0,
        1.0,
        1e-14,
    )?;
    println!("arc length        {:.16}", 2.0 * arc.value);

    let params = ParamPair::new(2.0, 4.0)?;
    for n in [10, 1_000, 100_000] {
        println!(
            "product, N={n:<7} {:.16}",
            2.0 * pi_product_partial(params, n)?
        );
    }

    let pi_42 = pi_pq(ParamPair::new(4.0, 2.0)?);
    println!(
        "pi_4,2 * varpi / pi = {:.16}",
        pi_42 * varpi / std::f64::consts::PI
    );
    Ok(())
}
