//! Generalized complete elliptic integrals and Elliott's identity.

use gentrig::gtf::ParamPair;
use gentrig::integrals::{elliott_sides, elliptic_e, elliptic_k, EllipticQuery};

fn main() -> gentrig::Result<()> {
    let legendre = EllipticQuery::new(ParamPair::new(2.0, 2.0)?, 2.0, 0.5)?;
    println!("K(0.5) = {:.15}", elliptic_k(legendre)?);
    println!("E(0.5) = {:.15}", elliptic_e(legendre)?);

    for (p, q, r, k) in [
        (2.0, 2.0, 2.0, 0.5),
        (1.5, 3.0, 1.5, 0.5),
        (2.0, 4.0, 3.0, 0.5),
        (3.0, 4.0, 1.2, 0.9),
    ] {
        let (lhs, rhs) = elliott_sides(ParamPair::new(p, q)?, r, k)?;
        println!(
            "p={p} q={q} r={r} k={k}: lhs {lhs:.15} rhs {rhs:.15} diff {:.1e}",
            (lhs - rhs).abs()
        );
    }
    Ok(())
}
