//! Tabulates sin_{p,q}, cos_{p,q} and the inverse sine over a quarter period.

use gentrig::gtf::{asin_pq, pi_pq, sin_cos_pq, ParamPair};

fn main() -> gentrig::Result<()> {
    let params = ParamPair::new(3.0, 1.5)?;
    let half = 0.5 * pi_pq(params);
    println!(
        "p = {}, q = {}, pi_pq = {:.12}",
        params.p(),
        params.q(),
        2.0 * half
    );
    println!(
        "{:>8} {:>14} {:>14} {:>10} {:>10}",
        "x", "sin", "cos", "s^q+c^p", "asin(sin)"
    );
    for i in 0..=8 {
        let x = half * i as f64 / 8.0;
        let (s, c) = sin_cos_pq(params, x)?;
        let back = asin_pq(params, s)?;
        println!(
            "{x:>8.5} {s:>14.10} {c:>14.10} {:>10.2e} {:>10.2e}",
            s.powf(params.q()) + c.powf(params.p()) - 1.0,
            back - x,
        );
    }
    Ok(())
}
