//! Wallis-type integrals of sin_{p,q}^{qn+r} and cos_{p,q}^{pn+r}.

use gentrig::gtf::ParamPair;
use gentrig::integrals::{wallis_cos, wallis_sin, wallis_special_cases, WallisCase, WallisQuery};
use gentrig::oracle::moment_by_quadrature;

fn main() -> gentrig::Result<()> {
    let params = ParamPair::new(2.5, 3.0)?;
    println!(
        "{:>3} {:>5} {:>16} {:>16} {:>9}",
        "n", "r", "sin moment", "cos moment", "|diff|"
    );
    for n in 0..5 {
        for r in [0.0, 1.0] {
            let query = WallisQuery::new(params, n, r);
            let s = wallis_sin(query)?;
            let c = wallis_cos(query)?;
            let oracle = moment_by_quadrature(params, query.sin_exponent(), 0.0)?;
            println!(
                "{n:>3} {r:>5} {s:>16.12} {c:>16.12} {:>9.1e}",
                (s - oracle).abs()
            );
        }
    }

    println!();
    for which in WallisCase::ALL {
        let row: Vec<String> = (0..4)
            .map(|n| wallis_special_cases(params, n, which).map(|v| format!("{v:.10}")))
            .collect::<Result<_, _>>()?;
        println!("{:<10} {}", format!("{which:?}"), row.join("  "));
    }
    Ok(())
}
