//! Profiles of the nonlocal boundary value problem for several m.

use gentrig::bvp::{nonlocal_closure, residual_nonlocal, solve_nonlocal, NonlocalSpec};

fn main() -> gentrig::Result<()> {
    for m in [0.5, 1.0, 2.0, 10.0] {
        let spec = NonlocalSpec::new(1.0, m)?;
        let sol = solve_nonlocal(spec);
        let closure = nonlocal_closure(&sol)?;
        let peak = sol
            .profile(201)?
            .into_iter()
            .fold((0.0, 0.0), |a, b| if b.1 > a.1 { b } else { a });
        let residual = (1..20)
            .map(|i| residual_nonlocal(&sol, i as f64 / 20.0))
            .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)))?;
        println!(
            "m = {m:>4}: r = {:.6}, peak {:.6} at x = {:.3}, closure rel err {:.1e}, ode residual {:.1e}",
            spec.r(),
            peak.1,
            peak.0,
            closure.relative_error,
            residual,
        );
    }

    let sol = solve_nonlocal(NonlocalSpec::new(1.0, 1.0)?);
    println!("\n x      phi(x), m = 1");
    for (x, u) in sol.profile(11)? {
        println!("{x:.2}  {u:.10}");
    }
    Ok(())
}
