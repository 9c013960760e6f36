//! Closed-form solutions of the local problem and their phase curves.

use std::f64::consts::PI;

use gentrig::bvp::{
    phase_curve_residual, residual_general, solve_general, solve_pq_equal, BvpSpec,
};

fn main() -> gentrig::Result<()> {
    for (length, p, q) in [(1.0, 2.0, 2.0), (1.0, 1.5, 4.0), (2.5, 3.0, 1.5)] {
        let sol = solve_general(BvpSpec::new(length, p, q)?);
        let mut ode: f64 = 0.0;
        let mut phase: f64 = 0.0;
        for i in 1..=33 {
            let x = length * i as f64 / 34.0;
            ode = ode.max(residual_general(&sol, x)?);
            phase = phase.max(phase_curve_residual(&sol, x)?);
        }
        println!(
            "H = {length}, p = {p}, q = {q}: u(H/2) = {:.10}, ode {ode:.1e}, phase curve {phase:.1e}",
            sol.eval(0.5 * length)?
        );
    }

    let classical = solve_pq_equal(2.0)?;
    println!("\np = q = 2 against sin(pi x)/(2 pi):");
    for i in 0..=4 {
        let x = i as f64 / 4.0;
        let u = classical.eval(x)?;
        println!(
            "  x = {x:.2}  u = {u:.15}  diff {:.1e}",
            (u - (PI * x).sin() / (2.0 * PI)).abs()
        );
    }
    Ok(())
}
