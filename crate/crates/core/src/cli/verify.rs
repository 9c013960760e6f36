//! Identity-verification suites behind `gentrig verify`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::output::{human, json_line, machine, Format, InputValue, OutputRecord};
use crate::bvp::{
    nonlocal_closure, phase_curve_residual, residual_general, solve_general, solve_nonlocal,
    solve_pq_equal, BvpSpec, NonlocalSpec,
};
use crate::error::Result;
use crate::gtf::{
    asin_pq, multiple_angle_residual, pi_pq, sin_cos_pq, sin_pq, sin_symmetry_appendix, ParamPair,
};
use crate::integrals::{elliott_sides, pi_product_partials, wallis_cos, wallis_sin, WallisQuery};
use crate::oracle::moment_by_quadrature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Pythagorean,
    Appendix,
    Wallis,
    Product,
    Elliott,
    Bvp,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Pythagorean,
        Suite::Appendix,
        Suite::Wallis,
        Suite::Product,
        Suite::Elliott,
        Suite::Bvp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pythagorean => "pythagorean",
            Suite::Appendix => "appendix",
            Suite::Wallis => "wallis",
            Suite::Product => "product",
            Suite::Elliott => "elliott",
            Suite::Bvp => "bvp",
            Suite::All => "all",
        }
    }
}

/// Parameter grid preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Grid {
    /// `p, q ∈ {1.5, 2, 3}`; runs in seconds.
    Small,
    /// The full acceptance grid.
    Full,
}

impl Grid {
    fn exponents(self) -> &'static [f64] {
        match self {
            Grid::Small => &[1.5, 2.0, 3.0],
            Grid::Full => &[1.5, 2.0, 2.5, 3.0, 4.0],
        }
    }

    fn pairs(self) -> Vec<(f64, f64)> {
        let e = self.exponents();
        e.iter()
            .flat_map(|&p| e.iter().map(move |&q| (p, q)))
            .collect()
    }
}

/// One checked case with its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseOutcome {
    #[serde(flatten)]
    pub record: OutputRecord,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseOutcome {
    fn residual(&self) -> f64 {
        self.record.residual.unwrap_or(f64::INFINITY)
    }
}

/// All cases of one suite, in a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.cases
            .iter()
            .map(CaseOutcome::residual)
            .fold(0.0, f64::max)
    }

    /// `SUITE <name> PASS|FAIL max_residual=<r>`
    pub fn summary_line(&self) -> String {
        summary(self.suite.name(), self.passed(), self.max_residual())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Human => {
                for c in &self.cases {
                    let line = c.record.render(Format::Human);
                    let _ = write!(
                        out,
                        "{} tol={} {}",
                        line.trim_end(),
                        human(c.tol),
                        if c.pass { "PASS" } else { "FAIL" }
                    );
                    if let Some(e) = &c.error {
                        let _ = write!(out, " error=\"{e}\"");
                    }
                    out.push('\n');
                }
            }
            Format::Csv => {
                out.push_str("suite,case,value,oracle,residual,tol,pass\n");
                for c in &self.cases {
                    let label: Vec<String> = c
                        .record
                        .inputs
                        .iter()
                        .map(|(k, v)| match v {
                            InputValue::Number(x) => format!("{k}={x}"),
                            InputValue::Text(s) => format!("{k}={s}"),
                        })
                        .collect();
                    let opt = |v: Option<f64>| v.map(machine).unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        c.record.command,
                        label.join(";"),
                        machine(c.record.value),
                        opt(c.record.oracle),
                        opt(c.record.residual),
                        machine(c.tol),
                        c.pass
                    );
                }
            }
            Format::Json => {
                for c in &self.cases {
                    out.push_str(&json_line(c));
                }
            }
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}

pub(crate) fn summary(name: &str, passed: bool, max_residual: f64) -> String {
    format!(
        "SUITE {name} {} max_residual={max_residual:.3e}",
        if passed { "PASS" } else { "FAIL" }
    )
}

type CaseFn = Box<dyn Fn() -> Result<(OutputRecord, f64)> + Send + Sync>;

fn case<F>(f: F) -> CaseFn
where
    F: Fn() -> Result<(OutputRecord, f64)> + Send + Sync + 'static,
{
    Box::new(f)
}

/// Runs `suite` (every suite for [`Suite::All`]); `tol_override` replaces
/// each case's tolerance.
pub fn run(suite: Suite, grid: Grid, tol_override: Option<f64>) -> Vec<SuiteReport> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    suites
        .into_iter()
        .map(|s| {
            let command = format!("verify:{}", s.name());
            let cases = build(s, grid)
                .par_iter()
                .map(|f| match f() {
                    Ok((record, tol)) => {
                        let tol = tol_override.unwrap_or(tol);
                        let pass = record.residual.is_some_and(|r| r <= tol);
                        CaseOutcome {
                            record: OutputRecord {
                                command: command.clone(),
                                ..record
                            },
                            tol,
                            pass,
                            error: None,
                        }
                    }
                    Err(e) => CaseOutcome {
                        record: OutputRecord::new(command.clone(), f64::NAN),
                        tol: tol_override.unwrap_or(0.0),
                        pass: false,
                        error: Some(e.to_string()),
                    },
                })
                .collect();
            SuiteReport { suite: s, cases }
        })
        .collect()
}

fn build(suite: Suite, grid: Grid) -> Vec<CaseFn> {
    match suite {
        Suite::Pythagorean => pythagorean(grid),
        Suite::Appendix => appendix(grid),
        Suite::Wallis => wallis(grid),
        Suite::Product => product(grid),
        Suite::Elliott => elliott(),
        Suite::Bvp => bvp(grid),
        Suite::All => Vec::new(),
    }
}

const FRACTIONS: [f64; 6] = [0.05, 0.25, 0.5, 0.75, 0.95, 0.999];

fn pythagorean(grid: Grid) -> Vec<CaseFn> {
    let mut cases = Vec::new();
    for (p, q) in grid.pairs() {
        for frac in FRACTIONS {
            cases.push(case(move || {
                let params = ParamPair::new(p, q)?;
                let x = frac * 0.5 * pi_pq(params);
                let (s, c) = sin_cos_pq(params, x)?;
                let record = OutputRecord::new("", s.powf(q) + c.powf(p))
                    .input("identity", "pythagorean")
                    .input("p", p)
                    .input("q", q)
                    .input("x", x)
                    .with_oracle(1.0);
                Ok((record, 1e-11))
            }));
            cases.push(case(move || {
                let params = ParamPair::new(p, q)?;
                let y = frac;
                let record = OutputRecord::new("", sin_pq(params, asin_pq(params, y)?)?)
                    .input("identity", "round_trip")
                    .input("p", p)
                    .input("q", q)
                    .input("y", y)
                    .with_oracle(y);
                Ok((record, 1e-11))
            }));
        }
    }
    cases
}

fn appendix(grid: Grid) -> Vec<CaseFn> {
    let mut cases = Vec::new();
    for (p, q) in grid.pairs() {
        for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
            cases.push(case(move || {
                let (sin_side, cos_side) = sin_symmetry_appendix(ParamPair::new(p, q)?, t)?;
                let record = OutputRecord::new("", sin_side.abs().max(cos_side.abs()))
                    .input("identity", "reflection")
                    .input("p", p)
                    .input("q", q)
                    .input("t", t)
                    .with_oracle(0.0);
                Ok((record, 1e-10))
            }));
        }
    }
    for &p in grid.exponents() {
        for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
            cases.push(case(move || {
                let params = ParamPair::new(crate::gtf::conjugate(p), p)?;
                let x = t * 0.5 * pi_pq(params);
                let record = OutputRecord::new("", multiple_angle_residual(p, x)?)
                    .input("identity", "multiple_angle")
                    .input("p", p)
                    .input("x", x)
                    .with_oracle(0.0);
                Ok((record, 1e-10))
            }));
        }
    }
    cases
}

/// Offsets checked for each flavor: one interior value, zero, and the
/// degenerate endpoint.
fn wallis_offsets(p: f64, q: f64, sine: bool) -> [f64; 3] {
    if sine {
        [-0.5, 0.0, q - 1.0]
    } else {
        [0.5 * (1.0 - p), 0.0, 1.0]
    }
}

fn wallis(grid: Grid) -> Vec<CaseFn> {
    let (n_max, tol) = match grid {
        Grid::Small => (2, 1e-8),
        Grid::Full => (4, 1e-7),
    };
    let mut cases = Vec::new();
    for (p, q) in grid.pairs() {
        for n in 0..=n_max {
            for sine in [true, false] {
                for r in wallis_offsets(p, q, sine) {
                    cases.push(case(move || {
                        let params = ParamPair::new(p, q)?;
                        let query = WallisQuery::new(params, n, r);
                        let (value, oracle, exponent) = if sine {
                            let e = query.sin_exponent();
                            (wallis_sin(query)?, moment_by_quadrature(params, e, 0.0)?, e)
                        } else {
                            let e = query.cos_exponent();
                            (wallis_cos(query)?, moment_by_quadrature(params, 0.0, e)?, e)
                        };
                        let record = OutputRecord::new("", value)
                            .input("flavor", if sine { "sin" } else { "cos" })
                            .input("p", p)
                            .input("q", q)
                            .input("n", n as f64)
                            .input("r", r)
                            .input("exponent", exponent)
                            .with_oracle(oracle);
                        Ok((record, tol))
                    }));
                }
            }
        }
    }
    cases
}

const PRODUCT_TERMS: u64 = 100_000;

fn product(grid: Grid) -> Vec<CaseFn> {
    let mut pairs = vec![(2.0, 2.0), (2.0, 4.0), (3.0, 1.5)];
    if grid == Grid::Full {
        pairs.extend(grid.pairs());
    }
    let mut cases = Vec::new();
    for (p, q) in pairs {
        cases.push(case(move || {
            let params = ParamPair::new(p, q)?;
            let partials = pi_product_partials(params, PRODUCT_TERMS)?;
            let last = *partials.last().expect("nonempty");
            let record = OutputRecord::new("", last)
                .input("check", "limit")
                .input("p", p)
                .input("q", q)
                .input("N", PRODUCT_TERMS as f64)
                .with_oracle(0.5 * pi_pq(params));
            Ok((record, 1e-3))
        }));
        cases.push(case(move || {
            let partials = pi_product_partials(ParamPair::new(p, q)?, PRODUCT_TERMS)?;
            let steps = partials.windows(2).filter(|w| w[1] <= w[0]).count();
            let record = OutputRecord::new("", steps as f64)
                .input("check", "non_increasing_steps")
                .input("p", p)
                .input("q", q)
                .input("N", PRODUCT_TERMS as f64)
                .with_oracle(0.0);
            Ok((record, 0.0))
        }));
    }
    cases
}

/// `(p, q, r, k)` with `p <= q`.
pub const ELLIOTT_GRID: [(f64, f64, f64, f64); 10] = [
    (1.5, 2.0, 2.0, 0.3),
    (1.5, 3.0, 1.5, 0.5),
    (2.0, 2.0, 3.0, 0.7),
    (2.0, 3.0, 2.0, 0.3),
    (2.0, 4.0, 3.0, 0.5),
    (2.0, 4.0, 1.5, 0.8),
    (3.0, 3.0, 2.0, 0.4),
    (1.5, 1.5, 4.0, 0.6),
    (2.5, 4.0, 2.5, 0.35),
    (3.0, 4.0, 1.2, 0.9),
];

fn elliott() -> Vec<CaseFn> {
    let mut cases = vec![case(|| {
        let (lhs, rhs) = elliott_sides(ParamPair::new(2.0, 2.0)?, 2.0, 0.5)?;
        let record = OutputRecord::new("", lhs)
            .input("case", "legendre")
            .input("p", 2.0)
            .input("q", 2.0)
            .input("r", 2.0)
            .input("k", 0.5)
            .with_oracle(rhs);
        Ok((record, 1e-9))
    })];
    for (p, q, r, k) in ELLIOTT_GRID {
        cases.push(case(move || {
            let (lhs, rhs) = elliott_sides(ParamPair::new(p, q)?, r, k)?;
            let record = OutputRecord::new("", lhs)
                .input("case", "grid")
                .input("p", p)
                .input("q", q)
                .input("r", r)
                .input("k", k)
                .with_oracle(rhs);
            Ok((record, 1e-7))
        }));
    }
    cases
}

fn interior(length: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| length * i as f64 / (n + 1) as f64)
}

fn bvp(grid: Grid) -> Vec<CaseFn> {
    let (exponents, lengths): (&[f64], &[f64]) = match grid {
        Grid::Small => (&[1.5, 2.0, 3.0], &[1.0]),
        Grid::Full => (&[1.5, 2.0, 3.0, 4.0], &[1.0, 2.5]),
    };
    let mut cases = Vec::new();
    for &p in exponents {
        for &q in exponents {
            for &length in lengths {
                cases.push(case(move || {
                    let sol = solve_general(BvpSpec::new(length, p, q)?);
                    let mut worst: f64 = 0.0;
                    for x in interior(length, 33) {
                        worst = worst.max(residual_general(&sol, x)?);
                    }
                    let record = OutputRecord::new("", worst)
                        .input("check", "ode_residual")
                        .input("p", p)
                        .input("q", q)
                        .input("H", length)
                        .with_oracle(0.0);
                    Ok((record, 1e-6))
                }));
                cases.push(case(move || {
                    let sol = solve_general(BvpSpec::new(length, p, q)?);
                    let mut worst: f64 = 0.0;
                    for x in interior(length, 9) {
                        worst = worst.max(phase_curve_residual(&sol, x)?);
                    }
                    let record = OutputRecord::new("", worst)
                        .input("check", "phase_curve")
                        .input("p", p)
                        .input("q", q)
                        .input("H", length)
                        .with_oracle(0.0);
                    Ok((record, 1e-9))
                }));
            }
        }
    }
    for m in [0.5, 1.0, 2.0, 10.0] {
        cases.push(case(move || {
            let closure = nonlocal_closure(&solve_nonlocal(NonlocalSpec::new(1.0, m)?))?;
            let record = OutputRecord::new("", closure.integral)
                .input("check", "nonlocal_closure")
                .input("m", m)
                .input("H", 1.0)
                .with_oracle(closure.m_squared);
            Ok((record, 1e-6 * closure.m_squared))
        }));
    }
    cases.push(case(|| {
        let general = solve_general(BvpSpec::new(1.0, 2.0, 2.0)?);
        let equal = solve_pq_equal(2.0)?;
        let mut worst: f64 = 0.0;
        for x in interior(1.0, 33) {
            let want = (PI * x).sin() / (2.0 * PI);
            worst = worst
                .max((general.eval(x)? - want).abs())
                .max((equal.eval(x)? - want).abs());
        }
        let record = OutputRecord::new("", worst)
            .input("check", "classical_profile")
            .input("p", 2.0)
            .input("q", 2.0)
            .with_oracle(0.0);
        Ok((record, 1e-11))
    }));
    cases
}
