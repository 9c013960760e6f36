//! Tables behind `gentrig table`.

use super::output::{Cell, Table};
use super::CliError;
use crate::bvp::{solve_general, solve_nonlocal, solve_pq_equal, BvpSpec, NonlocalSpec};
use crate::gtf::ParamPair;
use crate::integrals::{pi_product_partials, wallis_cos, wallis_sin, ClassicalWallis, WallisQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum TableKind {
    WallisSin,
    WallisCos,
    Lemniscate,
    ProductPartials,
    BvpProfile,
}

/// Every parameter a table kind may read; unused ones must be `None`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TableParams {
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub r: Vec<f64>,
    pub nmax: Option<u32>,
    pub terms: Option<u64>,
    pub m: Option<f64>,
    pub length: Option<f64>,
    pub samples: Option<usize>,
}

/// The CSV header of each kind.
pub fn header(kind: TableKind) -> Vec<&'static str> {
    match kind {
        TableKind::WallisSin | TableKind::WallisCos => {
            vec!["p", "q", "r", "n", "exponent", "value"]
        }
        TableKind::Lemniscate => vec!["formula", "n", "exponent", "value"],
        TableKind::ProductPartials => vec!["n", "partial"],
        TableKind::BvpProfile => vec!["x", "u"],
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("table --kind {kind} needs {flag}")))
}

fn reject(present: bool, flag: &str, kind: &str) -> Result<(), CliError> {
    if present {
        Err(CliError::Usage(format!(
            "{flag} does not apply to table --kind {kind}"
        )))
    } else {
        Ok(())
    }
}

pub fn build(kind: TableKind, params: &TableParams) -> Result<Table, CliError> {
    let mut table = Table::new(header(kind));
    match kind {
        TableKind::WallisSin | TableKind::WallisCos => {
            let name = if kind == TableKind::WallisSin {
                "wallis_sin"
            } else {
                "wallis_cos"
            };
            reject(params.m.is_some(), "--m", name)?;
            reject(params.terms.is_some(), "--N", name)?;
            reject(params.samples.is_some(), "--samples", name)?;
            reject(params.length.is_some(), "--H", name)?;
            let p = need(params.p, "--p", name)?;
            let q = need(params.q, "--q", name)?;
            let nmax = params.nmax.unwrap_or(4);
            let pair = ParamPair::new(p, q)?;
            let offsets = if params.r.is_empty() {
                if kind == TableKind::WallisSin {
                    vec![0.0, q - 2.0, q - 1.0]
                        .into_iter()
                        .filter(|&r| r > -1.0)
                        .collect()
                } else {
                    vec![0.0, 2.0 - p, 1.0]
                        .into_iter()
                        .filter(|&r| r > 1.0 - p)
                        .collect()
                }
            } else {
                params.r.clone()
            };
            for &r in &offsets {
                for n in 0..=nmax {
                    let query = WallisQuery::new(pair, n, r);
                    let (exponent, value) = if kind == TableKind::WallisSin {
                        (query.sin_exponent(), wallis_sin(query)?)
                    } else {
                        (query.cos_exponent(), wallis_cos(query)?)
                    };
                    table.push(vec![
                        Cell::Real(p),
                        Cell::Real(q),
                        Cell::Real(r),
                        Cell::Int(n as u64),
                        Cell::Real(exponent),
                        Cell::Real(value),
                    ]);
                }
            }
        }
        TableKind::Lemniscate => {
            for (present, flag) in [
                (params.p.is_some(), "--p"),
                (params.q.is_some(), "--q"),
                (!params.r.is_empty(), "--r"),
                (params.m.is_some(), "--m"),
                (params.terms.is_some(), "--N"),
                (params.samples.is_some(), "--samples"),
                (params.length.is_some(), "--H"),
            ] {
                reject(present, flag, "lemniscate")?;
            }
            let nmax = params.nmax.unwrap_or(5);
            for formula in ClassicalWallis::ALL {
                for n in 0..=nmax {
                    table.push(vec![
                        Cell::Text(formula.name().to_owned()),
                        Cell::Int(n as u64),
                        Cell::Int(formula.exponent(n) as u64),
                        Cell::Real(formula.value(n)?),
                    ]);
                }
            }
        }
        TableKind::ProductPartials => {
            let kind = "product_partials";
            reject(params.m.is_some(), "--m", kind)?;
            reject(!params.r.is_empty(), "--r", kind)?;
            reject(params.nmax.is_some(), "--nmax", kind)?;
            reject(params.samples.is_some(), "--samples", kind)?;
            reject(params.length.is_some(), "--H", kind)?;
            let pair = ParamPair::new(need(params.p, "--p", kind)?, need(params.q, "--q", kind)?)?;
            let terms = need(params.terms, "--N", kind)?;
            for (i, partial) in pi_product_partials(pair, terms)?.into_iter().enumerate() {
                table.push(vec![Cell::Int(i as u64 + 1), Cell::Real(partial)]);
            }
        }
        TableKind::BvpProfile => {
            let kind = "bvp_profile";
            reject(!params.r.is_empty(), "--r", kind)?;
            reject(params.nmax.is_some(), "--nmax", kind)?;
            reject(params.terms.is_some(), "--N", kind)?;
            let samples = params.samples.unwrap_or(101);
            let length = params.length.unwrap_or(1.0);
            let solution = match (params.m, params.p, params.q) {
                (Some(m), None, None) => solve_nonlocal(NonlocalSpec::new(length, m)?),
                (None, Some(p), None) => {
                    if params.length.is_some_and(|h| h != 1.0) {
                        return Err(CliError::Usage(
                            "the p = q profile lives on [0, 1]; pass --q as well for other --H"
                                .into(),
                        ));
                    }
                    solve_pq_equal(p)?
                }
                (None, Some(p), Some(q)) => solve_general(BvpSpec::new(length, p, q)?),
                (Some(_), _, _) => {
                    return Err(CliError::Usage("--m conflicts with --p/--q".into()));
                }
                _ => {
                    return Err(CliError::Usage(
                        "table --kind bvp_profile needs --m or --p".into(),
                    ))
                }
            };
            for (x, u) in solution.profile(samples)? {
                table.push(vec![Cell::Real(x), Cell::Real(u)]);
            }
        }
    }
    Ok(table)
}
