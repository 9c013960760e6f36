use std::process::{Command, Output};

use gentrig::bvp::{solve_nonlocal, NonlocalSpec};
use gentrig::gtf::{pi_pq, ParamPair};
use gentrig::integrals::{lemniscate_wallis, pi_product_partial};

fn gentrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentrig"))
        .args(args)
        .env_remove("GTF_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_pi_prints_lemniscate_constant() {
    let out = gentrig(&["eval", "--fn", "pi", "--p", "2", "--q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("value=2.622057554"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn eval_json_record() {
    let out = gentrig(&[
        "eval",
        "--fn",
        "sin",
        "--p",
        "2",
        "--q",
        "2",
        "--x",
        "1.0471975512",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["command"], "eval");
    assert_eq!(v["inputs"]["fn"], "sin");
    assert!((v["value"].as_f64().unwrap() - 0.866_025_403_8).abs() < 1e-9);
    assert!(v["oracle"].is_null() && v["residual"].is_null());
}

#[test]
fn eval_asin_at_one_is_half_pi() {
    let out = gentrig(&[
        "eval", "--fn", "asin", "--p", "3", "--q", "2", "--x", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let half = 0.5 * pi_pq(ParamPair::new(3.0, 2.0).unwrap());
    assert!((v["value"].as_f64().unwrap() - half).abs() < 1e-15);
    let residual = v["residual"].as_f64().unwrap();
    assert!(residual < 1e-11);
    assert_eq!(
        residual,
        (v["value"].as_f64().unwrap() - v["oracle"].as_f64().unwrap()).abs()
    );
}

#[test]
fn eval_domain_and_flag_errors_exit_2() {
    let out = gentrig(&["eval", "--fn", "sin", "--p", "2", "--q", "2", "--x", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("domain error"));
    assert_eq!(
        gentrig(&["eval", "--fn", "sin", "--p", "2", "--q", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gentrig(&["eval", "--fn", "sin", "--p", "0.5", "--q", "2", "--x", "0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gentrig(&["eval", "--fn", "tan", "--p", "2", "--q", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gentrig(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_summary_and_exit_codes() {
    let out = gentrig(&["verify", "--suite", "pythagorean"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(
        last.starts_with("SUITE pythagorean PASS max_residual="),
        "{last}"
    );
    let r: f64 = last.rsplit('=').next().unwrap().parse().unwrap();
    assert!(r <= 1e-11);

    let out = Command::new(env!("CARGO_BIN_EXE_gentrig"))
        .args(["verify", "--suite", "elliott"])
        .env("GTF_TOL", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("SUITE elliott FAIL"));

    assert_eq!(
        gentrig(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        gentrig(&["verify", "--suite", "bvp", "--grid", "huge"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_all_reports_every_suite() {
    let out = gentrig(&["verify", "--suite", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in [
        "pythagorean",
        "appendix",
        "wallis",
        "product",
        "elliott",
        "bvp",
        "all",
    ] {
        assert!(text.contains(&format!("SUITE {name} PASS")), "{name}");
    }
    for line in text.lines().filter(|l| l.starts_with('{')) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn verify_output_is_deterministic() {
    let a = stdout(&gentrig(&[
        "verify", "--suite", "wallis", "--format", "csv",
    ]));
    let b = stdout(&gentrig(&[
        "verify", "--suite", "wallis", "--format", "csv",
    ]));
    assert_eq!(a, b);
}

#[test]
fn product_table_round_trips_through_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("partials.csv");
    let out = gentrig(&[
        "table",
        "--kind",
        "product_partials",
        "--p",
        "2",
        "--q",
        "4",
        "--N",
        "1000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["n", "partial"]);
    let rows: Vec<(u64, f64)> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1000);
    let params = ParamPair::new(2.0, 4.0).unwrap();
    for &(n, partial) in rows.iter().step_by(97) {
        assert_eq!(
            partial.to_bits(),
            pi_product_partial(params, n).unwrap().to_bits()
        );
    }
    let last = rows.last().unwrap().1;
    assert!((last - 0.5 * pi_pq(params)).abs() < 1e-3);
}

#[test]
fn lemniscate_table_matches_library() {
    let out = gentrig(&["table", "--kind", "lemniscate", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["formula", "n", "exponent", "value"]
    );
    let rows: Vec<(String, u32, u32, f64)> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 24);
    for (formula, n, exponent, value) in rows.iter().filter(|r| r.0.starts_with("sl")) {
        let residue = exponent - 4 * n;
        assert!(formula.ends_with(&format!("4n+{residue}")) || residue == 0);
        assert_eq!(
            value.to_bits(),
            lemniscate_wallis(*n, residue).unwrap().to_bits()
        );
    }
}

#[test]
fn bvp_profile_table() {
    let out = gentrig(&[
        "table",
        "--kind",
        "bvp_profile",
        "--m",
        "1.0",
        "--H",
        "1",
        "--samples",
        "101",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["x", "u"]);
    let rows: Vec<(f64, f64)> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 101);
    assert_eq!(rows[0], (0.0, 0.0));
    assert_eq!(rows[100].0, 1.0);
    assert!(rows[100].1.abs() < 1e-10);
    let imax = (0..101)
        .max_by(|&a, &b| rows[a].1.total_cmp(&rows[b].1))
        .unwrap();
    assert!(imax > 0 && imax < 100);
    let sol = solve_nonlocal(NonlocalSpec::new(1.0, 1.0).unwrap());
    for &(x, u) in &rows {
        assert_eq!(u.to_bits(), sol.eval(x).unwrap().to_bits());
    }
}

#[test]
fn table_flag_conflicts_exit_2() {
    let conflicting = [
        vec!["table", "--kind", "bvp_profile", "--m", "1", "--p", "2"],
        vec!["table", "--kind", "bvp_profile"],
        vec!["table", "--kind", "lemniscate", "--p", "2"],
        vec![
            "table",
            "--kind",
            "product_partials",
            "--p",
            "2",
            "--q",
            "2",
        ],
        vec!["table", "--kind", "wallis_sin", "--p", "2"],
        vec![
            "table",
            "--kind",
            "wallis_sin",
            "--p",
            "2",
            "--q",
            "2",
            "--r",
            "5",
        ],
    ];
    for args in conflicting {
        assert_eq!(gentrig(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_reports_path() {
    let out = gentrig(&[
        "table",
        "--kind",
        "lemniscate",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/x.csv"));
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gentrig::cli::run(
        [
            "gentrig",
            "table",
            "--kind",
            "wallis_cos",
            "--p",
            "2",
            "--q",
            "2",
            "--nmax",
            "2",
            "--format",
            "json",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let binary = gentrig(&[
        "table",
        "--kind",
        "wallis_cos",
        "--p",
        "2",
        "--q",
        "2",
        "--nmax",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out, binary.stdout);
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 9);
}
