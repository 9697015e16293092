use std::process::{Command as Process, Output};

use lcs_cli::{run, Command, Format, JobSpec, Value};
use tempfile::tempdir;

fn lcs(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_lcs"))
        .args(args)
        .env_remove("LCS_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn dims_job(m: usize, n: usize, d: usize) -> JobSpec {
    let mut j = JobSpec::new(Command::Dims, m, n, d);
    j.no_cache = true;
    j
}

#[test]
fn dims_of_one_even_generator() {
    // A_1 = k[x]: B_1 is all of it, everything else vanishes
    let r = run(&dims_job(1, 0, 5)).unwrap();
    for row in r.rows_named("B1") {
        assert_eq!(row.value, Value::Int(1));
    }
    for name in ["B2", "B3", "Z"] {
        assert!(
            r.rows_named(name).all(|row| row.value == Value::Int(0)),
            "{name}"
        );
    }
}

#[test]
fn b2_of_two_generators_totals() {
    let r = run(&dims_job(2, 0, 5)).unwrap();
    let totals: Vec<_> = r
        .rows_named("B2.total")
        .map(|row| (row.degree[0], row.value.clone()))
        .collect();
    // u1u2/((1-u1)(1-u2)) collapses to t^2/(1-t)^2
    for (d, v) in totals {
        assert_eq!(v, Value::Int(d.saturating_sub(1) as i64), "degree {d}");
    }
}

#[test]
fn b_series_sum_to_algebra() {
    let r = run(&dims_job(1, 1, 5)).unwrap();
    let mut by_degree = std::collections::BTreeMap::<Vec<usize>, i64>::new();
    for row in &r.rows {
        if row.series_or_check.starts_with('B')
            && !row.series_or_check.contains('.')
            && row.series_or_check != "Bbar1"
        {
            *by_degree.entry(row.degree.clone()).or_default() += row.value.as_int().unwrap();
        }
    }
    // words in one even and one odd letter of degree (a, b): binomial(a+b, a),
    // and B_1..B_3 exhaust A in total degree <= 3
    for (d, sum) in by_degree {
        if d[0] + d[1] <= 3 {
            let (a, b) = (d[0] as i64, d[1] as i64);
            let binom = (1..=b).fold(1, |acc, i| acc * (a + i) / i);
            assert_eq!(sum, binom, "{d:?}");
        }
    }
}

#[test]
fn json_and_csv_carry_the_same_rows() {
    let j = lcs(&["dims", "--m", "2", "--max-degree", "4", "--no-cache"]);
    let c = lcs(&[
        "dims",
        "--m",
        "2",
        "--max-degree",
        "4",
        "--no-cache",
        "--format",
        "csv",
    ]);
    assert!(j.status.success() && c.status.success());
    let rows = json(&j)["rows"].as_array().unwrap().len();
    let csv = String::from_utf8(c.stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "m,n,series_or_check,k,degree_vector,t_power,value"
    );
    assert_eq!(lines.count(), rows);
    // manifest goes to stderr in csv mode
    let manifest: serde_json::Value = serde_json::from_slice(&c.stderr).unwrap();
    assert_eq!(manifest["digest"], json(&j)["manifest"]["digest"]);
}

#[test]
fn manifest_echoes_the_job() {
    let out = lcs(&[
        "verify",
        "--m",
        "1",
        "--n",
        "1",
        "--max-degree",
        "4",
        "--checks",
        "fs,f3",
        "--seed",
        "9",
        "--no-cache",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let job: JobSpec = serde_json::from_value(v["manifest"]["job"].clone()).unwrap();
    assert_eq!(job.command, Command::Verify);
    assert_eq!((job.m, job.n, job.max_degree, job.seed), (1, 1, 4, 9));
    assert_eq!(job.checks, ["fs", "f3"]);
    assert_eq!(job.format, Format::Json);
    assert_eq!(v["manifest"]["engine_version"], lcs_core::VERSION);
}

#[test]
fn cache_round_trip() {
    let dir = tempdir().unwrap();
    let mut j = JobSpec::new(Command::Dims, 2, 1, 4);
    j.cache_dir = Some(dir.path().to_path_buf());
    let first = run(&j).unwrap();
    let second = run(&j).unwrap();
    assert!(!first.manifest.cache_hit);
    assert!(second.manifest.cache_hit);
    assert_eq!(first.rows, second.rows);
    assert_eq!(first.manifest.digest, second.manifest.digest);

    j.check_cache = true;
    assert!(run(&j).unwrap().manifest.cache_hit);
}

#[test]
fn corrupted_cache_is_caught() {
    let dir = tempdir().unwrap();
    let mut j = JobSpec::new(Command::Dims, 2, 0, 4);
    j.cache_dir = Some(dir.path().to_path_buf());
    run(&j).unwrap();
    let file = walk(dir.path())
        .into_iter()
        .find(|p| p.extension().is_some_and(|e| e == "json"))
        .unwrap();
    let text = std::fs::read_to_string(&file).unwrap();
    // bump one dimension
    let tampered = text.replacen("[0,0],1]", "[0,0],7]", 1);
    assert_ne!(text, tampered);
    std::fs::write(&file, tampered).unwrap();
    j.check_cache = true;
    assert!(matches!(run(&j), Err(lcs_cli::WorkbenchError::Cache(_))));

    std::fs::write(&file, "not json").unwrap();
    j.check_cache = false;
    assert!(matches!(run(&j), Err(lcs_cli::WorkbenchError::Cache(_))));
}

fn walk(dir: &std::path::Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

#[test]
fn budget_error_is_structured() {
    let out = lcs(&[
        "dims",
        "--m",
        "3",
        "--max-degree",
        "6",
        "--budget",
        "10",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "budget_exceeded");
    assert_eq!(v["error"]["budget"], 10);
    assert!(v["error"]["dim"].as_u64().unwrap() > 10);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["dims", "--m", "0", "--n", "0"],
        vec!["verify", "--checks", "nonsense"],
        vec!["verify", "--checks", "bracket", "--j", "3"],
        vec!["schur", "bk", "--m", "1", "--n", "1"],
        vec!["conjecture", "nope"],
    ] {
        let out = lcs(&[&args[..], &["--no-cache"]].concat());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(json(&out)["error"]["message"].is_string());
    }
}

#[test]
fn unasserted_checks_are_reported_but_do_not_fail() {
    let mut j = JobSpec::new(Command::Verify, 1, 1, 5);
    j.no_cache = true;
    j.checks = vec!["bracket".into()];
    j.j = Some(2);
    j.k = Some(2);
    let r = run(&j).unwrap();
    assert!(r.ok);
    assert!(!r.rows.is_empty());
    assert!(r.rows.iter().all(|row| row
        .note
        .as_deref()
        .is_some_and(|n| n.starts_with("not asserted"))));
}

#[test]
fn series_flags_printed_formulas() {
    let out = lcs(&["series", "--m", "1", "--max-degree", "5", "--no-cache"]);
    assert!(out.status.success());
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    let flagged = rows
        .iter()
        .find(|r| r["series_or_check"] == "nonintegral.printed.B2")
        .unwrap();
    assert!(flagged["value"].as_i64().unwrap() > 0);
    assert!(flagged["note"].as_str().unwrap().contains("non-integer"));
}

#[test]
fn digest_is_stable_and_content_sensitive() {
    let a = run(&dims_job(2, 0, 5)).unwrap();
    let b = run(&dims_job(2, 0, 5)).unwrap();
    let c = run(&dims_job(2, 0, 4)).unwrap();
    assert_eq!(a.manifest.digest, b.manifest.digest);
    assert_ne!(a.manifest.digest, c.manifest.digest);
    assert_eq!(a.manifest.digest.len(), 64);
}
