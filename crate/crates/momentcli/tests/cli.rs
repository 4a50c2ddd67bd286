use std::process::Command as Process;

use momentcli::{parse_n_range, render, Command, Format, RunConfig};
use num_bigint::BigInt;

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_momentcli"))
}

fn csv_rows(body: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(body.as_bytes());
    r.records().map(|rec| rec.unwrap().iter().map(str::to_string).collect()).collect()
}

#[test]
fn moments_row_matches_spt_identity() {
    let out = bin().args(["moments", "--T", "1", "--r", "2", "--n-max", "60", "-q"]).output().unwrap();
    assert!(out.status.success());
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.starts_with("T,r,n,moment\n"));
    let rows = csv_rows(&body);
    assert_eq!(rows.len(), 61);
    let m1: BigInt = rows[4][3].parse().unwrap();
    let m3 = qexact::moment_table(3, 2, 4).unwrap().value(4).clone();
    assert_eq!(m1, BigInt::from(2) * qexact::spt_oracle(4).unwrap() + m3);
}

#[test]
fn verify_theta_elliptic_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let status = bin()
        .args(["verify", "--case", "theta_elliptic", "--trials", "50", "--seed", "7", "--format", "json", "-q", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v[0]["case"], "theta_elliptic");
    assert_eq!(v[0]["seed"], 7);
    assert!(v[0]["max_rel_err"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn compare_leading_error_decreases() {
    let out = bin().args(["compare", "--T", "1", "--r", "2", "--n", "250,500,1000", "-q"]).output().unwrap();
    assert!(out.status.success());
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.starts_with("T,r,n,exact,thmA_main,thmB_leading,rel_err_A,rel_err_B\n"));
    let errs: Vec<f64> = csv_rows(&body).iter().map(|r| r[7].parse().unwrap()).collect();
    assert_eq!(errs.len(), 3);
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
}

#[test]
fn invalid_config_exits_two() {
    for args in [
        &["moments", "--T", "4", "--r", "2", "--n-max", "5"][..],
        &["moments", "--r", "2", "--n-max", "5"],
        &["asymptotic", "--T", "5", "--r", "3", "--n", "100"],
        &["scan", "--T", "1", "--r", "2"],
        &["spt-check", "--n-max", "500"],
        &["verify", "--tol-scale", "0"],
        &["compare", "--T", "1", "--r", "2", "--n", "5..1"],
        &["verify", "--case", "nonsense"],
    ] {
        let out = bin().args(args).arg("-q").output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn diagnostics_name_the_constraint() {
    let mut cfg = RunConfig::new(Command::Scan);
    cfg.t_mod = Some(1);
    cfg.r = Some(2);
    let e = cfg.validate().unwrap_err();
    assert!(e.0.contains("--T"), "{e}");
    cfg.t_mod = Some(3);
    cfg.r = Some(3);
    assert!(cfg.validate().unwrap_err().0.contains("--r"));
}

#[test]
fn failed_suite_exits_one() {
    // a tolerance scaled far below rounding cannot pass
    let out = bin()
        .args(["verify", "--case", "eta", "--trials", "3", "--tol-scale", "1e-12", "-q"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .env(momentcli::OUT_DIR_ENV, dir.path())
        .args(["scan", "--T", "3", "--r", "2", "--n", "1..200", "--format", "json", "-q"])
        .status()
        .unwrap();
    assert!(status.success());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("scan.json")).unwrap()).unwrap();
    assert_eq!(v["n0"], 1);
    assert_eq!(v["n_hi"], 200);
}

#[test]
fn spt_check_passes() {
    let mut cfg = RunConfig::new(Command::SptCheck);
    cfg.n_max = Some(40);
    cfg.format = Format::Json;
    let out = render(&cfg).unwrap();
    assert!(out.passed);
    let v: serde_json::Value = serde_json::from_str(&out.body).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 40);
}

#[test]
fn floats_carry_seventeen_digits() {
    let mut cfg = RunConfig::new(Command::Asymptotic);
    cfg.t_mod = Some(3);
    cfg.r = Some(2);
    cfg.n = Some(vec![50]);
    let out = render(&cfg).unwrap();
    let rows = csv_rows(&out.body);
    let mantissa = rows[0][5].split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17);
}

#[test]
fn n_range_syntax() {
    assert_eq!(parse_n_range("250,500, 1000").unwrap(), vec![250, 500, 1000]);
    assert_eq!(parse_n_range("3..6").unwrap(), vec![3, 4, 5, 6]);
    assert_eq!(parse_n_range("0..100:50").unwrap(), vec![0, 50, 100]);
    for bad in ["", "a,b", "5..1", "1..5:0", "1..x"] {
        assert!(parse_n_range(bad).is_err(), "{bad}");
    }
}

#[test]
fn json_reports_are_deterministic() {
    let mut cfg = RunConfig::new(Command::Verify);
    cfg.case = Some(mockforms::Case::MuhatModular);
    cfg.trials = 10;
    cfg.seed = 99;
    cfg.format = Format::Json;
    assert_eq!(render(&cfg).unwrap(), render(&cfg).unwrap());
}
