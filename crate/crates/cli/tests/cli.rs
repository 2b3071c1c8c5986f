use std::path::Path;
use std::process::{Command, Output};

fn rrr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrr"))
        .args(args)
        .env_remove("RRR_SEED")
        .output()
        .expect("binary runs")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn help_lists_subcommands() {
    let out = rrr(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in ["simulate", "rank-select", "estimate", "clt-check", "law", "thresholds"] {
        assert!(text.contains(sub), "missing {sub}");
    }
}

#[test]
fn unknown_flag_is_usage_error() {
    assert_eq!(rrr(&["simulate", "--bogus"]).status.code(), Some(1));
}

#[test]
fn impossible_dimensions_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let status = rrr(&[
        "rank-select",
        "--N",
        "10",
        "--p",
        "20",
        "--r",
        "5",
        "--reps",
        "2",
        "--out",
        out,
    ]);
    assert_eq!(status.status.code(), Some(1));
    assert!(read(&dir.path().join("manifest.json")).contains("\"error\""));
}

#[test]
fn law_table_spans_support() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let status = rrr(&[
        "law", "--kind", "ab", "--lambda", "0.2", "--beta", "0.5", "--grid", "50", "--out", out,
    ]);
    assert_eq!(
        status.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    let text = read(&dir.path().join("law_ab.tsv"));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x\tdensity"));
    let xs: Vec<f64> = lines.map(|l| l.split('\t').next().unwrap().parse().unwrap()).collect();
    assert_eq!(xs.len(), 50);
    assert!((xs[0] - 0.108747).abs() < 1e-5, "{}", xs[0]);
    assert!((xs[49] - 229.891).abs() < 1e-3, "{}", xs[49]);
}

#[test]
fn thresholds_surface_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let status = rrr(&[
        "thresholds",
        "--lambda-grid",
        "0.1:1:3",
        "--beta-grid",
        "0.5:2:4",
        "--out",
        out,
    ]);
    assert_eq!(status.status.code(), Some(0));
    let text = read(&dir.path().join("threshold_surface.csv"));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,beta,theta_a,theta_y,difference"));
    assert_eq!(lines.count(), 12);
}

#[test]
fn rank_select_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.json");
    std::fs::write(
        &config,
        r#"{"N": 60, "p": 15, "r": [15, 30], "rank": 1, "thetas": [0.1], "replications": 20, "master_seed": 3}"#,
    )
    .unwrap();
    let out = dir.path().join("run");
    let status = rrr(&[
        "rank-select",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        status.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    let table = read(&out.join("rank_table.csv"));
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("r,algorithm,mean_rank,std_err,replications"));
    assert_eq!(lines.count(), 8);
    let manifest: serde_json::Value = serde_json::from_str(&read(&out.join("manifest.json"))).unwrap();
    assert_eq!(manifest["status"], "ok");
    assert_eq!(manifest["command"], "rank-select");
    assert_eq!(manifest["parameters"]["signal_convention"], "RowColScaled");
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, seed: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_rrr"))
            .args(["simulate", "--N", "40", "--p", "10", "--r", "10", "--reps", "30"])
            .args(["--out", out.to_str().unwrap()])
            .env("RRR_SEED", seed)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(0));
        let manifest: serde_json::Value = serde_json::from_str(&read(&out.join("manifest.json"))).unwrap();
        assert_eq!(manifest["parameters"]["master_seed"], seed.parse::<u64>().unwrap());
        read(&out.join("rank_table.csv"))
    };
    assert_eq!(run("a", "17"), run("b", "17"));
}

#[test]
fn estimate_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let status = rrr(&[
        "estimate", "--N", "120", "--p", "100", "--r", "200", "--rank", "1", "--theta", "20", "--reps", "3", "--out",
        out,
    ]);
    assert_eq!(
        status.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    let text = read(&dir.path().join("estimates.csv"));
    assert!(text.starts_with("r,estimator,spike,theta,detected_fraction"));
    assert_eq!(text.lines().count(), 4);
}
