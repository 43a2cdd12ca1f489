//! End-to-end runs of the mmgtune binary through its public interface.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mmgtune(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmgtune"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "expected success, stderr:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn assert_fails_mentioning(out: &Output, needle: &str) {
    assert!(!out.status.success(), "expected a nonzero exit");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains(needle),
        "diagnostic should mention {needle:?}, got:\n{stderr}"
    );
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap())
        .unwrap_or_else(|e| panic!("{} is not valid JSON: {e}", path.display()))
}

#[test]
fn simulate_mirrored_turns_writes_tracks_and_summary() {
    let tmp = tempfile::tempdir().unwrap();
    let out = mmgtune(
        tmp.path(),
        &[
            "simulate",
            "--delta",
            "35",
            "--delta-sign",
            "both",
            "--np-rpm",
            "106",
            "--u0-knots",
            "6",
            "--out-dir",
            "sim",
        ],
    );
    assert_ok(&out);
    for f in [
        "trajectory_turn+35.csv",
        "track_turn+35.csv",
        "trajectory_turn-35.csv",
        "track_turn-35.csv",
        "summary.json",
    ] {
        assert!(tmp.path().join("sim").join(f).is_file(), "{f} missing");
    }
    let summary = read_json(&tmp.path().join("sim/summary.json"));
    assert_eq!(summary["schema_version"], 1);
    assert_eq!(summary["runs"].as_array().unwrap().len(), 2);
    assert_eq!(summary["comparison"]["starboard_larger"], true);
    let sb = summary["comparison"]["starboard_diameter_m"].as_f64().unwrap();
    let pt = summary["comparison"]["port_diameter_m"].as_f64().unwrap();
    assert!(sb > pt && pt > 0.0);

    let track = fs::read_to_string(tmp.path().join("sim/track_turn+35.csv")).unwrap();
    let mut lines = track.lines();
    assert_eq!(lines.next(), Some("x_over_l,y_over_l"));
    assert_eq!(lines.count(), 600);
}

#[test]
fn simulate_zero_rudder_runs_straight() {
    let tmp = tempfile::tempdir().unwrap();
    let out = mmgtune(
        tmp.path(),
        &["simulate", "--delta", "0", "--duration", "120", "--dt", "0.5", "--out-dir", "s0"],
    );
    assert_ok(&out);
    let summary = read_json(&tmp.path().join("s0/summary.json"));
    let runs = summary["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 1);
    assert_eq!(runs[0]["closed"], false);
    assert!(summary.get("comparison").is_none());
    // 120 s at dt = 0.5 -> 240 samples.
    let track = fs::read_to_string(tmp.path().join("s0/track_turn+0.csv")).unwrap();
    assert_eq!(track.lines().count(), 241);
}

/// The full pipeline: fabricate a dataset, tune against its tune split,
/// score the tuned parameters on the held-out split, and check that the
/// whole chain is reproducible.
#[test]
fn gen_tune_evaluate_pipeline_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    assert_ok(&mmgtune(
        tmp.path(),
        &[
            "gen-trials",
            "--out-dir",
            "data",
            "--noise",
            "0",
            "--theta-true-perturb",
            "0.15",
            "--seed",
            "7",
            "--duration",
            "150",
        ],
    ));
    for label in
        ["turn+10", "turn-10", "turn+20", "turn-20", "turn+35", "turn-35", "turn+40", "turn-40"]
    {
        assert!(tmp.path().join("data").join(format!("{label}.csv")).is_file());
    }
    assert!(tmp.path().join("data/theta_true.json").is_file());
    let manifest = read_json(&tmp.path().join("data/manifest.json"));
    assert_eq!(manifest["entries"].as_array().unwrap().len(), 8);

    let config = serde_json::json!({
        "schema_version": 1,
        "manifest": "data/manifest.json",
        "out_dir": "out",
        "tuning": {
            "selector": ["r0", "w_p0", "kappa"],
            "a_r": 0.2,
            "cma": { "max_evals": 500, "seed": 11 }
        }
    });
    fs::write(tmp.path().join("run.json"), serde_json::to_string_pretty(&config).unwrap())
        .unwrap();

    assert_ok(&mmgtune(tmp.path(), &["tune", "--config", "run.json"]));
    let report = read_json(&tmp.path().join("out/report.json"));
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["history_path"], "history.csv");
    let j_pre = report["j_pre_tune"].as_f64().unwrap();
    let j_star = report["j_star_tune"].as_f64().unwrap();
    assert!(j_star < j_pre, "tuning must improve on the reference");
    let history = fs::read_to_string(tmp.path().join("out/history.csv")).unwrap();
    assert!(history.starts_with("iteration,evals,lambda,best_f,best_ever_f,restart\n"));
    assert!(history.lines().count() > 1);

    // The tuned parameter file round-trips through evaluate.
    assert_ok(&mmgtune(
        tmp.path(),
        &[
            "evaluate",
            "--config",
            "run.json",
            "--params",
            "out/theta_star.json",
            "--dataset",
            "test",
            "--out-dir",
            "eval",
        ],
    ));
    let eval = read_json(&tmp.path().join("eval/evaluation_test.json"));
    assert_eq!(eval["dataset"], "test");
    assert_eq!(eval["per_trial"].as_array().unwrap().len(), 4);
    let overlay = fs::read_to_string(tmp.path().join("eval/overlay_test_turn-10.csv")).unwrap();
    assert!(overlay.starts_with("t,x_rec_over_l,y_rec_over_l,x_sim_over_l,y_sim_over_l\n"));
    assert_eq!(overlay.lines().count(), 151);

    // A rerun into a fresh directory reproduces everything bit for bit
    // except the wall-clock field.
    assert_ok(&mmgtune(tmp.path(), &["tune", "--config", "run.json", "--out-dir", "out2"]));
    assert_eq!(
        fs::read(tmp.path().join("out/theta_star.json")).unwrap(),
        fs::read(tmp.path().join("out2/theta_star.json")).unwrap()
    );
    assert_eq!(
        fs::read(tmp.path().join("out/history.csv")).unwrap(),
        fs::read(tmp.path().join("out2/history.csv")).unwrap()
    );
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    let b = read_json(&tmp.path().join("out2/report.json"));
    assert_eq!(strip(report), strip(b));
}

#[test]
fn sweep_emits_one_row_per_radius() {
    let tmp = tempfile::tempdir().unwrap();
    assert_ok(&mmgtune(
        tmp.path(),
        &[
            "gen-trials",
            "--out-dir",
            "data",
            "--noise",
            "0",
            "--theta-true-perturb",
            "0.1",
            "--seed",
            "3",
            "--duration",
            "120",
        ],
    ));
    let config = serde_json::json!({
        "schema_version": 1,
        "manifest": "data/manifest.json",
        "tuning": {
            "selector": ["r0", "t_p"],
            "cma": { "max_evals": 300, "seed": 5 }
        }
    });
    fs::write(tmp.path().join("run.json"), config.to_string()).unwrap();

    assert_ok(&mmgtune(
        tmp.path(),
        &["sweep", "--config", "run.json", "--ar", "0.2", "--ar", "0.4", "--out-dir", "sw"],
    ));
    let csv = fs::read_to_string(tmp.path().join("sw/sweep_summary.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "a_r,j_tune,j_test");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("0.2,"));
    assert!(lines[2].starts_with("0.4,"));
    for dir in ["ar-0.2", "ar-0.4"] {
        for f in ["report.json", "theta_star.json", "history.csv"] {
            assert!(tmp.path().join("sw").join(dir).join(f).is_file(), "{dir}/{f} missing");
        }
    }
    // The test-set deviation is recorded but never optimized against.
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row.len(), 3);
    assert!(row[1].parse::<f64>().unwrap() > 0.0);
    assert!(row[2].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn bad_inputs_fail_with_a_diagnostic_and_nonzero_exit() {
    let tmp = tempfile::tempdir().unwrap();

    // Unknown config keys are rejected, not ignored.
    fs::write(
        tmp.path().join("bad.json"),
        r#"{"schema_version":1,"manifest":"m.json","typo_key":4}"#,
    )
    .unwrap();
    assert_fails_mentioning(&mmgtune(tmp.path(), &["tune", "--config", "bad.json"]), "typo_key");

    // Future schema versions are refused instead of misread.
    fs::write(tmp.path().join("v2.json"), r#"{"schema_version":2,"manifest":"m.json"}"#).unwrap();
    assert_fails_mentioning(&mmgtune(tmp.path(), &["tune", "--config", "v2.json"]), "schema_version");

    // A nonsensical radius is rejected before anything is loaded or run.
    assert_fails_mentioning(
        &mmgtune(tmp.path(), &["tune", "--config", "absent.json", "--ar", "0"]),
        "--ar",
    );
    assert_fails_mentioning(
        &mmgtune(tmp.path(), &["sweep", "--config", "absent.json", "--ar", "-0.1"]),
        "--ar",
    );

    // A missing manifest surfaces as a load error.
    fs::write(
        tmp.path().join("no_data.json"),
        r#"{"schema_version":1,"manifest":"nowhere/manifest.json"}"#,
    )
    .unwrap();
    assert_fails_mentioning(
        &mmgtune(tmp.path(), &["tune", "--config", "no_data.json"]),
        "manifest",
    );

    // Bad generator settings are rejected up front.
    assert_fails_mentioning(&mmgtune(tmp.path(), &["gen-trials", "--noise", "-1"]), "--noise");

    // Nothing was written by any of the failed runs.
    let residue: Vec<_> = fs::read_dir(tmp.path())
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_dir())
        .collect();
    assert!(residue.is_empty(), "failed runs must not leave directories: {residue:?}");
}
