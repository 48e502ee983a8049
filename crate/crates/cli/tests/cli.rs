use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use beat::run::{read_balance_log, read_test_record};

const SYNTHETIC: &str = r#"
lookback = 32
horizon = 16
seed = 5
[dataset]
kind = "synthetic"
name = "tones"
length = 600
variates = 2
noise = 0.1
tones = [{ amplitude = 1.0, period = 40.0 }, { amplitude = 0.2, period = 5.0, phase = 0.5 }]
[model]
width = 8
depth = 1
patch_len = 8
patch_stride = 4
[train]
max_epochs = 3
batch_size = 16
"#;

fn beat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beat"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn config(dir: &Path) -> PathBuf {
    let path = dir.join("run.toml");
    std::fs::write(&path, SYNTHETIC).unwrap();
    path
}

fn train(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let cfg = config(dir);
    let run = dir.join(name);
    let mut args = vec!["train", "--config", cfg.to_str().unwrap(), "--run-dir", run.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = beat(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    run
}

fn read(path: PathBuf) -> Vec<u8> {
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn train_writes_every_artifact_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = train(dir.path(), "a", &[]);
    let b = train(dir.path(), "b", &[]);
    for file in ["config.toml", "checkpoint.bin", "metrics.csv", "balance.jsonl", "test_metrics.json", "run.json"] {
        assert!(a.join(file).is_file(), "missing {file}");
    }
    for file in ["config.toml", "checkpoint.bin", "metrics.csv", "balance.jsonl", "test_metrics.json"] {
        assert_eq!(read(a.join(file)), read(b.join(file)), "{file} differs between identical runs");
    }
    let snapshot = std::fs::read_to_string(a.join("config.toml")).unwrap();
    assert!(snapshot.contains("learning_rate"), "snapshot must carry resolved defaults");
}

#[test]
fn snapshot_alone_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let a = train(dir.path(), "a", &["--set", "train.max_epochs=2"]);
    let b = dir.path().join("b");
    let o = beat(&["train", "--config", a.join("config.toml").to_str().unwrap(), "--run-dir", b.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(read(a.join("checkpoint.bin")), read(b.join("checkpoint.bin")));
}

#[test]
fn modulation_off_changes_the_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let on = train(dir.path(), "on", &[]);
    let off = train(dir.path(), "off", &["--set", "balance.modulation=off"]);
    assert_ne!(read(on.join("metrics.csv")), read(off.join("metrics.csv")));
    let reports = read_balance_log(&off.join("balance.jsonl")).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.coefficients.iter().all(|&c| c == 1.0)));
}

#[test]
fn evaluate_reproduces_training_time_scores() {
    let dir = tempfile::tempdir().unwrap();
    let run = train(dir.path(), "r", &[]);
    let out = dir.path().join("eval.json");
    let o = beat(&["evaluate", "--run-dir", run.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&read(out)).unwrap();
    let trained = read_test_record(&run).unwrap();
    assert_eq!(doc["records"][0]["row"]["mse"].as_f64().unwrap(), trained.row.mse);
    assert_eq!(doc["records"][0]["row"]["mae"].as_f64().unwrap(), trained.row.mae);
}

#[test]
fn evaluate_rejects_a_foreign_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let run = train(dir.path(), "r", &[]);
    let o = beat(&["evaluate", "--run-dir", run.to_str().unwrap(), "--dataset", "ETTh1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mismatch"));

    let csv = dir.path().join("three.csv");
    let mut text = String::from("date,a,b,c\n");
    for t in 0..600 {
        text += &format!("{t},{},{},{}\n", (t as f64 * 0.1).sin(), t % 7, t % 3);
    }
    std::fs::write(&csv, text).unwrap();
    let o = beat(&["evaluate", "--run-dir", run.to_str().unwrap(), "--data", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("variates"));
}

#[test]
fn four_horizons_make_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["evaluate".to_string()];
    let mut rows = Vec::new();
    for k in [96, 192, 336, 720] {
        let run = train(
            dir.path(),
            &format!("k{k}"),
            &[
                "--set",
                &format!("horizon={k}"),
                "--set",
                "dataset.length=8000",
                "--set",
                "train.max_epochs=1",
            ],
        );
        rows.push(read_test_record(&run).unwrap().row);
        args.push("--run-dir".into());
        args.push(run.to_str().unwrap().into());
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let o = beat(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let avg_line = text.lines().find(|l| l.contains("Avg")).expect("Avg row");
    let avg = rows.iter().map(|r| r.mse).sum::<f64>() / 4.0;
    assert!(avg_line.contains(&beat::eval::format_metric(avg)), "{avg_line}");
    for k in ["96", "192", "336", "720"] {
        assert!(text.lines().any(|l| l.split_whitespace().nth(1) == Some(k)), "{text}");
    }
}

#[test]
fn decompose_writes_bands_and_reconstructs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("in.csv");
    let mut text = String::from("date,wave,flat\n");
    for t in 0..97 {
        text += &format!("{t},{},4.5\n", (t as f64 * 0.3).sin() + 0.01 * t as f64);
    }
    std::fs::write(&csv, text).unwrap();
    let out = dir.path().join("bands");
    let o = beat(&["decompose", "--input", csv.to_str().unwrap(), "--wavelet", "sym4", "--level", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let err: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("max reconstruction error: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(err < 1e-10);
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().collect();
    assert_eq!(files.len(), 2 * 4);
    for band in ["D1", "D2", "D3"] {
        let detail = std::fs::read_to_string(out.join(format!("flat_{band}.csv"))).unwrap();
        for line in detail.lines().skip(1) {
            let c: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
            assert!(c.abs() < 1e-12, "{band}: {c}");
        }
    }
}

#[test]
fn inspect_balance_exports_one_row_per_step() {
    let dir = tempfile::tempdir().unwrap();
    let run = train(dir.path(), "r", &[]);
    let export = dir.path().join("balance.csv");
    let o = beat(&["inspect-balance", "--run-dir", run.to_str().unwrap(), "--export", export.to_str().unwrap()]);
    assert!(o.status.success());
    let reports = read_balance_log(&run.join("balance.jsonl")).unwrap();
    let rows = std::fs::read_to_string(&export).unwrap().lines().count() - 1;
    assert_eq!(rows, reports.len());
    for r in &reports {
        assert!((r.mean_detail_ratio() - 1.0).abs() < 1e-9);
    }
    let o = beat(&["inspect-balance", "--run-dir", dir.path().join("missing").to_str().unwrap()]);
    assert!(!o.status.success());
}

#[test]
fn failures_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path());
    let cfg = cfg.to_str().unwrap();
    let run = dir.path().join("x");
    let run = run.to_str().unwrap();
    let unknown = beat(&["train", "--config", cfg, "--run-dir", run, "--set", "train.learning_rat=1"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("train.learning_rat"));
    let missing = beat(&["train", "--run-dir", run, "--set", "dataset.path=/nonexistent/file.csv"]);
    assert_eq!(missing.status.code(), Some(3));
    let blowup = beat(&["train", "--config", cfg, "--run-dir", run, "--set", "train.learning_rate=1e300"]);
    assert_eq!(blowup.status.code(), Some(4), "{}", String::from_utf8_lossy(&blowup.stderr));
}
