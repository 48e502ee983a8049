//! End-to-end runs and their on-disk artifacts.
//!
//! A run directory holds:
//!
//! | file | contents |
//! |------|----------|
//! | `config.toml` | resolved configuration |
//! | `checkpoint.bin` | best-validation parameters, see [`crate::checkpoint`] |
//! | `metrics.csv` | one row per validation round, epoch 0 is the initial model |
//! | `balance.jsonl` | header line, then one [`BalanceReport`] per training step |
//! | `test_metrics.json` | [`TestRecord`] for the restored model |
//! | `run.json` | [`RunRecord`]: counts and wall-clock timings |
//!
//! Everything except `run.json` is a pure function of the configuration.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::balance::BalanceReport;
use crate::checkpoint::{self, CheckpointError};
use crate::config::{ConfigError, DatasetKind, RunConfig};
use crate::data::{load_csv, synthetic_multitone, DataError, Dataset, Split, Splits};
use crate::eval::{evaluate, EvalError, EvalSpace, MetricsRow, Scores};
use crate::model::{ForecastModel, ModelError};
use crate::train::{fit, FitHistory, TrainError};
use crate::wavelet::{dwt_multilevel, idwt_multilevel, WaveletError, WaveletSpec};
use crate::SeriesTensor;

pub const FORMAT_VERSION: u32 = 1;
pub const BALANCE_LOG_FORMAT: &str = "beat-balance-log";
pub const METRICS_HEADER: &str = "# beat-metrics v1";

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Wavelet(#[from] WaveletError),
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path} line {line}: {message}")]
    Log { path: String, line: usize, message: String },
    #[error("mismatch: {0}")]
    Mismatch(String),
}

/// Coarse failure class, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    Config,
    Data,
    Numerical,
    Other,
}

impl RunError {
    pub fn kind(&self) -> FailureKind {
        let model_kind = |e: &ModelError| match e {
            ModelError::NonFiniteInput => FailureKind::Numerical,
            ModelError::InvalidConfig(_) => FailureKind::Config,
            _ => FailureKind::Other,
        };
        match self {
            RunError::Config(_) => FailureKind::Config,
            RunError::Checkpoint(CheckpointError::Config(_)) => FailureKind::Config,
            RunError::Data(_) | RunError::Mismatch(_) => FailureKind::Data,
            RunError::Train(TrainError::NonFiniteLoss { .. }) => FailureKind::Numerical,
            RunError::Train(TrainError::InvalidConfig(_)) => FailureKind::Config,
            RunError::Train(TrainError::Data(_)) => FailureKind::Data,
            RunError::Train(TrainError::Model(e)) => model_kind(e),
            RunError::Model(e) => model_kind(e),
            RunError::Wavelet(WaveletError::SignalTooShort { .. }) => FailureKind::Data,
            RunError::Wavelet(WaveletError::UnsupportedWavelet(_) | WaveletError::InvalidLevel) => FailureKind::Config,
            _ => FailureKind::Other,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |e| RunError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Loads or generates the configured dataset and standardizes it.
pub fn load_dataset(config: &RunConfig) -> Result<Dataset, RunError> {
    let d = &config.dataset;
    let (raw, splits) = match d.kind {
        DatasetKind::Csv => {
            let spec = d.spec();
            let path = d.path.as_ref().ok_or_else(|| ConfigError::Key {
                key: "dataset.path".into(),
                message: "required for csv datasets".into(),
            })?;
            let raw = load_csv(path, Some(&spec))?;
            let splits = spec.splits.unwrap_or_else(|| Splits::proportional(raw.len()));
            (raw, splits)
        }
        DatasetKind::Synthetic => {
            let raw = synthetic_multitone(&d.tones, d.noise, d.length, d.variates, config.seed)?;
            (raw, d.splits.unwrap_or_else(|| Splits::proportional(d.length)))
        }
    };
    Ok(Dataset::from_raw(&d.name, &raw, splits)?)
}

pub fn build_model(config: &RunConfig, variates: usize) -> Result<ForecastModel, RunError> {
    Ok(ForecastModel::new(
        config.wavelet_spec()?,
        config.lookback,
        config.horizon,
        variates,
        config.model.clone(),
        config.seed,
    )?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestRecord {
    pub format_version: u32,
    pub space: EvalSpace,
    pub windows: usize,
    pub row: MetricsRow,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub format_version: u32,
    pub dataset: String,
    pub config_hash: String,
    pub seed: u64,
    pub variates: usize,
    pub parameters: usize,
    pub steps: u64,
    pub best_epoch: usize,
    pub stopped_early: bool,
    pub fit_seconds: f64,
    pub test_seconds: f64,
    /// Forecast windows per second at batch size 32.
    pub predict_windows_per_second: f64,
}

#[derive(Debug, Clone)]
pub struct TrainSummary {
    pub run_dir: PathBuf,
    pub history: FitHistory,
    pub test: TestRecord,
    pub record: RunRecord,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct MetricsLine {
    epoch: usize,
    steps: u64,
    train_loss: Option<f64>,
    val_mse: f64,
    val_mae: f64,
    improved: bool,
}

/// Trains, evaluates on the test split and writes every artifact into
/// `run_dir` (created if missing).
pub fn train_run(config: &RunConfig, run_dir: &Path) -> Result<TrainSummary, RunError> {
    let dataset = load_dataset(config)?;
    std::fs::create_dir_all(run_dir).map_err(io_err(run_dir))?;
    let snapshot = run_dir.join("config.toml");
    std::fs::write(&snapshot, config.to_toml()).map_err(io_err(&snapshot))?;

    let mut model = build_model(config, dataset.variates())?;
    let log_path = run_dir.join("balance.jsonl");
    let mut log = BufWriter::new(File::create(&log_path).map_err(io_err(&log_path))?);
    let header = serde_json::json!({ "format": BALANCE_LOG_FORMAT, "version": FORMAT_VERSION });
    writeln!(log, "{header}").map_err(io_err(&log_path))?;
    let mut write_failure = None;
    let started = Instant::now();
    let history = fit(&mut model, &dataset, &config.train, &config.balance, config.seed, |outcome| {
        if write_failure.is_none() {
            let line = serde_json::to_string(&outcome.report).expect("report serializes");
            if let Err(e) = writeln!(log, "{line}") {
                write_failure = Some(e);
            }
        }
    })?;
    let fit_seconds = started.elapsed().as_secs_f64();
    if let Some(e) = write_failure {
        return Err(io_err(&log_path)(e));
    }
    log.flush().map_err(io_err(&log_path))?;

    write_metrics(&run_dir.join("metrics.csv"), &history)?;
    checkpoint::save(&run_dir.join("checkpoint.bin"), config, &model)?;

    let started = Instant::now();
    let test = test_record(config, &dataset, &model)?;
    let test_seconds = started.elapsed().as_secs_f64();
    write_json(&run_dir.join("test_metrics.json"), &test)?;

    let record = RunRecord {
        format_version: FORMAT_VERSION,
        dataset: dataset.name.clone(),
        config_hash: config.hash(),
        seed: config.seed,
        variates: dataset.variates(),
        parameters: model.scalar_count(),
        steps: history.steps,
        best_epoch: history.best_epoch,
        stopped_early: history.stopped_early,
        fit_seconds,
        test_seconds,
        predict_windows_per_second: predict_throughput(&model, &dataset)?,
    };
    write_json(&run_dir.join("run.json"), &record)?;
    log::info!(
        "{}: test mse {:.4}, mae {:.4} ({} windows)",
        run_dir.display(),
        test.row.mse,
        test.row.mae,
        test.windows
    );
    Ok(TrainSummary {
        run_dir: run_dir.to_path_buf(),
        history,
        test,
        record,
    })
}

fn test_record(config: &RunConfig, dataset: &Dataset, model: &ForecastModel) -> Result<TestRecord, RunError> {
    let set = dataset.windows(Split::Test, config.lookback, config.horizon)?;
    let scores: Scores = evaluate(model, &set, config.train.eval_batch_size, config.eval.space, &dataset.scalers)?;
    Ok(TestRecord {
        format_version: FORMAT_VERSION,
        space: config.eval.space,
        windows: scores.windows,
        row: MetricsRow {
            dataset: dataset.name.clone(),
            horizon: config.horizon,
            mse: scores.mse,
            mae: scores.mae,
            seed: config.seed,
            config_hash: config.hash(),
        },
    })
}

fn predict_throughput(model: &ForecastModel, dataset: &Dataset) -> Result<f64, RunError> {
    let set = dataset.windows(Split::Test, model.lookback(), model.horizon())?;
    let indices: Vec<usize> = (0..set.len().min(32)).collect();
    let (x, _) = set.batch(&indices);
    let started = Instant::now();
    let mut windows = 0usize;
    while windows == 0 || started.elapsed().as_secs_f64() < 0.2 {
        model.predict(&x)?;
        windows += indices.len();
    }
    Ok(windows as f64 / started.elapsed().as_secs_f64())
}

fn write_metrics(path: &Path, history: &FitHistory) -> Result<(), RunError> {
    let mut file = File::create(path).map_err(io_err(path))?;
    writeln!(file, "{METRICS_HEADER}").map_err(io_err(path))?;
    let mut w = csv::Writer::from_writer(file);
    let mut lines = vec![MetricsLine {
        epoch: 0,
        steps: 0,
        train_loss: None,
        val_mse: history.initial_val.mse,
        val_mae: history.initial_val.mae,
        improved: false,
    }];
    lines.extend(history.epochs.iter().map(|e| MetricsLine {
        epoch: e.epoch,
        steps: e.steps,
        train_loss: Some(e.train_loss),
        val_mse: e.val_mse,
        val_mae: e.val_mae,
        improved: e.improved,
    }));
    for line in lines {
        w.serialize(line).map_err(|e| RunError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), RunError> {
    let text = serde_json::to_string_pretty(value).expect("record serializes");
    std::fs::write(path, text + "\n").map_err(io_err(path))
}

pub fn read_test_record(run_dir: &Path) -> Result<TestRecord, RunError> {
    let path = run_dir.join("test_metrics.json");
    let text = std::fs::read_to_string(&path).map_err(io_err(&path))?;
    serde_json::from_str(&text).map_err(|e| RunError::Log {
        path: path.display().to_string(),
        line: e.line(),
        message: e.to_string(),
    })
}

/// Re-evaluates a checkpoint on the test split of its configured dataset,
/// or of `data` when given. `expected_dataset` guards against evaluating a
/// checkpoint trained on a different dataset.
pub fn evaluate_checkpoint(
    path: &Path,
    data: Option<&Path>,
    expected_dataset: Option<&str>,
) -> Result<TestRecord, RunError> {
    let (mut config, model) = checkpoint::load(path)?;
    if let Some(name) = expected_dataset {
        if !name.eq_ignore_ascii_case(&config.dataset.name) {
            return Err(RunError::Mismatch(format!(
                "checkpoint was trained on {:?}, not {name:?}",
                config.dataset.name
            )));
        }
    }
    if let Some(data) = data {
        config.dataset.kind = DatasetKind::Csv;
        config.dataset.path = Some(data.to_path_buf());
    }
    let dataset = load_dataset(&config)?;
    if dataset.variates() != model.variates() {
        return Err(RunError::Mismatch(format!(
            "checkpoint expects {} variates, dataset {:?} has {}",
            model.variates(),
            dataset.name,
            dataset.variates()
        )));
    }
    test_record(&config, &dataset, &model)
}

/// Reads a balance log, checking its header.
pub fn read_balance_log(path: &Path) -> Result<Vec<BalanceReport>, RunError> {
    let file = File::open(path).map_err(io_err(path))?;
    let log_err = |line: usize, message: String| RunError::Log {
        path: path.display().to_string(),
        line,
        message,
    };
    let mut lines = BufReader::new(file).lines();
    let header = lines
        .next()
        .ok_or_else(|| log_err(1, "empty log".into()))?
        .map_err(io_err(path))?;
    let header: serde_json::Value = serde_json::from_str(&header).map_err(|e| log_err(1, e.to_string()))?;
    if header["format"] != BALANCE_LOG_FORMAT || header["version"] != FORMAT_VERSION {
        return Err(log_err(1, format!("unsupported header {header}")));
    }
    let mut reports = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        reports.push(serde_json::from_str(&line).map_err(|e| log_err(i + 2, e.to_string()))?);
    }
    Ok(reports)
}

/// Per-band summary of a balance log.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandSummary {
    pub band: String,
    pub ratio_mean: f64,
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub coefficient_mean: f64,
    pub coefficient_min: f64,
    pub coefficient_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalanceSummary {
    pub steps: usize,
    pub degenerate_steps: usize,
    /// Largest `|mean detail ratio - 1|` over non-degenerate steps.
    pub max_detail_ratio_deviation: f64,
    pub bands: Vec<BandSummary>,
}

/// Band labels in branch order: `D1 .. Df, A`.
pub fn band_labels(level: usize) -> Vec<String> {
    (1..=level).map(|i| format!("D{i}")).chain(["A".to_string()]).collect()
}

pub fn summarize_balance(reports: &[BalanceReport]) -> BalanceSummary {
    let level = reports.first().map_or(0, |r| r.delta_d.len());
    let stats = |values: Vec<f64>| {
        let n = values.len().max(1) as f64;
        let mean = values.iter().sum::<f64>() / n;
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (mean, min, max)
    };
    let bands = band_labels(level)
        .into_iter()
        .enumerate()
        .map(|(v, band)| {
            let (ratio_mean, ratio_min, ratio_max) = stats(reports.iter().map(|r| r.ratios[v]).collect());
            let (coefficient_mean, coefficient_min, coefficient_max) =
                stats(reports.iter().map(|r| r.coefficients[v]).collect());
            BandSummary {
                band,
                ratio_mean,
                ratio_min,
                ratio_max,
                coefficient_mean,
                coefficient_min,
                coefficient_max,
            }
        })
        .collect();
    BalanceSummary {
        steps: reports.len(),
        degenerate_steps: reports.iter().filter(|r| r.degenerate_mu).count(),
        max_detail_ratio_deviation: reports
            .iter()
            .filter(|r| !r.degenerate_mu)
            .map(|r| (r.mean_detail_ratio() - 1.0).abs())
            .fold(0.0, f64::max),
        bands,
    }
}

/// Writes `step,epoch,r_D1..,r_A,c_D1..,c_A` with one row per report.
pub fn export_balance_csv(reports: &[BalanceReport], path: &Path) -> Result<(), RunError> {
    let level = reports.first().map_or(0, |r| r.delta_d.len());
    let labels = band_labels(level);
    let to_err = |e: csv::Error| RunError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let mut w = csv::Writer::from_path(path).map_err(to_err)?;
    let mut header = vec!["step".to_string(), "epoch".to_string()];
    header.extend(labels.iter().map(|l| format!("r_{l}")));
    header.extend(labels.iter().map(|l| format!("c_{l}")));
    w.write_record(&header).map_err(to_err)?;
    for r in reports {
        let mut row = vec![r.step.to_string(), r.epoch.to_string()];
        row.extend(r.ratios.iter().chain(&r.coefficients).map(f64::to_string));
        w.write_record(&row).map_err(to_err)?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecomposeSummary {
    pub files: Vec<PathBuf>,
    pub bands: usize,
    pub max_reconstruction_error: f64,
}

/// Decomposes every column of a CSV and writes `<column>_<band>.csv` files
/// with `index,coefficient` rows.
pub fn decompose_csv(input: &Path, spec: &WaveletSpec, out_dir: &Path) -> Result<DecomposeSummary, RunError> {
    let raw = load_csv(input, None)?;
    std::fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    let series = SeriesTensor::from_vec(1, raw.variates(), raw.len(), raw.values.concat())
        .map_err(|e| RunError::Mismatch(e.to_string()))?;
    let coeffs = dwt_multilevel(&series, spec)?;
    let back = idwt_multilevel(&coeffs, spec)?;
    let max_reconstruction_error = series
        .data()
        .iter()
        .zip(back.data())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let labels = band_labels(spec.level);
    let mut files = Vec::new();
    for (n, column) in raw.columns.iter().enumerate() {
        for (v, label) in labels.iter().enumerate() {
            let len = coeffs.band_len(v);
            let band = &coeffs.band(v)[n * len..(n + 1) * len];
            let path = out_dir.join(format!("{}_{label}.csv", sanitize(column)));
            let mut text = String::from("index,coefficient\n");
            for (i, c) in band.iter().enumerate() {
                text += &format!("{i},{c}\n");
            }
            std::fs::write(&path, text).map_err(io_err(&path))?;
            files.push(path);
        }
    }
    Ok(DecomposeSummary {
        files,
        bands: labels.len(),
        max_reconstruction_error,
    })
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}
