//! `beat`: train, evaluate and inspect frequency-balanced forecasters.
//!
//! Exit codes: 0 success, 1 other failure, 2 configuration, 3 data,
//! 4 numerical (non-finite loss or input).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use beat::config::{ConfigError, RunConfig};
use beat::eval::{format_metric, report_table};
use beat::run::{self, FailureKind, RunError};
use beat::wavelet::{Wavelet, WaveletSpec};

#[derive(Parser)]
#[command(name = "beat", version, about = "Frequency-balanced wavelet forecasting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a model and write a run directory.
    Train(TrainArgs),
    /// Evaluate checkpoints on their test split.
    Evaluate(EvaluateArgs),
    /// Write the wavelet bands of every column of a CSV file.
    Decompose(DecomposeArgs),
    /// Summarize the per-band ratios and coefficients of a run.
    InspectBalance(InspectArgs),
}

#[derive(Args)]
struct TrainArgs {
    /// TOML run configuration; every key has a default.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override a config key, e.g. `--set balance.modulation=off`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Run directory; defaults to `<output root>/<dataset>-<horizon>-<config hash>`.
    #[arg(long)]
    run_dir: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Checkpoint file; repeat to build a four-horizon report.
    #[arg(long)]
    checkpoint: Vec<PathBuf>,
    /// Run directory, shorthand for its `checkpoint.bin`.
    #[arg(long)]
    run_dir: Vec<PathBuf>,
    /// Evaluate on this CSV instead of the configured dataset path.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Fail unless every checkpoint was trained on this dataset.
    #[arg(long)]
    dataset: Option<String>,
    /// Write the records (and report, if any) as JSON here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// CSV with a timestamp column followed by numeric columns.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "db2")]
    wavelet: Wavelet,
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long)]
    run_dir: PathBuf,
    /// Write one row per training step for plotting.
    #[arg(long)]
    export: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Train(a) => train(a),
        Command::Evaluate(a) => evaluate(a),
        Command::Decompose(a) => decompose(a),
        Command::InspectBalance(a) => inspect(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                FailureKind::Config => 2,
                FailureKind::Data => 3,
                FailureKind::Numerical => 4,
                FailureKind::Other => 1,
            })
        }
    }
}

fn train(args: TrainArgs) -> Result<(), RunError> {
    let config = match &args.config {
        Some(path) => RunConfig::load(path, &args.overrides)?,
        None => RunConfig::from_toml("", &args.overrides)?,
    };
    let run_dir = args.run_dir.unwrap_or_else(|| config.run_dir());
    let summary = run::train_run(&config, &run_dir)?;
    let row = &summary.test.row;
    println!("run directory: {}", run_dir.display());
    println!(
        "{} horizon {}: test mse {} mae {} ({} steps, best epoch {})",
        row.dataset,
        row.horizon,
        format_metric(row.mse),
        format_metric(row.mae),
        summary.history.steps,
        summary.history.best_epoch
    );
    Ok(())
}

fn evaluate(args: EvaluateArgs) -> Result<(), RunError> {
    let mut checkpoints = args.checkpoint.clone();
    checkpoints.extend(args.run_dir.iter().map(|d| d.join("checkpoint.bin")));
    if checkpoints.is_empty() {
        return Err(ConfigError::Key {
            key: "--checkpoint".into(),
            message: "give at least one --checkpoint or --run-dir".into(),
        }
        .into());
    }
    let mut records = Vec::new();
    for path in &checkpoints {
        let record = run::evaluate_checkpoint(path, args.data.as_deref(), args.dataset.as_deref())?;
        println!(
            "{} horizon {}: mse {} mae {} ({} windows, {})",
            record.row.dataset,
            record.row.horizon,
            format_metric(record.row.mse),
            format_metric(record.row.mae),
            record.windows,
            path.display()
        );
        records.push(record);
    }
    let report = if records.len() > 1 {
        let rows: Vec<_> = records.iter().map(|r| r.row.clone()).collect();
        let report = report_table(&rows)?;
        print!("{}", report.render());
        Some(report)
    } else {
        None
    };
    if let Some(out) = &args.output {
        let doc = serde_json::json!({
            "format_version": run::FORMAT_VERSION,
            "records": records,
            "report": report,
        });
        write(out, &serde_json::to_string_pretty(&doc).expect("json"))?;
    }
    Ok(())
}

fn decompose(args: DecomposeArgs) -> Result<(), RunError> {
    let spec = WaveletSpec::new(args.wavelet, args.level)?;
    let summary = run::decompose_csv(&args.input, &spec, &args.out)?;
    println!("wrote {} files ({} bands per column) to {}", summary.files.len(), summary.bands, args.out.display());
    println!("max reconstruction error: {:e}", summary.max_reconstruction_error);
    Ok(())
}

fn inspect(args: InspectArgs) -> Result<(), RunError> {
    let reports = run::read_balance_log(&args.run_dir.join("balance.jsonl"))?;
    let s = run::summarize_balance(&reports);
    println!(
        "{} steps, {} with degenerate mean detail discrepancy, max |mean detail ratio - 1| = {:e}",
        s.steps, s.degenerate_steps, s.max_detail_ratio_deviation
    );
    println!(
        "{:<5} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "band", "r mean", "r min", "r max", "c mean", "c min", "c max"
    );
    for b in &s.bands {
        println!(
            "{:<5} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
            b.band, b.ratio_mean, b.ratio_min, b.ratio_max, b.coefficient_mean, b.coefficient_min, b.coefficient_max
        );
    }
    if let Some(path) = &args.export {
        run::export_balance_csv(&reports, path)?;
        println!("exported {} rows to {}", reports.len(), path.display());
    }
    Ok(())
}

fn write(path: &Path, text: &str) -> Result<(), RunError> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| RunError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
