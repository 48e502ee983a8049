//! CSV ingestion, chronological splits, train-split standardization and
//! sliding windows.

use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::tensor::SeriesTensor;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DataError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("malformed CSV: {0}")]
    Csv(String),
    #[error("row {row}, column {column:?}: cannot parse {value:?} as a number")]
    Parse { row: usize, column: String, value: String },
    #[error("row {row}, column {column:?}: missing value")]
    MissingValue { row: usize, column: String },
    #[error("dataset does not match its declared schema: {0}")]
    SpecMismatch(String),
    #[error("{split} split has {len} points, windows need at least {needed}")]
    SplitTooShort { split: &'static str, len: usize, needed: usize },
    #[error("invalid synthetic tone: {0}")]
    InvalidTone(String),
}

/// Split sizes in time points, taken contiguously from the start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splits {
    pub train: usize,
    pub val: usize,
    pub test: usize,
}

impl Splits {
    pub fn total(&self) -> usize {
        self.train + self.val + self.test
    }

    /// 70/10/20 partition of `len` points, the test split taking the rest.
    pub fn proportional(len: usize) -> Self {
        let train = len * 7 / 10;
        let val = len / 10;
        Self {
            train,
            val,
            test: len - train - val,
        }
    }
}

/// Which part of a dataset a window set is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Val,
    Test,
}

impl Split {
    pub fn name(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Val => "val",
            Split::Test => "test",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSpec {
    pub name: String,
    pub path: Option<PathBuf>,
    /// Required number of numeric columns, if pinned.
    pub variates: Option<usize>,
    pub splits: Option<Splits>,
    pub frequency: String,
}

impl DatasetSpec {
    /// Benchmark datasets with their published variate counts and splits.
    pub fn known(name: &str) -> Option<Self> {
        let (canonical, variates, (train, val, test), frequency) = match name.to_ascii_lowercase().as_str() {
            "etth1" => ("ETTh1", 7, (8545, 2881, 2881), "1 hour"),
            "etth2" => ("ETTh2", 7, (8545, 2881, 2881), "1 hour"),
            "ettm1" => ("ETTm1", 7, (34465, 11521, 11521), "15 min"),
            "ettm2" => ("ETTm2", 7, (34465, 11521, 11521), "15 min"),
            "weather" => ("Weather", 21, (36792, 5271, 10540), "10 min"),
            "traffic" => ("Traffic", 862, (12185, 1757, 3509), "1 hour"),
            "ecl" | "electricity" => ("ECL", 321, (18317, 2633, 5261), "1 hour"),
            _ => return None,
        };
        Some(Self {
            name: canonical.to_string(),
            path: None,
            variates: Some(variates),
            splits: Some(Splits { train, val, test }),
            frequency: frequency.to_string(),
        })
    }

    pub fn custom(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            path: None,
            variates: None,
            splits: None,
            frequency: String::new(),
        }
    }
}

/// Multivariate series stored per variate: `values[n][t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSeries {
    pub columns: Vec<String>,
    pub timestamps: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl RawSeries {
    pub fn variates(&self) -> usize {
        self.values.len()
    }

    pub fn len(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reads a CSV whose first column is a timestamp and whose remaining columns
/// are numeric variates. With a spec, the variate count and the minimum row
/// count implied by its splits are enforced.
pub fn load_csv(path: &Path, spec: Option<&DatasetSpec>) -> Result<RawSeries, DataError> {
    let file = File::open(path).map_err(|e| DataError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let raw = parse_csv(file)?;
    if let Some(spec) = spec {
        check_spec(&raw, spec)?;
    }
    Ok(raw)
}

pub fn check_spec(raw: &RawSeries, spec: &DatasetSpec) -> Result<(), DataError> {
    if let Some(n) = spec.variates {
        if raw.variates() != n {
            return Err(DataError::SpecMismatch(format!(
                "{} expects {n} variates, file has {}",
                spec.name,
                raw.variates()
            )));
        }
    }
    if let Some(splits) = spec.splits {
        if raw.len() < splits.total() {
            return Err(DataError::SpecMismatch(format!(
                "{} splits need {} rows, file has {}",
                spec.name,
                splits.total(),
                raw.len()
            )));
        }
    }
    Ok(())
}

pub fn parse_csv<R: Read>(reader: R) -> Result<RawSeries, DataError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| DataError::Csv(e.to_string()))?.clone();
    if headers.len() < 2 {
        return Err(DataError::Csv("need a timestamp column and at least one variate".into()));
    }
    let columns: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    let mut values = vec![Vec::new(); columns.len()];
    let mut timestamps = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        // header is line 1
        let row = i + 2;
        let record = record.map_err(|e| DataError::Csv(e.to_string()))?;
        if record.len() != headers.len() {
            return Err(DataError::Csv(format!(
                "row {row} has {} fields, header has {}",
                record.len(),
                headers.len()
            )));
        }
        timestamps.push(record[0].to_string());
        for (c, cell) in record.iter().skip(1).enumerate() {
            if cell.is_empty() || cell.eq_ignore_ascii_case("nan") || cell.eq_ignore_ascii_case("na") {
                return Err(DataError::MissingValue {
                    row,
                    column: columns[c].clone(),
                });
            }
            let v: f64 = cell.parse().map_err(|_| DataError::Parse {
                row,
                column: columns[c].clone(),
                value: cell.to_string(),
            })?;
            if !v.is_finite() {
                return Err(DataError::Parse {
                    row,
                    column: columns[c].clone(),
                    value: cell.to_string(),
                });
            }
            values[c].push(v);
        }
    }
    Ok(RawSeries {
        columns,
        timestamps,
        values,
    })
}

/// Per-variate affine map fitted on the train split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub mean: f64,
    pub std: f64,
    /// Zero train variance: the variate is only centered.
    pub degenerate: bool,
}

impl Scaler {
    pub fn fit(train: &[f64]) -> Self {
        let n = train.len() as f64;
        let mean = train.iter().sum::<f64>() / n;
        let var = train.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let degenerate = !(var > 0.0);
        Self {
            mean,
            std: if degenerate { 1.0 } else { var.sqrt() },
            degenerate,
        }
    }

    pub fn apply(&self, v: f64) -> f64 {
        (v - self.mean) / self.std
    }

    pub fn invert(&self, v: f64) -> f64 {
        v * self.std + self.mean
    }
}

/// A standardized dataset ready for windowing.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub columns: Vec<String>,
    /// Standardized values, `values[n][t]`.
    pub values: Vec<Vec<f64>>,
    pub scalers: Vec<Scaler>,
    pub splits: Splits,
}

/// Fits per-variate scalers on the train split (the first `splits.train`
/// points) and applies them to the whole series. Points past the three
/// splits are dropped.
pub fn standardize(raw: &RawSeries, splits: Splits) -> Result<(Vec<Vec<f64>>, Vec<Scaler>), DataError> {
    if splits.train == 0 {
        return Err(DataError::SplitTooShort {
            split: "train",
            len: 0,
            needed: 1,
        });
    }
    if raw.len() < splits.total() {
        return Err(DataError::SpecMismatch(format!(
            "splits need {} points, series has {}",
            splits.total(),
            raw.len()
        )));
    }
    let mut scalers = Vec::with_capacity(raw.variates());
    let mut out = Vec::with_capacity(raw.variates());
    for (name, series) in raw.columns.iter().zip(&raw.values) {
        let scaler = Scaler::fit(&series[..splits.train]);
        if scaler.degenerate {
            log::warn!("variate {name:?} is constant on the train split; centering only");
        }
        out.push(series[..splits.total()].iter().map(|&v| scaler.apply(v)).collect());
        scalers.push(scaler);
    }
    Ok((out, scalers))
}

pub fn destandardize(values: &[Vec<f64>], scalers: &[Scaler]) -> Vec<Vec<f64>> {
    values
        .iter()
        .zip(scalers)
        .map(|(s, sc)| s.iter().map(|&v| sc.invert(v)).collect())
        .collect()
}

impl Dataset {
    pub fn from_raw(name: impl Into<String>, raw: &RawSeries, splits: Splits) -> Result<Self, DataError> {
        let (values, scalers) = standardize(raw, splits)?;
        Ok(Self {
            name: name.into(),
            columns: raw.columns.clone(),
            values,
            scalers,
            splits,
        })
    }

    pub fn variates(&self) -> usize {
        self.values.len()
    }

    /// `(start, len)` of a split.
    pub fn range(&self, split: Split) -> (usize, usize) {
        let s = self.splits;
        match split {
            Split::Train => (0, s.train),
            Split::Val => (s.train, s.val),
            Split::Test => (s.train + s.val, s.test),
        }
    }

    pub fn windows(&self, split: Split, lookback: usize, horizon: usize) -> Result<WindowSet<'_>, DataError> {
        let (start, len) = self.range(split);
        windows(&self.values, split, start, len, lookback, horizon)
    }
}

/// One lookback/horizon pair, both `[N, ·]` row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSample {
    pub origin: usize,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

/// Stride-1 windows of one split, materialized lazily.
#[derive(Debug, Clone, Copy)]
pub struct WindowSet<'a> {
    values: &'a [Vec<f64>],
    start: usize,
    count: usize,
    lookback: usize,
    horizon: usize,
}

/// Windows over `values[n][start..start + len]`: `len - T - K + 1` of them.
pub fn windows<'a>(
    values: &'a [Vec<f64>],
    split: Split,
    start: usize,
    len: usize,
    lookback: usize,
    horizon: usize,
) -> Result<WindowSet<'a>, DataError> {
    let needed = lookback + horizon;
    if len < needed || lookback == 0 || horizon == 0 {
        return Err(DataError::SplitTooShort {
            split: split.name(),
            len,
            needed,
        });
    }
    Ok(WindowSet {
        values,
        start,
        count: len - needed + 1,
        lookback,
        horizon,
    })
}

impl<'a> WindowSet<'a> {
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn lookback(&self) -> usize {
        self.lookback
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn variates(&self) -> usize {
        self.values.len()
    }

    /// Absolute time index of window `i`'s first lookback point.
    pub fn origin(&self, i: usize) -> usize {
        self.start + i
    }

    pub fn sample(&self, i: usize) -> WindowSample {
        assert!(i < self.count, "window {i} out of {}", self.count);
        let o = self.origin(i);
        let (t, k) = (self.lookback, self.horizon);
        let mut x = Vec::with_capacity(self.variates() * t);
        let mut y = Vec::with_capacity(self.variates() * k);
        for series in self.values {
            x.extend_from_slice(&series[o..o + t]);
            y.extend_from_slice(&series[o + t..o + t + k]);
        }
        WindowSample { origin: o, x, y }
    }

    /// Stacks the windows at `indices` into `([B, N, T], [B, N, K])`.
    pub fn batch(&self, indices: &[usize]) -> (SeriesTensor, SeriesTensor) {
        let n = self.variates();
        let (t, k) = (self.lookback, self.horizon);
        let mut x = Vec::with_capacity(indices.len() * n * t);
        let mut y = Vec::with_capacity(indices.len() * n * k);
        for &i in indices {
            assert!(i < self.count, "window {i} out of {}", self.count);
            let o = self.origin(i);
            for series in self.values {
                x.extend_from_slice(&series[o..o + t]);
            }
            for series in self.values {
                y.extend_from_slice(&series[o + t..o + t + k]);
            }
        }
        let b = indices.len();
        (
            SeriesTensor::from_vec(b, n, t, x).expect("window shape"),
            SeriesTensor::from_vec(b, n, k, y).expect("window shape"),
        )
    }
}

/// One sinusoidal component `amplitude * sin(2π t / period + phase)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tone {
    pub amplitude: f64,
    pub period: f64,
    #[serde(default)]
    pub phase: f64,
}

/// Sum of tones plus seeded Gaussian noise, identical deterministic part on
/// every variate and independent noise per variate.
pub fn synthetic_multitone(
    tones: &[Tone],
    noise_sigma: f64,
    length: usize,
    variates: usize,
    seed: u64,
) -> Result<RawSeries, DataError> {
    for tone in tones {
        if !(tone.period >= 2.0) {
            return Err(DataError::InvalidTone(format!("period {} is below 2 samples", tone.period)));
        }
    }
    if !(noise_sigma >= 0.0) {
        return Err(DataError::InvalidTone(format!("noise sigma {noise_sigma} is negative")));
    }
    let clean: Vec<f64> = (0..length)
        .map(|t| {
            tones
                .iter()
                .map(|tone| tone.amplitude * (std::f64::consts::TAU * t as f64 / tone.period + tone.phase).sin())
                .sum()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, noise_sigma).map_err(|e| DataError::InvalidTone(e.to_string()))?;
    let values = (0..variates)
        .map(|_| {
            clean
                .iter()
                .map(|&c| if noise_sigma > 0.0 { c + noise.sample(&mut rng) } else { c })
                .collect()
        })
        .collect();
    Ok(RawSeries {
        columns: (0..variates).map(|n| format!("v{n}")).collect(),
        timestamps: (0..length).map(|t| t.to_string()).collect(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_csv_values_in_order() {
        let text = "date,a,b\n2020-01-01,1.5,2\n2020-01-02,-3,4e-1\n2020-01-03,0,7\n";
        let raw = parse_csv(text.as_bytes()).unwrap();
        assert_eq!(raw.columns, vec!["a", "b"]);
        assert_eq!(raw.values, vec![vec![1.5, -3.0, 0.0], vec![2.0, 0.4, 7.0]]);
        assert_eq!(raw.timestamps.len(), 3);
    }

    #[test]
    fn bad_cells_are_located() {
        let err = parse_csv("date,a,b\nx,1,2\ny,3,oops\n".as_bytes()).unwrap_err();
        assert_eq!(
            err,
            DataError::Parse {
                row: 3,
                column: "b".into(),
                value: "oops".into()
            }
        );
        let err = parse_csv("date,a\nx,\n".as_bytes()).unwrap_err();
        assert_eq!(err, DataError::MissingValue { row: 2, column: "a".into() });
    }

    #[test]
    fn window_counting() {
        let values = vec![(0..10).map(f64::from).collect::<Vec<_>>()];
        let set = windows(&values, Split::Train, 0, 10, 4, 2).unwrap();
        assert_eq!(set.len(), 5);
        let last = set.sample(4);
        assert_eq!(last.x, vec![4.0, 5.0, 6.0, 7.0]);
        assert_eq!(last.y, vec![8.0, 9.0]);
        assert!(matches!(
            windows(&values, Split::Val, 0, 5, 4, 2),
            Err(DataError::SplitTooShort { .. })
        ));
    }

    #[test]
    fn benchmark_window_count() {
        let spec = DatasetSpec::known("ETTh1").unwrap();
        let splits = spec.splits.unwrap();
        let values = vec![vec![0.0; splits.total()]; 1];
        let set = windows(&values, Split::Train, 0, splits.train, 96, 96).unwrap();
        assert_eq!(set.len(), 8354);
    }
}
