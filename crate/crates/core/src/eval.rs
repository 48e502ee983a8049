//! Test metrics, window-level evaluation and horizon report tables.

use serde::{Deserialize, Serialize};

use crate::data::{Scaler, WindowSet};
use crate::model::{ForecastModel, ModelError};

/// The horizons a full report covers.
pub const REPORT_HORIZONS: [usize; 4] = [96, 192, 336, 720];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("shape mismatch: {0} targets vs {1} predictions")]
    ShapeMismatch(usize, usize),
    #[error("report is missing horizon {0}")]
    MissingHorizon(usize),
    #[error("report rows mix datasets {0:?} and {1:?}")]
    MixedDatasets(String, String),
    #[error("no windows to evaluate")]
    Empty,
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn check(y: &[f64], y_hat: &[f64]) -> Result<(), EvalError> {
    if y.len() != y_hat.len() || y.is_empty() {
        return Err(EvalError::ShapeMismatch(y.len(), y_hat.len()));
    }
    Ok(())
}

pub fn mse(y: &[f64], y_hat: &[f64]) -> Result<f64, EvalError> {
    check(y, y_hat)?;
    Ok(y.iter().zip(y_hat).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() / y.len() as f64)
}

pub fn mae(y: &[f64], y_hat: &[f64]) -> Result<f64, EvalError> {
    check(y, y_hat)?;
    Ok(y.iter().zip(y_hat).map(|(a, b)| (a - b).abs()).sum::<f64>() / y.len() as f64)
}

pub fn rmse(y: &[f64], y_hat: &[f64]) -> Result<f64, EvalError> {
    Ok(mse(y, y_hat)?.sqrt())
}

/// Coefficient of determination over all elements. A constant target gives
/// 1 for an exact fit and 0 otherwise.
pub fn r2(y: &[f64], y_hat: &[f64]) -> Result<f64, EvalError> {
    check(y, y_hat)?;
    let mean = y.iter().sum::<f64>() / y.len() as f64;
    let ss_tot: f64 = y.iter().map(|v| (v - mean) * (v - mean)).sum();
    let ss_res: f64 = y.iter().zip(y_hat).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok(if ss_tot == 0.0 {
        if ss_res == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        1.0 - ss_res / ss_tot
    })
}

/// Scale the metrics are computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalSpace {
    /// Train-split standardized values.
    #[default]
    Standardized,
    /// Values mapped back through the dataset scalers.
    Original,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scores {
    pub mse: f64,
    pub mae: f64,
    pub windows: usize,
}

/// Mean squared and absolute error over every window of `set`.
///
/// Errors are accumulated element by element in window order, so the result
/// does not depend on `batch_size`.
pub fn evaluate(
    model: &ForecastModel,
    set: &WindowSet<'_>,
    batch_size: usize,
    space: EvalSpace,
    scalers: &[Scaler],
) -> Result<Scores, EvalError> {
    evaluate_with(set, batch_size, space, scalers, |x| Ok(model.predict(x)?))
}

/// [`evaluate`] with an arbitrary forecaster.
pub fn evaluate_with<F>(
    set: &WindowSet<'_>,
    batch_size: usize,
    space: EvalSpace,
    scalers: &[Scaler],
    mut forecast: F,
) -> Result<Scores, EvalError>
where
    F: FnMut(&crate::SeriesTensor) -> Result<crate::SeriesTensor, EvalError>,
{
    if set.is_empty() {
        return Err(EvalError::Empty);
    }
    let batch_size = batch_size.max(1);
    let n = set.variates();
    let k = set.horizon();
    let mut sq = 0.0;
    let mut abs = 0.0;
    let indices: Vec<usize> = (0..set.len()).collect();
    for chunk in indices.chunks(batch_size) {
        let (x, y) = set.batch(chunk);
        let y_hat = forecast(&x)?;
        if y_hat.shape() != y.shape() {
            return Err(EvalError::ShapeMismatch(y.data().len(), y_hat.data().len()));
        }
        for (row, (ys, ps)) in y.data().chunks_exact(k).zip(y_hat.data().chunks_exact(k)).enumerate() {
            let scaler = (space == EvalSpace::Original).then(|| scalers[row % n]);
            for (&a, &b) in ys.iter().zip(ps) {
                let (a, b) = match scaler {
                    Some(s) => (s.invert(a), s.invert(b)),
                    None => (a, b),
                };
                sq += (a - b) * (a - b);
                abs += (a - b).abs();
            }
        }
    }
    let count = (set.len() * n * k) as f64;
    Ok(Scores {
        mse: sq / count,
        mae: abs / count,
        windows: set.len(),
    })
}

/// One line of a results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRow {
    pub dataset: String,
    pub horizon: usize,
    pub mse: f64,
    pub mae: f64,
    pub seed: u64,
    pub config_hash: String,
}

/// Per-horizon rows with their arithmetic mean.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dataset: String,
    pub rows: Vec<MetricsRow>,
    pub avg_mse: f64,
    pub avg_mae: f64,
}

/// Builds the four-horizon report. Rows may arrive in any order; the report
/// lists them by horizon.
pub fn report_table(rows: &[MetricsRow]) -> Result<Report, EvalError> {
    let first = rows.first().ok_or(EvalError::MissingHorizon(REPORT_HORIZONS[0]))?;
    if let Some(other) = rows.iter().find(|r| r.dataset != first.dataset) {
        return Err(EvalError::MixedDatasets(first.dataset.clone(), other.dataset.clone()));
    }
    let mut ordered = Vec::with_capacity(REPORT_HORIZONS.len());
    for k in REPORT_HORIZONS {
        let row = rows.iter().find(|r| r.horizon == k).ok_or(EvalError::MissingHorizon(k))?;
        ordered.push(row.clone());
    }
    let n = ordered.len() as f64;
    Ok(Report {
        dataset: first.dataset.clone(),
        avg_mse: ordered.iter().map(|r| r.mse).sum::<f64>() / n,
        avg_mae: ordered.iter().map(|r| r.mae).sum::<f64>() / n,
        rows: ordered,
    })
}

impl Report {
    /// Fixed-width text table with three decimals.
    pub fn render(&self) -> String {
        let mut out = format!("{:<10} {:>7} {:>7} {:>7}\n", "dataset", "horizon", "mse", "mae");
        for r in &self.rows {
            out += &format!(
                "{:<10} {:>7} {:>7} {:>7}\n",
                self.dataset,
                r.horizon,
                format_metric(r.mse),
                format_metric(r.mae)
            );
        }
        out += &format!(
            "{:<10} {:>7} {:>7} {:>7}\n",
            self.dataset,
            "Avg",
            format_metric(self.avg_mse),
            format_metric(self.avg_mae)
        );
        out
    }
}

/// Three decimals, rounding half up on the shortest decimal representation
/// of `v`. Binary rounding would print a mean such as 0.2385 (stored as
/// 0.23849999...) as 0.238.
pub fn format_metric(v: f64) -> String {
    format_decimal(v, 3)
}

pub fn format_decimal(v: f64, places: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let repr = v.abs().to_string();
    let (int_part, frac_part) = repr.split_once('.').unwrap_or((&repr, ""));
    let mut digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes().chain(std::iter::repeat(b'0')).take(places)).map(|b| b - b'0').collect();
    let round_up = frac_part.as_bytes().get(places).is_some_and(|&d| d >= b'5');
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let split = digits.len() - places;
    let int_digits: String = digits[..split].iter().map(|d| char::from(b'0' + d)).collect();
    let frac_digits: String = digits[split..].iter().map(|d| char::from(b'0' + d)).collect();
    let negative = v < 0.0 && digits.iter().any(|&d| d != 0);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_digits}")
    } else {
        format!("{sign}{int_digits}.{frac_digits}")
    }
}
