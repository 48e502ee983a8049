//! Reversible instance normalization.
//!
//! Every `(batch item, variate)` lookback window is shifted to zero mean and
//! divided by `sqrt(var + eps)` using the population variance. The same
//! statistics map the forecast back to the original scale.

use crate::tensor::SeriesTensor;

/// Default stabilizer added to the variance.
pub const REVIN_EPS: f64 = 1e-5;

/// Windows whose variance falls below this are flagged as degenerate.
pub const DEGENERATE_VARIANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NormError {
    #[error("instance normalization needs at least 2 time steps, got {0}")]
    WindowTooShort(usize),
    #[error("statistics cover [{stats_batch}, {stats_variates}] but the tensor is [{batch}, {variates}]")]
    StatsMismatch {
        stats_batch: usize,
        stats_variates: usize,
        batch: usize,
        variates: usize,
    },
}

/// Per-window statistics retained for de-normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceStats {
    batch: usize,
    variates: usize,
    mean: Vec<f64>,
    std: Vec<f64>,
    eps: f64,
    degenerate: Vec<bool>,
}

impl InstanceStats {
    pub fn batch(&self) -> usize {
        self.batch
    }

    pub fn variates(&self) -> usize {
        self.variates
    }

    /// Mean per row, row index `b * variates + n`.
    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    /// Population standard deviation per row.
    pub fn std(&self) -> &[f64] {
        &self.std
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Divisor `sqrt(std² + eps)` of row `row`.
    pub fn scale(&self, row: usize) -> f64 {
        (self.std[row] * self.std[row] + self.eps).sqrt()
    }

    /// Rows whose variance is below [`DEGENERATE_VARIANCE`].
    pub fn degenerate(&self) -> &[bool] {
        &self.degenerate
    }

    pub fn any_degenerate(&self) -> bool {
        self.degenerate.iter().any(|&d| d)
    }

    fn check(&self, y: &SeriesTensor) -> Result<(), NormError> {
        if y.batch() != self.batch || y.variates() != self.variates {
            return Err(NormError::StatsMismatch {
                stats_batch: self.batch,
                stats_variates: self.variates,
                batch: y.batch(),
                variates: y.variates(),
            });
        }
        Ok(())
    }
}

pub fn revin_normalize(x: &SeriesTensor) -> Result<(SeriesTensor, InstanceStats), NormError> {
    revin_normalize_with_eps(x, REVIN_EPS)
}

pub fn revin_normalize_with_eps(
    x: &SeriesTensor,
    eps: f64,
) -> Result<(SeriesTensor, InstanceStats), NormError> {
    let t = x.time();
    if t < 2 {
        return Err(NormError::WindowTooShort(t));
    }
    let rows = x.rows();
    let mut out = x.clone();
    let mut mean = Vec::with_capacity(rows);
    let mut std = Vec::with_capacity(rows);
    let mut degenerate = Vec::with_capacity(rows);
    for series in out.data_mut().chunks_exact_mut(t) {
        let m = series.iter().sum::<f64>() / t as f64;
        let var = series.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / t as f64;
        let scale = (var + eps).sqrt();
        for v in series.iter_mut() {
            *v = (*v - m) / scale;
        }
        if var < DEGENERATE_VARIANCE {
            log::debug!("degenerate lookback window (variance {var:e})");
        }
        mean.push(m);
        std.push(var.sqrt());
        degenerate.push(var < DEGENERATE_VARIANCE);
    }
    let stats = InstanceStats {
        batch: x.batch(),
        variates: x.variates(),
        mean,
        std,
        eps,
        degenerate,
    };
    Ok((out, stats))
}

/// `y * sqrt(var + eps) + mean`, broadcast over the horizon.
pub fn revin_denormalize(y: &SeriesTensor, stats: &InstanceStats) -> Result<SeriesTensor, NormError> {
    stats.check(y)?;
    let mut out = y.clone();
    let k = y.time();
    for (row, series) in out.data_mut().chunks_exact_mut(k).enumerate() {
        let (scale, m) = (stats.scale(row), stats.mean[row]);
        for v in series.iter_mut() {
            *v = *v * scale + m;
        }
    }
    Ok(out)
}

/// Gradient of a loss with respect to the normalized-space forecast, given
/// its gradient with respect to the de-normalized forecast.
pub fn revin_denormalize_backward(
    grad: &SeriesTensor,
    stats: &InstanceStats,
) -> Result<SeriesTensor, NormError> {
    stats.check(grad)?;
    let mut out = grad.clone();
    let k = grad.time();
    for (row, series) in out.data_mut().chunks_exact_mut(k).enumerate() {
        let scale = stats.scale(row);
        series.iter_mut().for_each(|g| *g *= scale);
    }
    Ok(out)
}

/// Applies existing statistics to a new tensor (for example the future
/// horizon of the same windows).
pub fn revin_apply(x: &SeriesTensor, stats: &InstanceStats) -> Result<SeriesTensor, NormError> {
    stats.check(x)?;
    let mut out = x.clone();
    let k = x.time();
    for (row, series) in out.data_mut().chunks_exact_mut(k).enumerate() {
        let (scale, m) = (stats.scale(row), stats.mean[row]);
        for v in series.iter_mut() {
            *v = (*v - m) / scale;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_window() {
        let x = SeriesTensor::from_vec(1, 1, 2, vec![0.0, 2.0]).unwrap();
        let (y, stats) = revin_normalize(&x).unwrap();
        let s = (1.0f64 + REVIN_EPS).sqrt();
        assert_eq!(y.data(), &[-1.0 / s, 1.0 / s]);
        assert_eq!(stats.mean(), &[1.0]);
        assert_eq!(stats.std(), &[1.0]);
    }

    #[test]
    fn constant_window_maps_to_zero() {
        let x = SeriesTensor::from_vec(1, 1, 4, vec![5.0; 4]).unwrap();
        let (y, stats) = revin_normalize(&x).unwrap();
        assert!(y.data().iter().all(|&v| v == 0.0));
        assert_eq!(stats.mean(), &[5.0]);
        assert!(stats.any_degenerate());
        let zeros = SeriesTensor::zeros(1, 1, 3);
        let back = revin_denormalize(&zeros, &stats).unwrap();
        assert!(back.data().iter().all(|&v| v == 5.0));
    }

    #[test]
    fn short_window_is_rejected() {
        let x = SeriesTensor::zeros(2, 3, 1);
        assert_eq!(revin_normalize(&x).unwrap_err(), NormError::WindowTooShort(1));
    }

    #[test]
    fn mismatched_stats_are_rejected() {
        let (_, stats) = revin_normalize(&SeriesTensor::from_fn(2, 3, 4, |b, n, t| (b + n * t) as f64)).unwrap();
        assert!(matches!(
            revin_denormalize(&SeriesTensor::zeros(2, 2, 4), &stats),
            Err(NormError::StatsMismatch { .. })
        ));
    }
}
