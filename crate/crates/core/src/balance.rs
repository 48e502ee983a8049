//! Frequency-specific monitor and dynamical gradient balancer.
//!
//! Each training batch the predicted coefficients of every band are compared
//! with the decomposed ground truth. A band's discrepancy divided by the mean
//! detail discrepancy is its ratio `r`; the ratio maps to a gradient
//! coefficient `c` that rescales that band's branch gradients before the
//! optimizer step.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::ForecastModel;
use crate::tensor::SeriesTensor;
use crate::wavelet::{dwt_multilevel, CoefficientSet, WaveletError, WaveletSpec};

/// Below this the mean detail discrepancy is treated as zero.
pub const DEGENERATE_MU: f64 = 1e-12;

/// Floor applied to `1 - R²`.
pub const RSQUARED_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BalanceError {
    #[error("modulation coefficient needs a positive ratio, got {0}")]
    NonPositiveRatio(f64),
    #[error("{coefficients} coefficients for {branches} branches")]
    BranchCountMismatch { coefficients: usize, branches: usize },
    #[error("predicted and target coefficients have different layouts")]
    LayoutMismatch,
    #[error(transparent)]
    Wavelet(#[from] WaveletError),
}

/// How a band's discrepancy is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    #[default]
    Mse,
    Mae,
    Rmse,
    /// `1 - R²`, floored at [`RSQUARED_FLOOR`] so that larger means worse.
    Rsquared,
}

impl Metric {
    pub fn discrepancy(self, target: &[f64], predicted: &[f64]) -> f64 {
        debug_assert_eq!(target.len(), predicted.len());
        let n = target.len() as f64;
        match self {
            Metric::Mse => sq_error(target, predicted) / n,
            Metric::Rmse => (sq_error(target, predicted) / n).sqrt(),
            Metric::Mae => target.iter().zip(predicted).map(|(t, p)| (t - p).abs()).sum::<f64>() / n,
            Metric::Rsquared => {
                let mean = target.iter().sum::<f64>() / n;
                let ss_tot: f64 = target.iter().map(|t| (t - mean) * (t - mean)).sum();
                let ss_res = sq_error(target, predicted);
                let one_minus_r2 = if ss_tot == 0.0 {
                    // constant target: R² is 1 for an exact fit and 0 otherwise
                    if ss_res == 0.0 {
                        0.0
                    } else {
                        1.0
                    }
                } else {
                    ss_res / ss_tot
                };
                one_minus_r2.max(RSQUARED_FLOOR)
            }
        }
    }
}

fn sq_error(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Mse => "mse",
            Metric::Mae => "mae",
            Metric::Rmse => "rmse",
            Metric::Rsquared => "rsquared",
        })
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mse" => Ok(Metric::Mse),
            "mae" => Ok(Metric::Mae),
            "rmse" => Ok(Metric::Rmse),
            "rsquared" | "r2" => Ok(Metric::Rsquared),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

/// Where the coefficients act during training.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modulation {
    /// No modulation; reported coefficients are all 1.
    Off,
    /// Branch `v` gradients are multiplied by `c^v`.
    #[default]
    Gradient,
    /// The loss seed is multiplied by the mean coefficient.
    Loss,
}

impl fmt::Display for Modulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Modulation::Off => "off",
            Modulation::Gradient => "gradient",
            Modulation::Loss => "loss",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BalanceConfig {
    pub modulation: Modulation,
    pub metric: Metric,
    /// Upper clamp on the `1/r` branch of the coefficient map.
    pub c_max: f64,
    /// Smooth discrepancies with an exponential moving average.
    pub ema: bool,
    pub ema_decay: f64,
}

impl Default for BalanceConfig {
    fn default() -> Self {
        Self {
            modulation: Modulation::Gradient,
            metric: Metric::Mse,
            c_max: 10.0,
            ema: false,
            ema_decay: 0.9,
        }
    }
}

/// Band discrepancies and their ratios to the mean detail discrepancy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub delta_a: f64,
    /// `delta_d[i - 1]` is the discrepancy of detail `D_i`.
    pub delta_d: Vec<f64>,
    pub mu: f64,
    /// Branch order: `D_1, ..., D_f, A`.
    pub ratios: Vec<f64>,
    pub degenerate_mu: bool,
}

impl Discrepancy {
    /// Ratios from already measured discrepancies.
    pub fn from_deltas(delta_d: Vec<f64>, delta_a: f64) -> Self {
        let f = delta_d.len();
        let mu = delta_d.iter().sum::<f64>() / f as f64;
        let degenerate_mu = !(mu >= DEGENERATE_MU);
        let ratios = if degenerate_mu {
            log::info!("mean detail discrepancy {mu:e} is degenerate; ratios set to 1");
            vec![1.0; f + 1]
        } else {
            delta_d.iter().chain([&delta_a]).map(|d| d / mu).collect()
        };
        Self {
            delta_a,
            delta_d,
            mu,
            ratios,
            degenerate_mu,
        }
    }

    pub fn band_count(&self) -> usize {
        self.ratios.len()
    }
}

/// One record of the per-batch balance log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub step: u64,
    pub epoch: usize,
    pub delta_a: f64,
    pub delta_d: Vec<f64>,
    pub mu: f64,
    pub ratios: Vec<f64>,
    pub coefficients: Vec<f64>,
    pub degenerate_mu: bool,
}

impl BalanceReport {
    pub fn new(step: u64, epoch: usize, d: Discrepancy, coefficients: Vec<f64>) -> Self {
        Self {
            step,
            epoch,
            delta_a: d.delta_a,
            delta_d: d.delta_d,
            mu: d.mu,
            ratios: d.ratios,
            coefficients,
            degenerate_mu: d.degenerate_mu,
        }
    }

    /// Mean of the detail ratios; 1 unless the batch was degenerate.
    pub fn mean_detail_ratio(&self) -> f64 {
        let f = self.delta_d.len();
        self.ratios[..f].iter().sum::<f64>() / f as f64
    }
}

/// Wavelet decomposition of the (normalized) ground-truth horizon.
pub fn decompose_target(y: &SeriesTensor, spec: &WaveletSpec) -> Result<CoefficientSet, BalanceError> {
    Ok(dwt_multilevel(y, spec)?)
}

pub fn discrepancy_ratios(
    predicted: &CoefficientSet,
    target: &CoefficientSet,
    metric: Metric,
) -> Result<Discrepancy, BalanceError> {
    let (delta_d, delta_a) = band_discrepancies(predicted, target, metric)?;
    Ok(Discrepancy::from_deltas(delta_d, delta_a))
}

fn band_discrepancies(
    predicted: &CoefficientSet,
    target: &CoefficientSet,
    metric: Metric,
) -> Result<(Vec<f64>, f64), BalanceError> {
    if predicted.rows() != target.rows() || predicted.lengths() != target.lengths() {
        return Err(BalanceError::LayoutMismatch);
    }
    let f = predicted.level();
    let delta_d = (1..=f)
        .map(|i| metric.discrepancy(target.detail(i), predicted.detail(i)))
        .collect();
    let delta_a = metric.discrepancy(target.approximation(), predicted.approximation());
    Ok((delta_d, delta_a))
}

/// Gradient coefficient for ratio `r`: a shifted sigmoid in `(1, 1.5)` for
/// `r > 1` and `min(1/r, c_max)` otherwise.
pub fn modulation_coefficient(r: f64, c_max: f64) -> Result<f64, BalanceError> {
    if !(r > 0.0) {
        return Err(BalanceError::NonPositiveRatio(r));
    }
    Ok(if r > 1.0 {
        1.0 / (1.0 + (-0.5 * (r - 1.0)).exp()) + 0.5
    } else {
        (1.0 / r).min(c_max)
    })
}

pub fn modulation_coefficients(ratios: &[f64], c_max: f64) -> Result<Vec<f64>, BalanceError> {
    ratios.iter().map(|&r| modulation_coefficient(r, c_max)).collect()
}

/// Multiplies every gradient of branch `v` by `coefficients[v]`. Parameters
/// outside the branches are left alone.
pub fn apply_modulation(model: &mut ForecastModel, coefficients: &[f64]) -> Result<(), BalanceError> {
    if coefficients.len() != model.branch_count() {
        return Err(BalanceError::BranchCountMismatch {
            coefficients: coefficients.len(),
            branches: model.branch_count(),
        });
    }
    for (branch, &c) in model.branches_mut().iter_mut().zip(coefficients) {
        branch.params_mut().scale_grads(c);
    }
    Ok(())
}

/// Loss-level alternative: the seed gradient times the mean coefficient.
pub fn modulate_loss_alternative(seed: f64, coefficients: &[f64]) -> f64 {
    seed * coefficients.iter().sum::<f64>() / coefficients.len() as f64
}

/// Tracks discrepancies across batches, optionally smoothed.
#[derive(Debug, Clone)]
pub struct Monitor {
    metric: Metric,
    decay: Option<f64>,
    state: Option<(Vec<f64>, f64)>,
}

impl Monitor {
    pub fn new(config: &BalanceConfig) -> Self {
        Self {
            metric: config.metric,
            decay: config.ema.then_some(config.ema_decay),
            state: None,
        }
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// Measures one batch and returns the (possibly smoothed) ratios.
    pub fn observe(
        &mut self,
        predicted: &CoefficientSet,
        target: &CoefficientSet,
    ) -> Result<Discrepancy, BalanceError> {
        let (mut delta_d, mut delta_a) = band_discrepancies(predicted, target, self.metric)?;
        if let Some(decay) = self.decay {
            if let Some((prev_d, prev_a)) = &self.state {
                for (d, p) in delta_d.iter_mut().zip(prev_d) {
                    *d = decay * p + (1.0 - decay) * *d;
                }
                delta_a = decay * prev_a + (1.0 - decay) * delta_a;
            }
            self.state = Some((delta_d.clone(), delta_a));
        }
        Ok(Discrepancy::from_deltas(delta_d, delta_a))
    }
}
