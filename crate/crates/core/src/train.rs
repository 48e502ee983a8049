//! The training loop.
//!
//! A step runs forward, the smooth-L1 loss, backward, the band monitor, the
//! coefficient map, modulation and finally one optimizer update, in that
//! order. Gradients are computed once per step and modulated strictly between
//! backward and the update.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::autodiff::{smooth_l1_loss, AutodiffError, ParamStore};
use crate::balance::{
    apply_modulation, decompose_target, modulate_loss_alternative, modulation_coefficients, BalanceConfig,
    BalanceError, BalanceReport, Modulation, Monitor,
};
use crate::data::{Dataset, DataError, Split, WindowSet};
use crate::eval::{evaluate, EvalError, EvalSpace, Scores};
use crate::model::{ForecastModel, ModelError};
use crate::tensor::SeriesTensor;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TrainError {
    #[error("non-finite loss {loss} at step {step} (epoch {epoch})")]
    NonFiniteLoss { loss: f64, step: u64, epoch: usize },
    #[error("invalid training configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Balance(#[from] BalanceError),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Autodiff(#[from] AutodiffError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OptimizerKind {
    Sgd,
    #[default]
    Adam,
}

/// Space the training loss compares forecast and target in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LossSpace {
    /// De-normalized forecast against the target as given.
    #[default]
    Raw,
    /// Instance-normalized forecast against the target normalized with the
    /// lookback statistics.
    Normalized,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub batch_size: usize,
    pub max_epochs: usize,
    /// Hard cap on optimizer steps across all epochs.
    pub max_steps: Option<u64>,
    /// Non-improving validation rounds tolerated before stopping.
    pub patience: usize,
    pub optimizer: OptimizerKind,
    pub beta1: f64,
    pub beta2: f64,
    pub adam_eps: f64,
    pub loss_space: LossSpace,
    /// Batch size used for validation and test passes.
    pub eval_batch_size: usize,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            learning_rate: 1e-3,
            batch_size: 32,
            max_epochs: 100,
            max_steps: None,
            patience: 10,
            optimizer: OptimizerKind::Adam,
            beta1: 0.9,
            beta2: 0.999,
            adam_eps: 1e-8,
            loss_space: LossSpace::Raw,
            eval_batch_size: 256,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<(), TrainError> {
        if !(self.learning_rate > 0.0) {
            return Err(TrainError::InvalidConfig("train.learning_rate must be positive".into()));
        }
        if self.batch_size == 0 {
            return Err(TrainError::InvalidConfig("train.batch_size must be at least 1".into()));
        }
        if self.max_epochs == 0 {
            return Err(TrainError::InvalidConfig("train.max_epochs must be at least 1".into()));
        }
        if !(0.0..1.0).contains(&self.beta1) || !(0.0..1.0).contains(&self.beta2) {
            return Err(TrainError::InvalidConfig("train.beta1 and train.beta2 must lie in [0, 1)".into()));
        }
        if !(self.adam_eps > 0.0) {
            return Err(TrainError::InvalidConfig("train.adam_eps must be positive".into()));
        }
        Ok(())
    }
}

/// First-order optimizer with per-parameter state.
#[derive(Debug, Clone)]
pub struct Optimizer {
    kind: OptimizerKind,
    lr: f64,
    beta1: f64,
    beta2: f64,
    eps: f64,
    t: u64,
    moments: Vec<Vec<(Vec<f64>, Vec<f64>)>>,
}

impl Optimizer {
    pub fn new(config: &TrainConfig) -> Self {
        Self {
            kind: config.optimizer,
            lr: config.learning_rate,
            beta1: config.beta1,
            beta2: config.beta2,
            eps: config.adam_eps,
            t: 0,
            moments: Vec::new(),
        }
    }

    pub fn steps(&self) -> u64 {
        self.t
    }

    /// Applies one update to every parameter from its current gradient.
    pub fn step<'a>(&mut self, stores: impl Iterator<Item = &'a mut ParamStore>) {
        self.t += 1;
        let (b1, b2) = (self.beta1, self.beta2);
        let c1 = 1.0 - b1.powi(self.t as i32);
        let c2 = 1.0 - b2.powi(self.t as i32);
        for (s, store) in stores.enumerate() {
            if self.moments.len() <= s {
                self.moments.push(store.iter().map(|p| (vec![0.0; p.len()], vec![0.0; p.len()])).collect());
            }
            for (param, (m, v)) in store.iter_mut().zip(self.moments[s].iter_mut()) {
                match self.kind {
                    OptimizerKind::Sgd => {
                        for (w, g) in param.values.iter_mut().zip(&param.grad) {
                            *w -= self.lr * g;
                        }
                    }
                    OptimizerKind::Adam => {
                        for (((w, g), m), v) in param.values.iter_mut().zip(&param.grad).zip(m.iter_mut()).zip(v.iter_mut()) {
                            *m = b1 * *m + (1.0 - b1) * g;
                            *v = b2 * *v + (1.0 - b2) * g * g;
                            let m_hat = *m / c1;
                            let v_hat = *v / c2;
                            *w -= self.lr * m_hat / (v_hat.sqrt() + self.eps);
                        }
                    }
                }
            }
        }
    }
}

/// Result of one training step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub loss: f64,
    pub report: BalanceReport,
}

/// Mutable loop state shared by consecutive steps.
#[derive(Debug, Clone)]
pub struct Trainer {
    pub config: TrainConfig,
    pub balance: BalanceConfig,
    pub optimizer: Optimizer,
    pub monitor: Monitor,
    pub step: u64,
    pub epoch: usize,
}

impl Trainer {
    pub fn new(config: TrainConfig, balance: BalanceConfig) -> Result<Self, TrainError> {
        config.validate()?;
        if !(balance.c_max >= 1.0) {
            return Err(TrainError::InvalidConfig("balance.c_max must be at least 1".into()));
        }
        if !(0.0..1.0).contains(&balance.ema_decay) {
            return Err(TrainError::InvalidConfig("balance.ema_decay must lie in [0, 1)".into()));
        }
        Ok(Self {
            optimizer: Optimizer::new(&config),
            monitor: Monitor::new(&balance),
            config,
            balance,
            step: 0,
            epoch: 0,
        })
    }

    /// Forward, loss and backward without touching the parameters. Leaves the
    /// unmodulated gradients in the model and returns the loss with the
    /// balance report of this batch.
    pub fn compute_gradients(
        &mut self,
        model: &mut ForecastModel,
        x: &SeriesTensor,
        y: &SeriesTensor,
    ) -> Result<(f64, crate::balance::Discrepancy, Vec<f64>), TrainError> {
        model.zero_grad();
        let pass = model.forward(x)?;
        let target_norm = model.normalize_with(y, &pass.stats)?;
        let (loss, mut seed) = match self.config.loss_space {
            LossSpace::Raw => smooth_l1_loss(&pass.prediction, y)?,
            LossSpace::Normalized => smooth_l1_loss(&pass.normalized_prediction, &target_norm)?,
        };
        if !loss.is_finite() {
            return Err(TrainError::NonFiniteLoss {
                loss,
                step: self.step,
                epoch: self.epoch,
            });
        }
        // the monitor only needs forward outputs
        let target_coeffs = decompose_target(&target_norm, model.spec())?;
        let discrepancy = self.monitor.observe(&pass.predicted_coeffs, &target_coeffs)?;
        let coefficients = match self.balance.modulation {
            Modulation::Off => vec![1.0; model.branch_count()],
            _ => modulation_coefficients(&discrepancy.ratios, self.balance.c_max)?,
        };
        if self.balance.modulation == Modulation::Loss {
            let factor = modulate_loss_alternative(1.0, &coefficients);
            seed.data_mut().iter_mut().for_each(|g| *g *= factor);
        }
        match self.config.loss_space {
            LossSpace::Raw => model.backward(&pass, &seed)?,
            LossSpace::Normalized => model.backward_normalized(&pass, &seed)?,
        }
        Ok((loss, discrepancy, coefficients))
    }

    /// One full step on a batch.
    pub fn train_step(
        &mut self,
        model: &mut ForecastModel,
        x: &SeriesTensor,
        y: &SeriesTensor,
    ) -> Result<StepOutcome, TrainError> {
        let (loss, discrepancy, coefficients) = self.compute_gradients(model, x, y)?;
        if self.balance.modulation == Modulation::Gradient {
            apply_modulation(model, &coefficients)?;
        }
        self.optimizer.step(model.param_stores_mut());
        let report = BalanceReport::new(self.step, self.epoch, discrepancy, coefficients);
        self.step += 1;
        Ok(StepOutcome { loss, report })
    }

    fn out_of_steps(&self) -> bool {
        self.config.max_steps.is_some_and(|m| self.step >= m)
    }
}

/// Per-epoch summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpochRecord {
    pub epoch: usize,
    pub steps: u64,
    pub train_loss: f64,
    pub val_mse: f64,
    pub val_mae: f64,
    pub improved: bool,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitHistory {
    /// Validation scores of the initial parameters.
    pub initial_val: Scores,
    pub epochs: Vec<EpochRecord>,
    pub best_epoch: usize,
    pub best_val_mse: f64,
    pub steps: u64,
    pub stopped_early: bool,
}

/// Trains on the dataset's train split with validation-based early stopping
/// and restores the best validation parameters. `on_step` sees every step.
pub fn fit(
    model: &mut ForecastModel,
    dataset: &Dataset,
    config: &TrainConfig,
    balance: &BalanceConfig,
    seed: u64,
    on_step: impl FnMut(&StepOutcome),
) -> Result<FitHistory, TrainError> {
    let (t, k) = (model.lookback(), model.horizon());
    let train = dataset.windows(Split::Train, t, k)?;
    let val = dataset.windows(Split::Val, t, k)?;
    fit_windows(model, &train, &val, config, balance, seed, on_step)
}

pub fn fit_windows(
    model: &mut ForecastModel,
    train: &WindowSet<'_>,
    val: &WindowSet<'_>,
    config: &TrainConfig,
    balance: &BalanceConfig,
    seed: u64,
    mut on_step: impl FnMut(&StepOutcome),
) -> Result<FitHistory, TrainError> {
    let mut trainer = Trainer::new(config.clone(), balance.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let validate = |m: &ForecastModel| evaluate(m, val, config.eval_batch_size, EvalSpace::Standardized, &[]);
    let initial_val = validate(model)?;
    let mut best = (initial_val.mse, 0usize, model.clone());
    let mut epochs = Vec::new();
    let mut since = 0usize;
    let mut stopped_early = false;
    let mut order: Vec<usize> = (0..train.len()).collect();

    for epoch in 1..=config.max_epochs {
        let started = Instant::now();
        trainer.epoch = epoch;
        order.shuffle(&mut rng);
        let mut loss_sum = 0.0;
        let mut batches = 0u64;
        for chunk in order.chunks(config.batch_size) {
            let (x, y) = train.batch(chunk);
            let outcome = trainer.train_step(model, &x, &y)?;
            loss_sum += outcome.loss;
            batches += 1;
            on_step(&outcome);
            if trainer.out_of_steps() {
                break;
            }
        }
        let scores = validate(model)?;
        let improved = scores.mse < best.0;
        if improved {
            best = (scores.mse, epoch, model.clone());
            since = 0;
        } else {
            since += 1;
        }
        let record = EpochRecord {
            epoch,
            steps: trainer.step,
            train_loss: loss_sum / batches.max(1) as f64,
            val_mse: scores.mse,
            val_mae: scores.mae,
            improved,
            seconds: started.elapsed().as_secs_f64(),
        };
        log::info!(
            "epoch {epoch}: train loss {:.5}, val mse {:.5}, val mae {:.5}{}",
            record.train_loss,
            record.val_mse,
            record.val_mae,
            if improved { " *" } else { "" }
        );
        epochs.push(record);
        if !improved && since >= config.patience {
            stopped_early = true;
            break;
        }
        if trainer.out_of_steps() {
            break;
        }
    }
    let (best_val_mse, best_epoch, best_model) = best;
    *model = best_model;
    Ok(FitHistory {
        initial_val,
        epochs,
        best_epoch,
        best_val_mse,
        steps: trainer.step,
        stopped_early,
    })
}
