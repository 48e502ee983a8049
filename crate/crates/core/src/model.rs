//! The forecaster: instance normalization, wavelet decomposition, one
//! patch-mixer network per band, reconstruction and de-normalization.
//!
//! Branches are indexed in storage order `0..=f`: index `i < f` forecasts
//! detail `D_{i+1}` and index `f` forecasts the approximation. Parameter
//! names carry the one-based branch number, so `branch1/...` belongs to the
//! highest-frequency detail and `branch{f+1}/...` to the approximation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::autodiff::{Activation, AutodiffError, Matrix, ParamId, ParamStore, Tape, Var};
use crate::norm::{self, InstanceStats, NormError};
use crate::tensor::SeriesTensor;
use crate::wavelet::{
    dwt_multilevel, dwt_multilevel_backward, idwt_multilevel, idwt_multilevel_backward, level_lengths,
    CoefficientSet, WaveletError, WaveletSpec,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Wavelet(#[from] WaveletError),
    #[error(transparent)]
    Autodiff(#[from] AutodiffError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error("input is [{got_batch}, {got_variates}, {got_time}], model expects [_, {variates}, {time}]")]
    InputShape {
        got_batch: usize,
        got_variates: usize,
        got_time: usize,
        variates: usize,
        time: usize,
    },
    #[error("input contains non-finite values")]
    NonFiniteInput,
    #[error("invalid model configuration: {0}")]
    InvalidConfig(String),
}

/// Branch hyperparameters shared by every band.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelConfig {
    pub patch_len: usize,
    pub patch_stride: usize,
    pub width: usize,
    pub depth: usize,
    pub activation: Activation,
    /// Learnable per-variate affine inside instance normalization.
    pub revin_affine: bool,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            patch_len: 16,
            patch_stride: 8,
            width: 32,
            depth: 2,
            activation: Activation::Gelu,
            revin_affine: false,
        }
    }
}

impl ModelConfig {
    pub fn validate(&self) -> Result<(), ModelError> {
        for (name, value) in [
            ("patch_len", self.patch_len),
            ("patch_stride", self.patch_stride),
            ("width", self.width),
        ] {
            if value == 0 {
                return Err(ModelError::InvalidConfig(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

/// Patch geometry for a band of `len` coefficients. The patch is clamped to
/// the band length and the stride to the patch; the last patch may run past
/// the end and repeats the final coefficient there.
pub fn patch_geometry(len: usize, patch_len: usize, stride: usize) -> (usize, usize, usize) {
    let p = patch_len.min(len).max(1);
    let s = stride.min(p).max(1);
    let n = (len - p).div_ceil(s) + 1;
    (p, s, n)
}

#[derive(Debug, Clone, PartialEq)]
struct MixerIds {
    token_w: ParamId,
    token_b: ParamId,
    channel1_w: ParamId,
    channel1_b: ParamId,
    channel2_w: ParamId,
    channel2_b: ParamId,
}

/// One band's forecaster with exclusively owned parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchNetwork {
    number: usize,
    in_len: usize,
    out_len: usize,
    patch: usize,
    stride: usize,
    patches: usize,
    width: usize,
    activation: Activation,
    params: ParamStore,
    embed: (ParamId, ParamId),
    mixers: Vec<MixerIds>,
    head: (ParamId, ParamId),
}

impl BranchNetwork {
    /// Builds branch `number` (one-based) mapping `in_len` coefficients to
    /// `out_len` coefficients.
    pub fn new(
        number: usize,
        in_len: usize,
        out_len: usize,
        config: &ModelConfig,
        rng: &mut ChaCha8Rng,
    ) -> Result<Self, ModelError> {
        config.validate()?;
        let (patch, stride, patches) = patch_geometry(in_len, config.patch_len, config.patch_stride);
        let width = config.width;
        let prefix = format!("branch{number}");
        let mut params = ParamStore::new();
        let mut dense = |params: &mut ParamStore, name: &str, fan_in: usize, fan_out: usize| {
            let w = params.add_weight(format!("{prefix}/{name}/weight"), fan_in, fan_out, rng)?;
            let b = params.add_zeros(format!("{prefix}/{name}/bias"), vec![fan_out])?;
            Ok::<_, AutodiffError>((w, b))
        };
        let embed = dense(&mut params, "embed", patch, width)?;
        let mut mixers = Vec::with_capacity(config.depth);
        for d in 1..=config.depth {
            let token = dense(&mut params, &format!("mixer{d}/token"), patches, patches)?;
            let channel1 = dense(&mut params, &format!("mixer{d}/channel1"), width, width)?;
            let channel2 = dense(&mut params, &format!("mixer{d}/channel2"), width, width)?;
            mixers.push(MixerIds {
                token_w: token.0,
                token_b: token.1,
                channel1_w: channel1.0,
                channel1_b: channel1.1,
                channel2_w: channel2.0,
                channel2_b: channel2.1,
            });
        }
        let head = dense(&mut params, "head", patches * width, out_len)?;
        Ok(Self {
            number,
            in_len,
            out_len,
            patch,
            stride,
            patches,
            width,
            activation: config.activation,
            params,
            embed,
            mixers,
            head,
        })
    }

    /// One-based branch number used in parameter names.
    pub fn number(&self) -> usize {
        self.number
    }

    pub fn in_len(&self) -> usize {
        self.in_len
    }

    pub fn out_len(&self) -> usize {
        self.out_len
    }

    /// `(patch length, stride, patch count)` after clamping.
    pub fn geometry(&self) -> (usize, usize, usize) {
        (self.patch, self.stride, self.patches)
    }

    pub fn params(&self) -> &ParamStore {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut ParamStore {
        &mut self.params
    }

    /// Records the branch on a fresh tape. `input` is `[rows, in_len]`; the
    /// returned output is `[rows, out_len]`. With `track_input` the input
    /// gradient is available after backward.
    pub fn forward(&self, input: Matrix, track_input: bool) -> Result<(Tape, Var, Var), ModelError> {
        if input.cols() != self.in_len {
            return Err(AutodiffError::ShapeMismatch {
                op: "branch input",
                detail: format!("branch{} expects {} coefficients, got {}", self.number, self.in_len, input.cols()),
            }
            .into());
        }
        let rows = input.rows();
        let p = &self.params;
        let mut tape = Tape::new();
        let x = if track_input {
            tape.tracked_input(input)
        } else {
            tape.input(input)
        };
        let patches = tape.patchify(x, self.patch, self.stride, self.patches)?;
        let mut h = tape.dense(patches, p, self.embed.0, self.embed.1)?;
        for m in &self.mixers {
            // token mixing across patches, per embedding channel
            let t = tape.transpose_groups(h, rows)?;
            let t = tape.dense(t, p, m.token_w, m.token_b)?;
            let t = tape.activation(t, self.activation);
            let t = tape.transpose_groups(t, rows)?;
            h = tape.add(h, t)?;
            // channel mixing within each patch
            let c = tape.dense(h, p, m.channel1_w, m.channel1_b)?;
            let c = tape.activation(c, self.activation);
            let c = tape.dense(c, p, m.channel2_w, m.channel2_b)?;
            h = tape.add(h, c)?;
        }
        let flat = tape.reshape(h, rows, self.patches * self.width)?;
        let out = tape.dense(flat, p, self.head.0, self.head.1)?;
        Ok((tape, x, out))
    }

    /// Sets the output head to zero, making the branch output identically 0.
    pub fn zero_head(&mut self) {
        for id in [self.head.0, self.head.1] {
            self.params.get_mut(id).values.iter_mut().for_each(|v| *v = 0.0);
        }
    }
}

/// Per-variate learnable scale and shift applied after normalization.
#[derive(Debug, Clone, PartialEq)]
struct RevinAffine {
    params: ParamStore,
    weight: ParamId,
    bias: ParamId,
}

/// Guards the inverse affine against a vanishing scale.
const AFFINE_GUARD: f64 = 1e-10;

/// Everything kept from a forward pass that backward and the monitor need.
#[derive(Debug, Clone)]
pub struct ForwardPass {
    /// De-normalized forecast `[B, N, K]`.
    pub prediction: SeriesTensor,
    /// Branch outputs in normalized space.
    pub predicted_coeffs: CoefficientSet,
    pub stats: InstanceStats,
    /// Normalized-space forecast before de-normalization.
    pub normalized_prediction: SeriesTensor,
    /// Instance-normalized input before the optional affine.
    normalized_input: SeriesTensor,
    tapes: Vec<(Tape, Var, Var)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForecastModel {
    spec: WaveletSpec,
    lookback: usize,
    horizon: usize,
    variates: usize,
    config: ModelConfig,
    branches: Vec<BranchNetwork>,
    affine: Option<RevinAffine>,
}

impl ForecastModel {
    /// Builds a model with parameters drawn from a generator seeded by `seed`.
    pub fn new(
        spec: WaveletSpec,
        lookback: usize,
        horizon: usize,
        variates: usize,
        config: ModelConfig,
        seed: u64,
    ) -> Result<Self, ModelError> {
        spec.wavelet.validate()?;
        spec.check_length(lookback)?;
        spec.check_length(horizon)?;
        if variates == 0 {
            return Err(ModelError::InvalidConfig("variates must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = spec.level;
        let lin = level_lengths(lookback, f);
        let lout = level_lengths(horizon, f);
        let mut branches = Vec::with_capacity(f + 1);
        for v in 0..=f {
            let k = if v < f { v + 1 } else { f };
            branches.push(BranchNetwork::new(v + 1, lin[k], lout[k], &config, &mut rng)?);
        }
        let affine = if config.revin_affine {
            let mut params = ParamStore::new();
            let weight = params.add(crate::autodiff::Parameter::new(
                "revin/weight",
                vec![variates],
                vec![1.0; variates],
            )?)?;
            let bias = params.add_zeros("revin/bias", vec![variates])?;
            Some(RevinAffine { params, weight, bias })
        } else {
            None
        };
        Ok(Self {
            spec,
            lookback,
            horizon,
            variates,
            config,
            branches,
            affine,
        })
    }

    pub fn spec(&self) -> &WaveletSpec {
        &self.spec
    }

    pub fn lookback(&self) -> usize {
        self.lookback
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn variates(&self) -> usize {
        self.variates
    }

    pub fn config(&self) -> &ModelConfig {
        &self.config
    }

    pub fn branches(&self) -> &[BranchNetwork] {
        &self.branches
    }

    pub fn branches_mut(&mut self) -> &mut [BranchNetwork] {
        &mut self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Parameters not owned by any branch (the optional normalization affine).
    pub fn shared_params(&self) -> Option<&ParamStore> {
        self.affine.as_ref().map(|a| &a.params)
    }

    pub fn shared_params_mut(&mut self) -> Option<&mut ParamStore> {
        self.affine.as_mut().map(|a| &mut a.params)
    }

    /// Every parameter store: branches in order, then shared parameters.
    pub fn param_stores(&self) -> impl Iterator<Item = &ParamStore> {
        self.branches.iter().map(BranchNetwork::params).chain(self.shared_params())
    }

    pub fn param_stores_mut(&mut self) -> impl Iterator<Item = &mut ParamStore> {
        self.branches
            .iter_mut()
            .map(BranchNetwork::params_mut)
            .chain(self.affine.as_mut().map(|a| &mut a.params))
    }

    pub fn zero_grad(&mut self) {
        self.param_stores_mut().for_each(ParamStore::zero_grad);
    }

    pub fn scalar_count(&self) -> usize {
        self.param_stores().map(ParamStore::scalar_count).sum()
    }

    pub fn zero_head(&mut self) {
        self.branches.iter_mut().for_each(BranchNetwork::zero_head);
    }

    fn check_input(&self, x: &SeriesTensor) -> Result<(), ModelError> {
        if x.variates() != self.variates || x.time() != self.lookback {
            return Err(ModelError::InputShape {
                got_batch: x.batch(),
                got_variates: x.variates(),
                got_time: x.time(),
                variates: self.variates,
                time: self.lookback,
            });
        }
        if !x.all_finite() {
            return Err(ModelError::NonFiniteInput);
        }
        Ok(())
    }

    fn affine_values(&self) -> Option<(&[f64], &[f64])> {
        self.affine.as_ref().map(|a| {
            (
                a.params.get(a.weight).values.as_slice(),
                a.params.get(a.bias).values.as_slice(),
            )
        })
    }

    /// Maps a raw-scale tensor with the statistics of its lookback window into
    /// the space the branches forecast in.
    pub fn normalize_with(&self, y: &SeriesTensor, stats: &InstanceStats) -> Result<SeriesTensor, ModelError> {
        let mut out = norm::revin_apply(y, stats)?;
        if let Some((w, b)) = self.affine_values() {
            let n = self.variates;
            for (row, series) in out.data_mut().chunks_exact_mut(y.time()).enumerate() {
                let var = row % n;
                series.iter_mut().for_each(|v| *v = *v * w[var] + b[var]);
            }
        }
        Ok(out)
    }

    /// Runs the full pipeline and keeps the tapes for [`ForecastModel::backward`].
    pub fn forward(&self, x: &SeriesTensor) -> Result<ForwardPass, ModelError> {
        self.check_input(x)?;
        let (plain, stats) = norm::revin_normalize(x)?;
        let mut normalized = plain.clone();
        if let Some((w, b)) = self.affine_values() {
            let n = self.variates;
            for (row, series) in normalized.data_mut().chunks_exact_mut(self.lookback).enumerate() {
                let var = row % n;
                series.iter_mut().for_each(|v| *v = *v * w[var] + b[var]);
            }
        }
        let coeffs = dwt_multilevel(&normalized, &self.spec)?;
        let rows = x.rows();
        let mut predicted = CoefficientSet::zeros(x.batch(), self.variates, self.horizon, self.spec.level);
        let mut tapes = Vec::with_capacity(self.branches.len());
        let track = self.affine.is_some();
        for (v, branch) in self.branches.iter().enumerate() {
            let input = Matrix::from_vec(rows, branch.in_len, coeffs.band(v).to_vec())?;
            let (tape, input_var, out) = branch.forward(input, track)?;
            predicted.band_mut(v).copy_from_slice(tape.value(out).data());
            tapes.push((tape, input_var, out));
        }
        let normalized_prediction = idwt_multilevel(&predicted, &self.spec)?;
        let mut z = normalized_prediction.clone();
        if let Some((w, b)) = self.affine_values() {
            let n = self.variates;
            for (row, series) in z.data_mut().chunks_exact_mut(self.horizon).enumerate() {
                let var = row % n;
                let inv = 1.0 / (w[var] + AFFINE_GUARD);
                series.iter_mut().for_each(|v| *v = (*v - b[var]) * inv);
            }
        }
        let prediction = norm::revin_denormalize(&z, &stats)?;
        Ok(ForwardPass {
            prediction,
            predicted_coeffs: predicted,
            stats,
            normalized_prediction,
            normalized_input: plain,
            tapes,
        })
    }

    /// Forecast without retaining anything for training.
    pub fn predict(&self, x: &SeriesTensor) -> Result<SeriesTensor, ModelError> {
        Ok(self.forward(x)?.prediction)
    }

    /// Accumulates parameter gradients given `grad`, the loss gradient with
    /// respect to `pass.prediction`.
    pub fn backward(&mut self, pass: &ForwardPass, grad: &SeriesTensor) -> Result<(), ModelError> {
        let mut g = norm::revin_denormalize_backward(grad, &pass.stats)?;
        let n = self.variates;
        let k = self.horizon;
        if let Some(affine) = self.affine.as_mut() {
            let w = affine.params.get(affine.weight).values.clone();
            let b = affine.params.get(affine.bias).values.clone();
            let mut gw = vec![0.0; n];
            let mut gb = vec![0.0; n];
            let zs = pass.normalized_prediction.data().chunks_exact(k);
            for (row, (series, zrow)) in g.data_mut().chunks_exact_mut(k).zip(zs).enumerate() {
                let var = row % n;
                let inv = 1.0 / (w[var] + AFFINE_GUARD);
                for (gv, z) in series.iter_mut().zip(zrow) {
                    // out = (z - b) / (w + guard)
                    gw[var] -= *gv * (z - b[var]) * inv * inv;
                    gb[var] -= *gv * inv;
                    *gv *= inv;
                }
            }
            let pw = &mut affine.params.get_mut(affine.weight).grad;
            pw.iter_mut().zip(&gw).for_each(|(a, v)| *a += v);
            let pb = &mut affine.params.get_mut(affine.bias).grad;
            pb.iter_mut().zip(&gb).for_each(|(a, v)| *a += v);
        }
        self.backward_normalized(pass, &g)
    }

    /// Accumulates parameter gradients given the loss gradient with respect
    /// to `pass.normalized_prediction`, bypassing de-normalization.
    pub fn backward_normalized(&mut self, pass: &ForwardPass, g: &SeriesTensor) -> Result<(), ModelError> {
        let n = self.variates;
        let coeff_grad = idwt_multilevel_backward(g, &self.spec)?;
        let rows = g.rows();
        let mut input_grads = self
            .affine
            .is_some()
            .then(|| CoefficientSet::zeros(g.batch(), n, self.lookback, self.spec.level));
        for (v, (branch, (tape, input_var, out))) in self.branches.iter_mut().zip(&pass.tapes).enumerate() {
            let seed = Matrix::from_vec(rows, branch.out_len, coeff_grad.band(v).to_vec())?;
            let grads = tape.backward(*out, &seed, &mut branch.params)?;
            if let Some(ig) = input_grads.as_mut() {
                if let Some(gx) = grads.get(*input_var) {
                    ig.band_mut(v).copy_from_slice(gx.data());
                }
            }
        }
        if let (Some(ig), Some(affine)) = (input_grads, self.affine.as_mut()) {
            let gx = dwt_multilevel_backward(&ig, &self.spec)?;
            let t = self.lookback;
            let mut gw = vec![0.0; n];
            let mut gb = vec![0.0; n];
            let xs = pass.normalized_input.data().chunks_exact(t);
            for (row, (series, xrow)) in gx.data().chunks_exact(t).zip(xs).enumerate() {
                let var = row % n;
                for (gv, xhat) in series.iter().zip(xrow) {
                    gw[var] += gv * xhat;
                    gb[var] += gv;
                }
            }
            let pw = &mut affine.params.get_mut(affine.weight).grad;
            pw.iter_mut().zip(&gw).for_each(|(a, v)| *a += v);
            let pb = &mut affine.params.get_mut(affine.bias).grad;
            pb.iter_mut().zip(&gb).for_each(|(a, v)| *a += v);
        }
        Ok(())
    }
}
