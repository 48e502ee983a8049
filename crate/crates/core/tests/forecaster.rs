use beat::autodiff::{Activation, ParamStore};
use beat::model::{patch_geometry, ForecastModel, ModelConfig};
use beat::wavelet::{level_lengths, Wavelet, WaveletSpec};
use beat::SeriesTensor;

fn input(batch: usize, variates: usize, time: usize, seed: f64) -> SeriesTensor {
    SeriesTensor::from_fn(batch, variates, time, |b, n, t| {
        let t = t as f64;
        (0.3 * t + seed + n as f64).sin() * (1.0 + b as f64) + 0.05 * t + ((7.0 * t + seed).cos() * 0.4)
    })
}

fn spec(name: &str, level: usize) -> WaveletSpec {
    WaveletSpec::new(name.parse::<Wavelet>().unwrap(), level).unwrap()
}

#[test]
fn output_shapes_follow_band_lengths() {
    for level in 1..=5 {
        for horizon in [96, 192, 336, 720] {
            let model = ForecastModel::new(spec("db2", level), 96, horizon, 2, ModelConfig::default(), 1).unwrap();
            assert_eq!(model.branch_count(), level + 1);
            let lin = level_lengths(96, level);
            let lout = level_lengths(horizon, level);
            for (v, branch) in model.branches().iter().enumerate() {
                let k = if v < level { v + 1 } else { level };
                assert_eq!(branch.in_len(), lin[k]);
                assert_eq!(branch.out_len(), lout[k]);
            }
            let pass = model.forward(&input(3, 2, 96, 0.1)).unwrap();
            assert_eq!(pass.prediction.shape(), [3, 2, horizon]);
            for v in 0..=level {
                let k = if v < level { v + 1 } else { level };
                assert_eq!(pass.predicted_coeffs.band_len(v), lout[k]);
            }
        }
    }
}

#[test]
fn single_series_shape() {
    let model = ForecastModel::new(spec("db4", 3), 96, 96, 1, ModelConfig::default(), 0).unwrap();
    assert_eq!(model.predict(&input(1, 1, 96, 0.0)).unwrap().shape(), [1, 1, 96]);
}

#[test]
fn zero_heads_forecast_the_window_mean() {
    let mut model = ForecastModel::new(spec("sym4", 2), 48, 24, 3, ModelConfig::default(), 5).unwrap();
    model.zero_head();
    let x = input(2, 3, 48, 0.7);
    let pass = model.forward(&x).unwrap();
    for (row, series) in pass.prediction.series().enumerate() {
        let mean = x.row(row).iter().sum::<f64>() / 48.0;
        for v in series {
            assert!((v - mean).abs() < 1e-12);
        }
    }
}

// ---- independent stage oracles ----

fn oracle_revin(series: &[f64]) -> (Vec<f64>, f64, f64) {
    let n = series.len() as f64;
    let mean = series.iter().sum::<f64>() / n;
    let var = series.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let scale = (var + 1e-5).sqrt();
    (series.iter().map(|v| (v - mean) / scale).collect(), mean, scale)
}

/// One periodized analysis step written as an explicit sum.
fn oracle_dwt_step(x: &[f64], lo: &[f64], hi: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut x = x.to_vec();
    if x.len() % 2 == 1 {
        x.push(*x.last().unwrap());
    }
    let n = x.len() as isize;
    let half = lo.len() as isize / 2;
    let mut a = vec![0.0; x.len() / 2];
    let mut d = vec![0.0; x.len() / 2];
    for k in 0..a.len() as isize {
        for j in 0..lo.len() as isize {
            let idx = (2 * k + half - j).rem_euclid(n) as usize;
            a[k as usize] += lo[j as usize] * x[idx];
            d[k as usize] += hi[j as usize] * x[idx];
        }
    }
    (a, d)
}

/// Synthesis as the transpose of analysis (valid for orthogonal filters),
/// truncated to the original length.
fn oracle_idwt_step(a: &[f64], d: &[f64], lo: &[f64], hi: &[f64], out_len: usize) -> Vec<f64> {
    let n = 2 * a.len();
    let half = lo.len() as isize / 2;
    let mut x = vec![0.0; n];
    for k in 0..a.len() as isize {
        for j in 0..lo.len() as isize {
            let idx = (2 * k + half - j).rem_euclid(n as isize) as usize;
            x[idx] += lo[j as usize] * a[k as usize] + hi[j as usize] * d[k as usize];
        }
    }
    x.truncate(out_len);
    x
}

fn gelu(x: f64) -> f64 {
    0.5 * x * (1.0 + (0.797_884_560_802_865_4 * (x + 0.044_715 * x * x * x)).tanh())
}

fn dense(store: &ParamStore, name: &str, rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let w = store.by_name(&format!("{name}/weight")).unwrap();
    let b = store.by_name(&format!("{name}/bias")).unwrap();
    let (fan_in, fan_out) = (w.shape()[0], w.shape()[1]);
    rows.iter()
        .map(|r| {
            assert_eq!(r.len(), fan_in);
            (0..fan_out)
                .map(|o| b.values[o] + (0..fan_in).map(|i| r[i] * w.values[i * fan_out + o]).sum::<f64>())
                .collect()
        })
        .collect()
}

fn oracle_branch(store: &ParamStore, number: usize, depth: usize, cfg: &ModelConfig, x: &[f64], out_len: usize) -> Vec<f64> {
    let (p, s, np) = patch_geometry(x.len(), cfg.patch_len, cfg.patch_stride);
    let patches: Vec<Vec<f64>> = (0..np)
        .map(|q| (0..p).map(|t| x[(q * s + t).min(x.len() - 1)]).collect())
        .collect();
    let pre = format!("branch{number}");
    let mut h = dense(store, &format!("{pre}/embed"), &patches);
    for d in 1..=depth {
        let width = h[0].len();
        let cols: Vec<Vec<f64>> = (0..width).map(|c| (0..np).map(|q| h[q][c]).collect()).collect();
        let mixed = dense(store, &format!("{pre}/mixer{d}/token"), &cols);
        for q in 0..np {
            for c in 0..width {
                h[q][c] += gelu(mixed[c][q]);
            }
        }
        let c1: Vec<Vec<f64>> = dense(store, &format!("{pre}/mixer{d}/channel1"), &h)
            .into_iter()
            .map(|r| r.into_iter().map(gelu).collect())
            .collect();
        let c2 = dense(store, &format!("{pre}/mixer{d}/channel2"), &c1);
        for q in 0..np {
            for c in 0..width {
                h[q][c] += c2[q][c];
            }
        }
    }
    let flat: Vec<f64> = h.concat();
    let out = dense(store, &format!("{pre}/head"), &[flat]).remove(0);
    assert_eq!(out.len(), out_len);
    out
}

#[test]
fn forward_matches_stage_by_stage_oracle() {
    let level = 2;
    let (t_in, k_out) = (40, 20);
    let cfg = ModelConfig {
        patch_len: 8,
        patch_stride: 4,
        width: 6,
        depth: 2,
        activation: Activation::Gelu,
        revin_affine: false,
    };
    let wavelet: Wavelet = "db2".parse().unwrap();
    let model = ForecastModel::new(WaveletSpec::new(wavelet, level).unwrap(), t_in, k_out, 2, cfg.clone(), 17).unwrap();
    let bank = wavelet.filter_bank().unwrap();
    let x = input(2, 2, t_in, 1.3);
    let pass = model.forward(&x).unwrap();

    for row in 0..x.rows() {
        let (xn, mean, scale) = oracle_revin(x.row(row));
        let (a1, d1) = oracle_dwt_step(&xn, &bank.dec_lo, &bank.dec_hi);
        let (a2, d2) = oracle_dwt_step(&a1, &bank.dec_lo, &bank.dec_hi);
        let lout = level_lengths(k_out, level);
        let bands_in = [d1, d2, a2];
        let preds: Vec<Vec<f64>> = model
            .branches()
            .iter()
            .zip(&bands_in)
            .enumerate()
            .map(|(v, (br, band))| {
                let k = if v < level { v + 1 } else { level };
                oracle_branch(br.params(), v + 1, cfg.depth, &cfg, band, lout[k])
            })
            .collect();
        let r1 = oracle_idwt_step(&preds[2], &preds[1], &bank.dec_lo, &bank.dec_hi, lout[1]);
        let y = oracle_idwt_step(&r1, &preds[0], &bank.dec_lo, &bank.dec_hi, k_out);
        for (got, z) in pass.prediction.row(row).iter().zip(&y) {
            let expected = z * scale + mean;
            assert!((got - expected).abs() < 1e-12, "row {row}: {got} vs {expected}");
        }
        for (v, pred) in preds.iter().enumerate() {
            let len = pred.len();
            let got = &pass.predicted_coeffs.band(v)[row * len..(row + 1) * len];
            for (g, e) in got.iter().zip(pred) {
                assert!((g - e).abs() < 1e-12);
            }
        }
    }
}

// ---- gradients ----

fn probe(shape: [usize; 3]) -> SeriesTensor {
    SeriesTensor::from_fn(shape[0], shape[1], shape[2], |b, n, t| ((b * 31 + n * 7 + t) as f64 * 0.77).sin())
}

fn objective(model: &ForecastModel, x: &SeriesTensor, w: &SeriesTensor) -> f64 {
    let p = model.predict(x).unwrap();
    p.data().iter().zip(w.data()).map(|(a, b)| a * b).sum()
}

fn check_gradients(config: ModelConfig) {
    let model0 = ForecastModel::new(spec("db2", 2), 8, 4, 2, config, 11).unwrap();
    // perturb the affine away from identity so its gradient path is exercised
    let mut model = model0.clone();
    if let Some(shared) = model.shared_params_mut() {
        for p in shared.iter_mut() {
            for (i, v) in p.values.iter_mut().enumerate() {
                *v += 0.1 * (i as f64 + 1.0);
            }
        }
    }
    let x = input(2, 2, 8, 0.4);
    let w = probe([2, 2, 4]);
    let pass = model.forward(&x).unwrap();
    let mut trained = model.clone();
    trained.zero_grad();
    trained.backward(&pass, &w).unwrap();

    let h = 1e-5;
    let mut checked = 0;
    let stores: Vec<(usize, ParamStore)> = trained.param_stores().cloned().enumerate().collect();
    for (s, store) in &stores {
        for (pi, param) in store.iter().enumerate() {
            for k in 0..param.len() {
                let eval = |delta: f64| {
                    let mut m = model.clone();
                    let target = m.param_stores_mut().nth(*s).unwrap();
                    target.iter_mut().nth(pi).unwrap().values[k] += delta;
                    objective(&m, &x, &w)
                };
                let fd = (eval(h) - eval(-h)) / (2.0 * h);
                let an = param.grad[k];
                let diff = (fd - an).abs();
                let rel = diff / an.abs().max(fd.abs());
                assert!(diff < 1e-8 || rel < 1e-4, "{}[{k}]: analytic {an}, numeric {fd}", param.name());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, trained.scalar_count());
}

#[test]
fn full_model_gradients_match_finite_differences() {
    check_gradients(ModelConfig {
        width: 8,
        patch_len: 2,
        patch_stride: 1,
        ..ModelConfig::default()
    });
}

#[test]
fn affine_normalization_gradients_match_finite_differences() {
    check_gradients(ModelConfig {
        width: 8,
        patch_len: 2,
        patch_stride: 1,
        revin_affine: true,
        ..ModelConfig::default()
    });
}

#[test]
fn perturbing_one_branch_moves_only_its_band() {
    let model = ForecastModel::new(spec("coif1", 3), 64, 32, 2, ModelConfig::default(), 3).unwrap();
    let x = input(2, 2, 64, 2.0);
    let base = model.forward(&x).unwrap();
    for v in 0..model.branch_count() {
        let mut m = model.clone();
        for p in m.branches_mut()[v].params_mut().iter_mut() {
            p.values.iter_mut().for_each(|x| *x += 0.01);
        }
        let moved = m.forward(&x).unwrap();
        for w in 0..model.branch_count() {
            let same = moved.predicted_coeffs.band(w) == base.predicted_coeffs.band(w);
            assert_eq!(same, w != v, "perturbing branch {v} affected band {w}: {}", !same);
        }
    }
    for (v, branch) in model.branches().iter().enumerate() {
        let prefix = format!("branch{}/", v + 1);
        assert!(branch.params().iter().all(|p| p.name().starts_with(&prefix)));
    }
}

#[test]
fn gradients_stay_inside_their_branch() {
    let mut model = ForecastModel::new(spec("db2", 2), 32, 16, 1, ModelConfig::default(), 8).unwrap();
    let x = input(1, 1, 32, 0.2);
    let pass = model.forward(&x).unwrap();
    // a gradient supported only on band 0 of the reconstruction input
    let mut g_coeffs = beat::wavelet::CoefficientSet::zeros(1, 1, 16, 2);
    g_coeffs.band_mut(0).iter_mut().for_each(|v| *v = 1.0);
    let g_norm = beat::wavelet::idwt_multilevel(&g_coeffs, model.spec()).unwrap();
    // adjoint of idwt is dwt for orthogonal filters; push it back to raw scale
    let mut g = g_norm.clone();
    let scale = pass.stats.scale(0);
    g.data_mut().iter_mut().for_each(|v| *v /= scale);
    model.zero_grad();
    model.backward(&pass, &g).unwrap();
    for (v, branch) in model.branches().iter().enumerate() {
        let nonzero = branch.params().iter().any(|p| p.grad.iter().any(|&g| g.abs() > 1e-12));
        assert_eq!(nonzero, v == 0, "branch {v}");
    }
}

#[test]
fn construction_and_forward_are_deterministic() {
    let a = ForecastModel::new(spec("sym3", 2), 96, 96, 3, ModelConfig::default(), 42).unwrap();
    let b = ForecastModel::new(spec("sym3", 2), 96, 96, 3, ModelConfig::default(), 42).unwrap();
    let c = ForecastModel::new(spec("sym3", 2), 96, 96, 3, ModelConfig::default(), 43).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    let x = input(4, 3, 96, 0.9);
    let pa = a.predict(&x).unwrap();
    let pb = b.predict(&x).unwrap();
    assert_eq!(pa.data(), pb.data());
    assert_eq!(pa.data(), a.predict(&x).unwrap().data());
}

#[test]
fn wrong_input_shape_is_rejected() {
    let model = ForecastModel::new(spec("db2", 2), 32, 16, 2, ModelConfig::default(), 0).unwrap();
    assert!(model.forward(&input(1, 3, 32, 0.0)).is_err());
    assert!(model.forward(&input(1, 2, 31, 0.0)).is_err());
    let mut bad = input(1, 2, 32, 0.0);
    bad.data_mut()[3] = f64::NAN;
    assert!(model.forward(&bad).is_err());
}

#[test]
fn too_short_lookback_is_rejected() {
    assert!(ForecastModel::new(spec("db2", 4), 8, 16, 1, ModelConfig::default(), 0).is_err());
}
