use beat::wavelet::{
    dwt_multilevel, dwt_multilevel_backward, idwt_multilevel, idwt_multilevel_backward,
    level_lengths, Wavelet, WaveletSpec,
};
use beat::SeriesTensor;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn representative_wavelets() -> Vec<Wavelet> {
    let mut out = vec![
        Wavelet::Daubechies(1),
        Wavelet::Daubechies(2),
        Wavelet::Daubechies(4),
        Wavelet::Daubechies(8),
        Wavelet::Daubechies(20),
        Wavelet::Daubechies(38),
        Wavelet::Symlets(2),
        Wavelet::Symlets(4),
        Wavelet::Symlets(8),
        Wavelet::Symlets(20),
        Wavelet::Coiflets(1),
        Wavelet::Coiflets(3),
        Wavelet::Coiflets(5),
        Wavelet::Coiflets(17),
    ];
    out.extend(
        beat::wavelet::BIORTHOGONAL_PAIRS
            .iter()
            .map(|&(r, d)| Wavelet::Biorthogonal(r, d)),
    );
    out
}

fn random_tensor(rng: &mut ChaCha8Rng, batch: usize, variates: usize, len: usize) -> SeriesTensor {
    SeriesTensor::from_fn(batch, variates, len, |_, _, _| rng.random_range(-3.0..3.0))
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn perfect_reconstruction_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for wavelet in representative_wavelets() {
        for level in 1..=5 {
            let spec = WaveletSpec::new(wavelet, level).unwrap();
            for len in [32, 96, 97, 720] {
                let x = random_tensor(&mut rng, 2, 2, len);
                let coeffs = dwt_multilevel(&x, &spec).unwrap();
                assert_eq!(coeffs.lengths(), level_lengths(len, level).as_slice());
                let back = idwt_multilevel(&coeffs, &spec).unwrap();
                let err = max_abs_diff(back.data(), x.data());
                assert!(err < 1e-10, "{wavelet} level {level} len {len}: {err:e}");
                worst = worst.max(err);
            }
        }
    }
    eprintln!("worst reconstruction error {worst:e}");
}

#[test]
fn every_tabulated_wavelet_reconstructs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for wavelet in Wavelet::all() {
        let spec = WaveletSpec::new(wavelet, 3).unwrap();
        let x = random_tensor(&mut rng, 1, 1, 97);
        let back = idwt_multilevel(&dwt_multilevel(&x, &spec).unwrap(), &spec).unwrap();
        let err = max_abs_diff(back.data(), x.data());
        assert!(err < 1e-10, "{wavelet}: {err:e}");
    }
}

#[test]
fn daubechies_details_vanish_on_low_degree_polynomials() {
    let n = 256;
    for order in 1..=10u8 {
        let spec = WaveletSpec::new(Wavelet::Daubechies(order), 1).unwrap();
        let taps = 2 * order as usize;
        let shift = taps / 2;
        for degree in 0..order as i32 {
            let x = SeriesTensor::from_fn(1, 1, n, |_, _, t| {
                let u = t as f64 / n as f64 - 0.5;
                (2.0 * u).powi(degree)
            });
            let coeffs = dwt_multilevel(&x, &spec).unwrap();
            for (k, d) in coeffs.detail(1).iter().enumerate() {
                let first = 2 * k + shift;
                // skip coefficients whose support wraps around the boundary
                if first + 1 < taps || first >= n {
                    continue;
                }
                assert!(d.abs() < 1e-8, "db{order} degree {degree} k {k}: {d:e}");
            }
        }
    }
}

fn spec_strategy() -> impl Strategy<Value = WaveletSpec> {
    let wavelets = representative_wavelets();
    (0..wavelets.len(), 1usize..=4)
        .prop_map(move |(i, level)| WaveletSpec::new(wavelets[i], level).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linearity(spec in spec_strategy(), len in 16usize..80, seed in any::<u64>(),
                 a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_tensor(&mut rng, 1, 2, len);
        let y = random_tensor(&mut rng, 1, 2, len);
        let combo = SeriesTensor::from_fn(1, 2, len, |bi, n, t| a * x.get(bi, n, t) + b * y.get(bi, n, t));
        let cx = dwt_multilevel(&x, &spec).unwrap();
        let cy = dwt_multilevel(&y, &spec).unwrap();
        let cc = dwt_multilevel(&combo, &spec).unwrap();
        for v in 0..cc.band_count() {
            for ((c, p), q) in cc.band(v).iter().zip(cx.band(v)).zip(cy.band(v)) {
                prop_assert!((c - (a * p + b * q)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dwt_adjoint_identity(spec in spec_strategy(), len in 16usize..120, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_tensor(&mut rng, 2, 1, len);
        let cx = dwt_multilevel(&x, &spec).unwrap();
        let mut g = cx.clone();
        for v in 0..g.band_count() {
            for value in g.band_mut(v) {
                *value = rng.random_range(-1.0..1.0);
            }
        }
        let lhs = cx.dot(&g);
        let back = dwt_multilevel_backward(&g, &spec).unwrap();
        let rhs: f64 = x.data().iter().zip(back.data()).map(|(p, q)| p * q).sum();
        prop_assert!((lhs - rhs).abs() < 1e-10, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn idwt_adjoint_identity(spec in spec_strategy(), len in 16usize..120, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let template = dwt_multilevel(&random_tensor(&mut rng, 1, 2, len), &spec).unwrap();
        let mut c = template.clone();
        for v in 0..c.band_count() {
            for value in c.band_mut(v) {
                *value = rng.random_range(-1.0..1.0);
            }
        }
        let y = idwt_multilevel(&c, &spec).unwrap();
        let g = random_tensor(&mut rng, 1, 2, len);
        let lhs: f64 = y.data().iter().zip(g.data()).map(|(p, q)| p * q).sum();
        let back = idwt_multilevel_backward(&g, &spec).unwrap();
        prop_assert!((lhs - c.dot(&back)).abs() < 1e-10);
    }

    #[test]
    fn reconstruction_is_exact_for_arbitrary_lengths(spec in spec_strategy(), len in 16usize..300, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_tensor(&mut rng, 1, 1, len);
        let back = idwt_multilevel(&dwt_multilevel(&x, &spec).unwrap(), &spec).unwrap();
        prop_assert!(max_abs_diff(back.data(), x.data()) < 1e-10);
    }
}
