use super::{FilterBank, WaveletError, WaveletSpec};
use crate::tensor::SeriesTensor;

/// Coefficient lengths of a level-`level` decomposition of a length-`len`
/// series: `[len, ceil(len/2), ceil(len/4), ...]`, `level + 1` entries.
pub fn level_lengths(len: usize, level: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(level + 1);
    out.push(len);
    for k in 0..level {
        out.push(out[k].div_ceil(2));
    }
    out
}

/// Approximation plus detail coefficients for every series of a tensor.
///
/// `details[0]` is the level-1 (highest-frequency) detail `D_1` and
/// `details[f - 1]` the coarsest `D_f`. Each band stores `rows * len`
/// values, one contiguous coefficient series per `(batch, variate)` row.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    batch: usize,
    variates: usize,
    lengths: Vec<usize>,
    approximation: Vec<f64>,
    details: Vec<Vec<f64>>,
}

impl CoefficientSet {
    /// All-zero coefficients for a `[batch, variates, signal_len]` input.
    pub fn zeros(batch: usize, variates: usize, signal_len: usize, level: usize) -> Self {
        let lengths = level_lengths(signal_len, level);
        let rows = batch * variates;
        let details = (1..=level).map(|k| vec![0.0; rows * lengths[k]]).collect();
        Self {
            batch,
            variates,
            approximation: vec![0.0; rows * lengths[level]],
            lengths,
            details,
        }
    }

    /// Assembles a set from raw band buffers, checking them against the
    /// ceil-halving length law.
    pub fn from_parts(
        batch: usize,
        variates: usize,
        signal_len: usize,
        approximation: Vec<f64>,
        details: Vec<Vec<f64>>,
    ) -> Result<Self, WaveletError> {
        let level = details.len();
        let lengths = level_lengths(signal_len, level);
        let rows = batch * variates;
        if approximation.len() != rows * lengths[level] {
            return Err(WaveletError::LengthMismatch(format!(
                "approximation has {} values, expected {}",
                approximation.len(),
                rows * lengths[level]
            )));
        }
        for (i, d) in details.iter().enumerate() {
            if d.len() != rows * lengths[i + 1] {
                return Err(WaveletError::LengthMismatch(format!(
                    "detail D{} has {} values, expected {}",
                    i + 1,
                    d.len(),
                    rows * lengths[i + 1]
                )));
            }
        }
        Ok(Self {
            batch,
            variates,
            lengths,
            approximation,
            details,
        })
    }

    pub fn batch(&self) -> usize {
        self.batch
    }

    pub fn variates(&self) -> usize {
        self.variates
    }

    pub fn rows(&self) -> usize {
        self.batch * self.variates
    }

    pub fn level(&self) -> usize {
        self.details.len()
    }

    /// Length of the decomposed signal.
    pub fn signal_len(&self) -> usize {
        self.lengths[0]
    }

    /// `lengths()[k]` is the per-series coefficient count at level `k`.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn approximation(&self) -> &[f64] {
        &self.approximation
    }

    pub fn approximation_mut(&mut self) -> &mut [f64] {
        &mut self.approximation
    }

    pub fn approximation_len(&self) -> usize {
        self.lengths[self.level()]
    }

    /// Detail `D_i` for `i` in `1..=level`.
    pub fn detail(&self, i: usize) -> &[f64] {
        &self.details[i - 1]
    }

    pub fn detail_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.details[i - 1]
    }

    pub fn detail_len(&self, i: usize) -> usize {
        self.lengths[i]
    }

    /// Bands in branch order: `D_1, ..., D_f, A`.
    pub fn band(&self, v: usize) -> &[f64] {
        if v < self.level() {
            &self.details[v]
        } else {
            &self.approximation
        }
    }

    pub fn band_mut(&mut self, v: usize) -> &mut [f64] {
        if v < self.level() {
            &mut self.details[v]
        } else {
            &mut self.approximation
        }
    }

    /// Per-series length of band `v` (branch order).
    pub fn band_len(&self, v: usize) -> usize {
        if v < self.level() {
            self.lengths[v + 1]
        } else {
            self.lengths[self.level()]
        }
    }

    pub fn band_count(&self) -> usize {
        self.level() + 1
    }

    fn same_layout(&self, other: &CoefficientSet) -> bool {
        self.batch == other.batch && self.variates == other.variates && self.lengths == other.lengths
    }

    /// Inner product over all bands.
    pub fn dot(&self, other: &CoefficientSet) -> f64 {
        assert!(self.same_layout(other), "coefficient layouts differ");
        (0..self.band_count())
            .map(|v| {
                self.band(v)
                    .iter()
                    .zip(other.band(v))
                    .map(|(a, b)| a * b)
                    .sum::<f64>()
            })
            .sum()
    }
}

// --- single-level kernels -------------------------------------------------
//
// Periodized analysis with filter length F and shift s = F/2:
//     lo_out[k] = sum_j lo[j] * x[(2k + s - j) mod N]
// `scatter` is the exact transpose of `gather` for the same filters. The
// forward DWT gathers with the decomposition filters, the inverse scatters
// with the reversed reconstruction filters, and each adjoint swaps the two.

#[inline]
fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

fn gather(x: &[f64], lo: &[f64], hi: &[f64], out_lo: &mut [f64], out_hi: &mut [f64]) {
    let n = x.len();
    let shift = (lo.len() / 2) as isize;
    for k in 0..out_lo.len() {
        let base = 2 * k as isize + shift;
        let mut a = 0.0;
        let mut d = 0.0;
        for (j, (&l, &h)) in lo.iter().zip(hi).enumerate() {
            let v = x[wrap(base - j as isize, n)];
            a += l * v;
            d += h * v;
        }
        out_lo[k] = a;
        out_hi[k] = d;
    }
}

fn scatter(in_lo: &[f64], in_hi: &[f64], lo: &[f64], hi: &[f64], x: &mut [f64]) {
    let n = x.len();
    let shift = (lo.len() / 2) as isize;
    for (k, (&a, &d)) in in_lo.iter().zip(in_hi).enumerate() {
        let base = 2 * k as isize + shift;
        for (j, (&l, &h)) in lo.iter().zip(hi).enumerate() {
            x[wrap(base - j as isize, n)] += l * a + h * d;
        }
    }
}

struct Kernels {
    dec_lo: Vec<f64>,
    dec_hi: Vec<f64>,
    rec_lo_rev: Vec<f64>,
    rec_hi_rev: Vec<f64>,
}

impl Kernels {
    fn new(spec: &WaveletSpec) -> Result<Self, WaveletError> {
        let bank: FilterBank = spec.wavelet.filter_bank()?;
        Ok(Self {
            rec_lo_rev: bank.rec_lo.iter().rev().copied().collect(),
            rec_hi_rev: bank.rec_hi.iter().rev().copied().collect(),
            dec_lo: bank.dec_lo,
            dec_hi: bank.dec_hi,
        })
    }
}

// --- per-series multilevel routines --------------------------------------

fn decompose_series(x: &[f64], kernels: &Kernels, lengths: &[usize], out: &mut [&mut [f64]]) {
    // out[0..level] receive D_1..D_f, out[level] the approximation
    let level = lengths.len() - 1;
    let mut current = x.to_vec();
    for k in 1..=level {
        if current.len() % 2 == 1 {
            current.push(*current.last().expect("non-empty series"));
        }
        let half = lengths[k];
        let mut approx = vec![0.0; half];
        gather(&current, &kernels.dec_lo, &kernels.dec_hi, &mut approx, out[k - 1]);
        current = approx;
    }
    out[level].copy_from_slice(&current);
}

fn reconstruct_series(bands: &[&[f64]], kernels: &Kernels, lengths: &[usize], out: &mut [f64]) {
    let level = lengths.len() - 1;
    let mut current = bands[level].to_vec();
    for k in (1..=level).rev() {
        let n = lengths[k - 1];
        let mut rec = vec![0.0; n + n % 2];
        scatter(&current, bands[k - 1], &kernels.rec_lo_rev, &kernels.rec_hi_rev, &mut rec);
        rec.truncate(n);
        current = rec;
    }
    out.copy_from_slice(&current);
}

/// Transpose of `decompose_series`.
fn decompose_adjoint_series(
    grads: &[&[f64]],
    kernels: &Kernels,
    lengths: &[usize],
    out: &mut [f64],
) {
    let level = lengths.len() - 1;
    let mut current = grads[level].to_vec();
    for k in (1..=level).rev() {
        let n = lengths[k - 1];
        let mut padded = vec![0.0; n + n % 2];
        scatter(&current, grads[k - 1], &kernels.dec_lo, &kernels.dec_hi, &mut padded);
        if n % 2 == 1 {
            // the padded sample duplicated x[n-1]
            padded[n - 1] += padded[n];
            padded.truncate(n);
        }
        current = padded;
    }
    out.copy_from_slice(&current);
}

/// Transpose of `reconstruct_series`.
fn reconstruct_adjoint_series(
    grad: &[f64],
    kernels: &Kernels,
    lengths: &[usize],
    out: &mut [&mut [f64]],
) {
    let level = lengths.len() - 1;
    let mut current = grad.to_vec();
    for k in 1..=level {
        if current.len() % 2 == 1 {
            // truncation dropped one sample; its adjoint appends a zero
            current.push(0.0);
        }
        let mut approx = vec![0.0; lengths[k]];
        gather(
            &current,
            &kernels.rec_lo_rev,
            &kernels.rec_hi_rev,
            &mut approx,
            out[k - 1],
        );
        current = approx;
    }
    out[level].copy_from_slice(&current);
}

fn row_slices(set: &CoefficientSet, row: usize) -> Vec<&[f64]> {
    (0..set.band_count())
        .map(|v| {
            let len = set.band_len(v);
            &set.band(v)[row * len..(row + 1) * len]
        })
        .collect()
}

fn check_layout(coeffs: &CoefficientSet, spec: &WaveletSpec) -> Result<(), WaveletError> {
    if coeffs.level() != spec.level {
        return Err(WaveletError::LengthMismatch(format!(
            "coefficients have {} detail bands, spec level is {}",
            coeffs.level(),
            spec.level
        )));
    }
    let expected = level_lengths(coeffs.signal_len(), spec.level);
    if coeffs.lengths() != expected.as_slice() {
        return Err(WaveletError::LengthMismatch(format!(
            "recorded lengths {:?} do not follow the halving law {:?}",
            coeffs.lengths(),
            expected
        )));
    }
    Ok(())
}

// --- public tensor-level operations ---------------------------------------

/// Multi-level periodized DWT of every series in `signal`.
pub fn dwt_multilevel(
    signal: &SeriesTensor,
    spec: &WaveletSpec,
) -> Result<CoefficientSet, WaveletError> {
    spec.check_length(signal.time())?;
    let kernels = Kernels::new(spec)?;
    let mut coeffs =
        CoefficientSet::zeros(signal.batch(), signal.variates(), signal.time(), spec.level);
    let lengths = coeffs.lengths.clone();
    let level = spec.level;
    for (row, series) in signal.series().enumerate() {
        let (details, approx) = (&mut coeffs.details, &mut coeffs.approximation);
        let mut outs: Vec<&mut [f64]> = details
            .iter_mut()
            .enumerate()
            .map(|(i, d)| &mut d[row * lengths[i + 1]..(row + 1) * lengths[i + 1]])
            .collect();
        outs.push(&mut approx[row * lengths[level]..(row + 1) * lengths[level]]);
        decompose_series(series, &kernels, &lengths, &mut outs);
    }
    Ok(coeffs)
}

/// Inverse of [`dwt_multilevel`]; returns series of the original length.
pub fn idwt_multilevel(
    coeffs: &CoefficientSet,
    spec: &WaveletSpec,
) -> Result<SeriesTensor, WaveletError> {
    check_layout(coeffs, spec)?;
    let kernels = Kernels::new(spec)?;
    let mut out = SeriesTensor::zeros(coeffs.batch, coeffs.variates, coeffs.signal_len());
    for row in 0..coeffs.rows() {
        let bands = row_slices(coeffs, row);
        reconstruct_series(&bands, &kernels, &coeffs.lengths, out.row_mut(row));
    }
    Ok(out)
}

/// Adjoint of [`dwt_multilevel`]: maps gradients with respect to the
/// coefficients to the gradient with respect to the input signal.
pub fn dwt_multilevel_backward(
    output_gradients: &CoefficientSet,
    spec: &WaveletSpec,
) -> Result<SeriesTensor, WaveletError> {
    check_layout(output_gradients, spec)?;
    let kernels = Kernels::new(spec)?;
    let g = output_gradients;
    let mut out = SeriesTensor::zeros(g.batch, g.variates, g.signal_len());
    for row in 0..g.rows() {
        let bands = row_slices(g, row);
        decompose_adjoint_series(&bands, &kernels, &g.lengths, out.row_mut(row));
    }
    Ok(out)
}

/// Adjoint of [`idwt_multilevel`]: maps the gradient with respect to the
/// reconstructed signal to gradients with respect to every band.
pub fn idwt_multilevel_backward(
    output_gradient: &SeriesTensor,
    spec: &WaveletSpec,
) -> Result<CoefficientSet, WaveletError> {
    spec.check_length(output_gradient.time())?;
    let kernels = Kernels::new(spec)?;
    let g = output_gradient;
    let mut coeffs = CoefficientSet::zeros(g.batch(), g.variates(), g.time(), spec.level);
    let lengths = coeffs.lengths.clone();
    let level = spec.level;
    for (row, series) in g.series().enumerate() {
        let (details, approx) = (&mut coeffs.details, &mut coeffs.approximation);
        let mut outs: Vec<&mut [f64]> = details
            .iter_mut()
            .enumerate()
            .map(|(i, d)| &mut d[row * lengths[i + 1]..(row + 1) * lengths[i + 1]])
            .collect();
        outs.push(&mut approx[row * lengths[level]..(row + 1) * lengths[level]]);
        reconstruct_adjoint_series(series, &kernels, &lengths, &mut outs);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet::Wavelet;

    const X14: [f64; 14] = [
        0.5, -1.25, 2.0, 3.5, -0.75, 1.0, 0.25, -2.5, 1.75, 0.0, -1.0, 2.25, 0.5, 1.5,
    ];

    fn single(x: &[f64]) -> SeriesTensor {
        SeriesTensor::from_vec(1, 1, x.len(), x.to_vec()).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "length differs: {got:?} vs {want:?}");
        for (i, (g, w)) in got.iter().zip(want).enumerate() {
            assert!((g - w).abs() <= tol, "index {i}: {g} vs {w}");
        }
    }

    #[test]
    fn haar_constant_signal_has_zero_details() {
        let c = 3.25;
        let coeffs = dwt_multilevel(&single(&[c; 4]), &WaveletSpec::haar(1)).unwrap();
        assert_close(coeffs.detail(1), &[0.0, 0.0], 1e-15);
        let s2 = std::f64::consts::SQRT_2;
        assert_close(coeffs.approximation(), &[c * s2, c * s2], 1e-14);
    }

    #[test]
    fn haar_ramp_by_hand() {
        // (1 + 2)/sqrt2, (3 + 4)/sqrt2 and (1 - 2)/sqrt2, (3 - 4)/sqrt2
        let coeffs = dwt_multilevel(&single(&[1.0, 2.0, 3.0, 4.0]), &WaveletSpec::haar(1)).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(coeffs.approximation(), &[3.0 * r, 7.0 * r], 1e-15);
        assert_close(coeffs.detail(1), &[-r, -r], 1e-15);
        assert!((coeffs.approximation()[0] - 2.12132).abs() < 1e-5);
        assert!((coeffs.approximation()[1] - 4.94975).abs() < 1e-5);
    }

    #[test]
    fn haar_synthesis_by_hand() {
        let s2 = std::f64::consts::SQRT_2;
        let coeffs = CoefficientSet::from_parts(1, 1, 4, vec![s2, s2], vec![vec![0.0, 0.0]]).unwrap();
        let x = idwt_multilevel(&coeffs, &WaveletSpec::haar(1)).unwrap();
        assert_close(x.data(), &[1.0; 4], 1e-15);
    }

    #[test]
    fn zero_coefficients_reconstruct_zero() {
        let spec = WaveletSpec::new(Wavelet::Daubechies(4), 3).unwrap();
        let coeffs = CoefficientSet::zeros(2, 3, 37, 3);
        let x = idwt_multilevel(&coeffs, &spec).unwrap();
        assert_eq!(x.shape(), [2, 3, 37]);
        assert!(x.data().iter().all(|&v| v == 0.0));
        let g = dwt_multilevel_backward(&coeffs, &spec).unwrap();
        assert!(g.data().iter().all(|&v| v == 0.0));
    }

    // Reference values from an established wavelet library run in
    // periodization mode.
    #[test]
    fn matches_reference_library_db2_level2() {
        let spec = WaveletSpec::new(Wavelet::Daubechies(2), 2).unwrap();
        let c = dwt_multilevel(&single(&X14), &spec).unwrap();
        assert_eq!(c.lengths(), &[14, 7, 4]);
        assert_close(
            c.approximation(),
            &[1.6378607103712535, 1.9206726320958225, -0.041786517940130496, 1.6143829386826372],
            1e-12,
        );
        assert_close(
            c.detail(2),
            &[0.6607372981077808, -0.7993386976527024, -1.2642025834970105, 0.8476361141556921],
            1e-12,
        );
        assert_close(
            c.detail(1),
            &[
                -2.3177574238092253,
                3.003503415045777,
                0.43095014755377314,
                -3.1219213469092186,
                0.41423495044916164,
                1.864824094879814,
                0.6100496392731023,
            ],
            1e-12,
        );
    }

    #[test]
    fn matches_reference_library_bior22_level2() {
        let spec = WaveletSpec::new(Wavelet::Biorthogonal(2, 2), 2).unwrap();
        let c = dwt_multilevel(&single(&X14[..10]), &spec).unwrap();
        assert_close(c.approximation(), &[0.515625, 1.265625, 1.0625], 1e-12);
        assert_close(c.detail(2), &[-2.15625, 0.75, -0.5], 1e-12);
        assert_close(
            c.detail(1),
            &[
                1.7677669529663689,
                -2.032931995911324,
                -0.8838834764831844,
                2.4748737341529163,
                0.795495128834866,
            ],
            1e-12,
        );
    }

    #[test]
    fn matches_reference_library_odd_length_sym4_and_coif1() {
        // the reference library stores sym4 with ~12 correct digits
        let spec = WaveletSpec::new(Wavelet::Symlets(4), 1).unwrap();
        let c = dwt_multilevel(&single(&X14[..13]), &spec).unwrap();
        assert_close(
            c.approximation(),
            &[
                0.10918295357988822,
                3.1208442616059937,
                0.23349367744563562,
                -0.96526976348434,
                0.1961906478097379,
                1.604048414337733,
                0.47448058171468754,
            ],
            1e-9,
        );
        let spec = WaveletSpec::new(Wavelet::Coiflets(1), 3).unwrap();
        let c = dwt_multilevel(&single(&X14), &spec).unwrap();
        assert_close(c.approximation(), &[2.5545508583028957, 1.0953824142241877], 1e-12);
        assert_close(c.detail(3), &[-0.16262417488244654, -1.0165692775731106], 1e-12);
    }

    #[test]
    fn adjoint_of_unit_gradient_is_a_row_of_the_explicit_matrix() {
        // Build the DWT matrix column by column from the forward transform,
        // then check the adjoint against its rows.
        let n = 8;
        for wavelet in [Wavelet::Daubechies(2), Wavelet::Biorthogonal(3, 3), Wavelet::Coiflets(1)] {
            let spec = WaveletSpec::new(wavelet, 2).unwrap();
            let columns: Vec<CoefficientSet> = (0..n)
                .map(|i| {
                    let mut e = vec![0.0; n];
                    e[i] = 1.0;
                    dwt_multilevel(&single(&e), &spec).unwrap()
                })
                .collect();
            let template = CoefficientSet::zeros(1, 1, n, 2);
            for v in 0..template.band_count() {
                for j in 0..template.band_len(v) {
                    let mut g = template.clone();
                    g.band_mut(v)[j] = 1.0;
                    let adj = dwt_multilevel_backward(&g, &spec).unwrap();
                    let row: Vec<f64> = columns.iter().map(|c| c.band(v)[j]).collect();
                    assert_close(adj.data(), &row, 1e-14);
                }
            }
        }
    }

    #[test]
    fn odd_length_round_trip_keeps_original_length() {
        let spec = WaveletSpec::new(Wavelet::Daubechies(3), 3).unwrap();
        let x = single(&X14[..13]);
        let c = dwt_multilevel(&x, &spec).unwrap();
        assert_eq!(c.lengths(), &[13, 7, 4, 2]);
        let back = idwt_multilevel(&c, &spec).unwrap();
        assert_close(back.data(), x.data(), 1e-12);
    }

    #[test]
    fn inconsistent_bookkeeping_is_rejected() {
        let spec = WaveletSpec::haar(2);
        assert!(matches!(
            CoefficientSet::from_parts(1, 1, 8, vec![0.0; 3], vec![vec![0.0; 4], vec![0.0; 2]]),
            Err(WaveletError::LengthMismatch(_))
        ));
        let c = CoefficientSet::zeros(1, 1, 8, 3);
        assert!(matches!(
            idwt_multilevel(&c, &spec),
            Err(WaveletError::LengthMismatch(_))
        ));
    }

    #[test]
    fn too_short_signal_is_rejected() {
        let spec = WaveletSpec::haar(4);
        assert!(matches!(
            dwt_multilevel(&single(&[1.0; 12]), &spec),
            Err(WaveletError::SignalTooShort { len: 12, level: 4, min: 16 })
        ));
    }

    #[test]
    fn level_lengths_follow_ceil_halving() {
        assert_eq!(level_lengths(97, 5), vec![97, 49, 25, 13, 7, 4]);
        assert_eq!(level_lengths(720, 3), vec![720, 360, 180, 90]);
    }
}
