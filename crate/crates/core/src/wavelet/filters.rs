//! Analysis/synthesis filter quadruples.

use super::tables::*;
use super::{Wavelet, WaveletError};

/// The four filters of a two-channel perfect-reconstruction bank.
///
/// Conventions follow the common published tables: `dec_hi[k] =
/// (-1)^(k+1) rec_lo[k]` and `rec_hi[k] = (-1)^k dec_lo[k]`. For the
/// orthogonal families `rec_lo` is `dec_lo` reversed.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterBank {
    pub dec_lo: Vec<f64>,
    pub dec_hi: Vec<f64>,
    pub rec_lo: Vec<f64>,
    pub rec_hi: Vec<f64>,
}

impl FilterBank {
    pub(crate) fn for_wavelet(wavelet: Wavelet) -> Result<Self, WaveletError> {
        let (dec_lo, rec_lo) = lowpass(wavelet)?;
        let dec_lo = dec_lo.to_vec();
        let rec_lo: Vec<f64> = match rec_lo {
            Some(r) => r.to_vec(),
            None => dec_lo.iter().rev().copied().collect(),
        };
        Ok(Self::from_lowpass(dec_lo, rec_lo))
    }

    /// Completes a bank from its two lowpass filters.
    pub fn from_lowpass(dec_lo: Vec<f64>, rec_lo: Vec<f64>) -> Self {
        assert_eq!(dec_lo.len(), rec_lo.len(), "lowpass filters must have equal length");
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        let dec_hi = rec_lo.iter().enumerate().map(|(k, v)| -sign(k) * v).collect();
        let rec_hi = dec_lo.iter().enumerate().map(|(k, v)| sign(k) * v).collect();
        Self {
            dec_lo,
            dec_hi,
            rec_lo,
            rec_hi,
        }
    }

    pub fn len(&self) -> usize {
        self.dec_lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dec_lo.is_empty()
    }
}

type Lowpass = (&'static [f64], Option<&'static [f64]>);

fn lowpass(wavelet: Wavelet) -> Result<Lowpass, WaveletError> {
    let pair: Lowpass = match wavelet {
        Wavelet::Daubechies(1) => (&DB1, None),
        Wavelet::Daubechies(2) => (&DB2, None),
        Wavelet::Daubechies(3) => (&DB3, None),
        Wavelet::Daubechies(4) => (&DB4, None),
        Wavelet::Daubechies(5) => (&DB5, None),
        Wavelet::Daubechies(6) => (&DB6, None),
        Wavelet::Daubechies(7) => (&DB7, None),
        Wavelet::Daubechies(8) => (&DB8, None),
        Wavelet::Daubechies(9) => (&DB9, None),
        Wavelet::Daubechies(10) => (&DB10, None),
        Wavelet::Daubechies(11) => (&DB11, None),
        Wavelet::Daubechies(12) => (&DB12, None),
        Wavelet::Daubechies(13) => (&DB13, None),
        Wavelet::Daubechies(14) => (&DB14, None),
        Wavelet::Daubechies(15) => (&DB15, None),
        Wavelet::Daubechies(16) => (&DB16, None),
        Wavelet::Daubechies(17) => (&DB17, None),
        Wavelet::Daubechies(18) => (&DB18, None),
        Wavelet::Daubechies(19) => (&DB19, None),
        Wavelet::Daubechies(20) => (&DB20, None),
        Wavelet::Daubechies(21) => (&DB21, None),
        Wavelet::Daubechies(22) => (&DB22, None),
        Wavelet::Daubechies(23) => (&DB23, None),
        Wavelet::Daubechies(24) => (&DB24, None),
        Wavelet::Daubechies(25) => (&DB25, None),
        Wavelet::Daubechies(26) => (&DB26, None),
        Wavelet::Daubechies(27) => (&DB27, None),
        Wavelet::Daubechies(28) => (&DB28, None),
        Wavelet::Daubechies(29) => (&DB29, None),
        Wavelet::Daubechies(30) => (&DB30, None),
        Wavelet::Daubechies(31) => (&DB31, None),
        Wavelet::Daubechies(32) => (&DB32, None),
        Wavelet::Daubechies(33) => (&DB33, None),
        Wavelet::Daubechies(34) => (&DB34, None),
        Wavelet::Daubechies(35) => (&DB35, None),
        Wavelet::Daubechies(36) => (&DB36, None),
        Wavelet::Daubechies(37) => (&DB37, None),
        Wavelet::Daubechies(38) => (&DB38, None),
        Wavelet::Symlets(2) => (&SYM2, None),
        Wavelet::Symlets(3) => (&SYM3, None),
        Wavelet::Symlets(4) => (&SYM4, None),
        Wavelet::Symlets(5) => (&SYM5, None),
        Wavelet::Symlets(6) => (&SYM6, None),
        Wavelet::Symlets(7) => (&SYM7, None),
        Wavelet::Symlets(8) => (&SYM8, None),
        Wavelet::Symlets(9) => (&SYM9, None),
        Wavelet::Symlets(10) => (&SYM10, None),
        Wavelet::Symlets(11) => (&SYM11, None),
        Wavelet::Symlets(12) => (&SYM12, None),
        Wavelet::Symlets(13) => (&SYM13, None),
        Wavelet::Symlets(14) => (&SYM14, None),
        Wavelet::Symlets(15) => (&SYM15, None),
        Wavelet::Symlets(16) => (&SYM16, None),
        Wavelet::Symlets(17) => (&SYM17, None),
        Wavelet::Symlets(18) => (&SYM18, None),
        Wavelet::Symlets(19) => (&SYM19, None),
        Wavelet::Symlets(20) => (&SYM20, None),
        Wavelet::Coiflets(1) => (&COIF1, None),
        Wavelet::Coiflets(2) => (&COIF2, None),
        Wavelet::Coiflets(3) => (&COIF3, None),
        Wavelet::Coiflets(4) => (&COIF4, None),
        Wavelet::Coiflets(5) => (&COIF5, None),
        Wavelet::Coiflets(6) => (&COIF6, None),
        Wavelet::Coiflets(7) => (&COIF7, None),
        Wavelet::Coiflets(8) => (&COIF8, None),
        Wavelet::Coiflets(9) => (&COIF9, None),
        Wavelet::Coiflets(10) => (&COIF10, None),
        Wavelet::Coiflets(11) => (&COIF11, None),
        Wavelet::Coiflets(12) => (&COIF12, None),
        Wavelet::Coiflets(13) => (&COIF13, None),
        Wavelet::Coiflets(14) => (&COIF14, None),
        Wavelet::Coiflets(15) => (&COIF15, None),
        Wavelet::Coiflets(16) => (&COIF16, None),
        Wavelet::Coiflets(17) => (&COIF17, None),
        Wavelet::Biorthogonal(1, 3) => (&BIOR1_3_DEC_LO, Some(&BIOR1_3_REC_LO[..])),
        Wavelet::Biorthogonal(2, 2) => (&BIOR2_2_DEC_LO, Some(&BIOR2_2_REC_LO[..])),
        Wavelet::Biorthogonal(2, 4) => (&BIOR2_4_DEC_LO, Some(&BIOR2_4_REC_LO[..])),
        Wavelet::Biorthogonal(3, 1) => (&BIOR3_1_DEC_LO, Some(&BIOR3_1_REC_LO[..])),
        Wavelet::Biorthogonal(3, 3) => (&BIOR3_3_DEC_LO, Some(&BIOR3_3_REC_LO[..])),
        Wavelet::Biorthogonal(4, 4) => (&BIOR4_4_DEC_LO, Some(&BIOR4_4_REC_LO[..])),
        Wavelet::Biorthogonal(5, 5) => (&BIOR5_5_DEC_LO, Some(&BIOR5_5_REC_LO[..])),
        Wavelet::Biorthogonal(6, 8) => (&BIOR6_8_DEC_LO, Some(&BIOR6_8_REC_LO[..])),
        other => return Err(WaveletError::UnsupportedWavelet(other.to_string())),
    };
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_banks_are_time_reversed_and_sum_to_sqrt2() {
        for w in Wavelet::all() {
            let bank = w.filter_bank().unwrap();
            let sum: f64 = bank.dec_lo.iter().sum();
            assert!((sum - std::f64::consts::SQRT_2).abs() < 1e-12, "{w}: lowpass sum {sum}");
            let rsum: f64 = bank.rec_lo.iter().sum();
            assert!((rsum - std::f64::consts::SQRT_2).abs() < 1e-12, "{w}: rec sum {rsum}");
            if w.family().is_orthogonal() {
                let rev: Vec<f64> = bank.dec_lo.iter().rev().copied().collect();
                assert_eq!(rev, bank.rec_lo, "{w}");
            }
        }
    }

    #[test]
    fn orthogonal_lowpass_is_orthonormal_to_even_shifts() {
        for w in Wavelet::all().into_iter().filter(|w| w.family().is_orthogonal()) {
            let h = w.filter_bank().unwrap().dec_lo;
            for shift in (0..h.len()).step_by(2) {
                let dot: f64 = h.iter().zip(&h[shift..]).map(|(a, b)| a * b).sum();
                let want = if shift == 0 { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-13, "{w} shift {shift}: {dot}");
            }
        }
    }

    #[test]
    fn highpass_has_zero_dc_gain() {
        for w in Wavelet::all() {
            let bank = w.filter_bank().unwrap();
            let dc: f64 = bank.dec_hi.iter().sum();
            assert!(dc.abs() < 1e-12, "{w}: {dc}");
        }
    }

    #[test]
    fn filter_lengths_match_the_family() {
        assert_eq!(Wavelet::Daubechies(4).filter_bank().unwrap().len(), 8);
        assert_eq!(Wavelet::Symlets(20).filter_bank().unwrap().len(), 40);
        assert_eq!(Wavelet::Coiflets(17).filter_bank().unwrap().len(), 102);
        assert_eq!(Wavelet::Biorthogonal(6, 8).filter_bank().unwrap().len(), 18);
    }
}
