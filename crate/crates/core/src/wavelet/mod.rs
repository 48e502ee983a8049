//! Periodized multi-level discrete wavelet transform.
//!
//! Four families are supported (Daubechies, Symlets, Coiflets and the
//! common biorthogonal pairs). Decomposition runs along the time axis of
//! every `(batch, variate)` series independently. Odd-length inputs are
//! padded with their last sample before each halving, so a level-`k`
//! series has `ceil(L_{k-1} / 2)` coefficients and the original lengths
//! are kept for exact inversion.

mod filters;
mod tables;
mod transform;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use filters::FilterBank;
pub use transform::{
    dwt_multilevel, dwt_multilevel_backward, idwt_multilevel, idwt_multilevel_backward,
    level_lengths, CoefficientSet,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WaveletError {
    #[error("signal of length {len} is too short for a level-{level} decomposition (need at least {min})")]
    SignalTooShort { len: usize, level: usize, min: usize },
    #[error("unsupported wavelet {0}")]
    UnsupportedWavelet(String),
    #[error("decomposition level must be at least 1")]
    InvalidLevel,
    #[error("coefficient length mismatch: {0}")]
    LengthMismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WaveletFamily {
    Daubechies,
    Symlets,
    Coiflets,
    Biorthogonal,
}

impl WaveletFamily {
    pub fn short_name(self) -> &'static str {
        match self {
            WaveletFamily::Daubechies => "db",
            WaveletFamily::Symlets => "sym",
            WaveletFamily::Coiflets => "coif",
            WaveletFamily::Biorthogonal => "bior",
        }
    }

    /// Whether synthesis filters are the time reverse of analysis filters.
    pub fn is_orthogonal(self) -> bool {
        !matches!(self, WaveletFamily::Biorthogonal)
    }
}

/// Biorthogonal pairs available in [`Wavelet::Biorthogonal`].
pub const BIORTHOGONAL_PAIRS: [(u8, u8); 8] = [
    (1, 3),
    (2, 2),
    (2, 4),
    (3, 1),
    (3, 3),
    (4, 4),
    (5, 5),
    (6, 8),
];

/// A concrete wavelet: family plus order.
///
/// Displayed and parsed with the usual short names (`db4`, `sym8`,
/// `coif2`, `bior2.2`, and `haar` for `db1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wavelet {
    Daubechies(u8),
    Symlets(u8),
    Coiflets(u8),
    Biorthogonal(u8, u8),
}

impl Wavelet {
    pub const HAAR: Wavelet = Wavelet::Daubechies(1);

    pub fn family(self) -> WaveletFamily {
        match self {
            Wavelet::Daubechies(_) => WaveletFamily::Daubechies,
            Wavelet::Symlets(_) => WaveletFamily::Symlets,
            Wavelet::Coiflets(_) => WaveletFamily::Coiflets,
            Wavelet::Biorthogonal(..) => WaveletFamily::Biorthogonal,
        }
    }

    pub fn validate(self) -> Result<(), WaveletError> {
        let ok = match self {
            Wavelet::Daubechies(p) => (1..=38).contains(&p),
            Wavelet::Symlets(p) => (2..=20).contains(&p),
            Wavelet::Coiflets(p) => (1..=17).contains(&p),
            Wavelet::Biorthogonal(r, d) => BIORTHOGONAL_PAIRS.contains(&(r, d)),
        };
        if ok {
            Ok(())
        } else {
            Err(WaveletError::UnsupportedWavelet(self.to_string()))
        }
    }

    pub fn filter_bank(self) -> Result<FilterBank, WaveletError> {
        self.validate()?;
        FilterBank::for_wavelet(self)
    }

    /// Every wavelet this crate can build, in family order.
    pub fn all() -> Vec<Wavelet> {
        let mut out: Vec<Wavelet> = (1..=38).map(Wavelet::Daubechies).collect();
        out.extend((2..=20).map(Wavelet::Symlets));
        out.extend((1..=17).map(Wavelet::Coiflets));
        out.extend(BIORTHOGONAL_PAIRS.iter().map(|&(r, d)| Wavelet::Biorthogonal(r, d)));
        out
    }
}

impl fmt::Display for Wavelet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Wavelet::Daubechies(p) => write!(f, "db{p}"),
            Wavelet::Symlets(p) => write!(f, "sym{p}"),
            Wavelet::Coiflets(p) => write!(f, "coif{p}"),
            Wavelet::Biorthogonal(r, d) => write!(f, "bior{r}.{d}"),
        }
    }
}

impl FromStr for Wavelet {
    type Err = WaveletError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let unsupported = || WaveletError::UnsupportedWavelet(s.to_string());
        let parse_order = |digits: &str| digits.parse::<u8>().map_err(|_| unsupported());
        let wavelet = if lower == "haar" {
            Wavelet::HAAR
        } else if let Some(rest) = lower.strip_prefix("bior") {
            let (r, d) = rest.split_once('.').ok_or_else(unsupported)?;
            Wavelet::Biorthogonal(parse_order(r)?, parse_order(d)?)
        } else if let Some(rest) = lower.strip_prefix("db") {
            Wavelet::Daubechies(parse_order(rest)?)
        } else if let Some(rest) = lower.strip_prefix("sym") {
            Wavelet::Symlets(parse_order(rest)?)
        } else if let Some(rest) = lower.strip_prefix("coif") {
            Wavelet::Coiflets(parse_order(rest)?)
        } else {
            return Err(unsupported());
        };
        wavelet.validate()?;
        Ok(wavelet)
    }
}

impl Serialize for Wavelet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Wavelet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Boundary handling. Only periodization is implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    #[default]
    Periodized,
}

/// Wavelet, decomposition depth and boundary mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WaveletSpec {
    pub wavelet: Wavelet,
    pub level: usize,
    pub boundary: BoundaryMode,
}

impl WaveletSpec {
    pub fn new(wavelet: Wavelet, level: usize) -> Result<Self, WaveletError> {
        wavelet.validate()?;
        if level == 0 {
            return Err(WaveletError::InvalidLevel);
        }
        Ok(Self {
            wavelet,
            level,
            boundary: BoundaryMode::Periodized,
        })
    }

    pub fn haar(level: usize) -> Self {
        Self::new(Wavelet::HAAR, level).expect("haar is always valid")
    }

    pub fn family(&self) -> WaveletFamily {
        self.wavelet.family()
    }

    /// Shortest series a level-`f` decomposition accepts: `2^f`.
    pub fn min_length(&self) -> usize {
        1usize << self.level
    }

    /// Number of frequency bands (`f` details plus the approximation).
    pub fn band_count(&self) -> usize {
        self.level + 1
    }

    pub fn check_length(&self, len: usize) -> Result<(), WaveletError> {
        let min = self.min_length();
        // odd lengths are padded by one sample before the first halving
        if len + len % 2 < min {
            return Err(WaveletError::SignalTooShort {
                len,
                level: self.level,
                min,
            });
        }
        Ok(())
    }
}
