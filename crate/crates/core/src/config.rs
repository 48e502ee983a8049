//! Run configuration: a TOML document with a default for every key,
//! dotted-path overrides and a content hash.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::balance::BalanceConfig;
use crate::data::{DatasetSpec, Splits, Tone};
use crate::eval::EvalSpace;
use crate::model::ModelConfig;
use crate::train::TrainConfig;
use crate::wavelet::{Wavelet, WaveletSpec};

/// Environment variable naming the default root for run directories.
pub const OUTPUT_ROOT_ENV: &str = "BEAT_OUTPUT_ROOT";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {message}")]
    Io { path: String, message: String },
    #[error("config is not valid TOML: {0}")]
    Syntax(String),
    #[error("config key `{key}`: {message}")]
    Key { key: String, message: String },
    #[error("override {0:?} is not of the form key=value")]
    Override(String),
}

impl ConfigError {
    fn key(key: &str, message: impl Into<String>) -> Self {
        ConfigError::Key {
            key: key.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DatasetKind {
    #[default]
    Csv,
    Synthetic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DatasetConfig {
    pub kind: DatasetKind,
    /// Benchmark names pin variate count and split sizes.
    pub name: String,
    pub path: Option<PathBuf>,
    /// Overrides the pinned or proportional splits.
    pub splits: Option<Splits>,
    pub tones: Vec<Tone>,
    pub noise: f64,
    pub length: usize,
    pub variates: usize,
}

impl Default for DatasetConfig {
    fn default() -> Self {
        Self {
            kind: DatasetKind::Csv,
            name: "ETTh1".into(),
            path: Some(PathBuf::from("data/ETTh1.csv")),
            splits: None,
            tones: Vec::new(),
            noise: 0.1,
            length: 4000,
            variates: 1,
        }
    }
}

impl DatasetConfig {
    /// Pinned shape for CSV loading. Explicit splits replace the pinned ones.
    pub fn spec(&self) -> DatasetSpec {
        let mut spec = DatasetSpec::known(&self.name).unwrap_or_else(|| DatasetSpec::custom(&self.name));
        spec.path = self.path.clone();
        if self.splits.is_some() {
            spec.splits = self.splits;
        }
        spec
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WaveletConfig {
    pub name: Wavelet,
    pub level: usize,
}

impl Default for WaveletConfig {
    fn default() -> Self {
        Self {
            name: Wavelet::Daubechies(2),
            level: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalConfig {
    pub space: EvalSpace,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub lookback: usize,
    pub horizon: usize,
    /// Root for run directories; falls back to `$BEAT_OUTPUT_ROOT`, then `runs`.
    pub output_dir: Option<PathBuf>,
    pub dataset: DatasetConfig,
    pub wavelet: WaveletConfig,
    pub model: ModelConfig,
    pub train: TrainConfig,
    pub balance: BalanceConfig,
    pub eval: EvalConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            lookback: 96,
            horizon: 96,
            output_dir: None,
            dataset: DatasetConfig::default(),
            wavelet: WaveletConfig::default(),
            model: ModelConfig::default(),
            train: TrainConfig::default(),
            balance: BalanceConfig::default(),
            eval: EvalConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path, overrides: &[String]) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_toml(&text, overrides)
    }

    /// Parses `text`, applies `key=value` overrides in order, fills defaults
    /// and validates.
    pub fn from_toml(text: &str, overrides: &[String]) -> Result<Self, ConfigError> {
        let mut table: toml::Table = text.parse().map_err(|e: toml::de::Error| ConfigError::Syntax(e.message().to_string()))?;
        for o in overrides {
            apply_override(&mut table, o)?;
        }
        let config: RunConfig = serde_path_to_error::deserialize(toml::Value::Table(table)).map_err(|e| {
            let key = e.path().to_string();
            ConfigError::key(&key, e.into_inner().to_string())
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.lookback == 0 {
            return Err(ConfigError::key("lookback", "must be positive"));
        }
        if self.horizon == 0 {
            return Err(ConfigError::key("horizon", "must be positive"));
        }
        let spec = self.wavelet_spec()?;
        for (key, len) in [("lookback", self.lookback), ("horizon", self.horizon)] {
            spec.check_length(len).map_err(|e| ConfigError::key(key, e.to_string()))?;
        }
        self.model.validate().map_err(|e| ConfigError::key("model", e.to_string()))?;
        self.train.validate().map_err(|e| ConfigError::key("train", e.to_string()))?;
        if !(self.balance.c_max >= 1.0) {
            return Err(ConfigError::key("balance.c_max", "must be at least 1"));
        }
        if !(0.0..1.0).contains(&self.balance.ema_decay) {
            return Err(ConfigError::key("balance.ema_decay", "must lie in [0, 1)"));
        }
        let d = &self.dataset;
        match d.kind {
            DatasetKind::Csv if d.path.is_none() => return Err(ConfigError::key("dataset.path", "required for csv datasets")),
            DatasetKind::Synthetic => {
                if d.length == 0 {
                    return Err(ConfigError::key("dataset.length", "must be positive"));
                }
                if d.variates == 0 {
                    return Err(ConfigError::key("dataset.variates", "must be positive"));
                }
                if !(d.noise >= 0.0) {
                    return Err(ConfigError::key("dataset.noise", "must be non-negative"));
                }
                if let Some(i) = d.tones.iter().position(|t| !(t.period >= 2.0)) {
                    return Err(ConfigError::key(&format!("dataset.tones[{i}].period"), "must be at least 2"));
                }
            }
            DatasetKind::Csv => {}
        }
        if let Some(s) = d.splits {
            if s.train == 0 || s.val == 0 || s.test == 0 {
                return Err(ConfigError::key("dataset.splits", "every split must be non-empty"));
            }
        }
        Ok(())
    }

    pub fn wavelet_spec(&self) -> Result<WaveletSpec, ConfigError> {
        WaveletSpec::new(self.wavelet.name, self.wavelet.level).map_err(|e| ConfigError::key("wavelet", e.to_string()))
    }

    /// The resolved document, defaults included.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("run config serializes")
    }

    /// First 16 hex digits of the SHA-256 of the resolved document.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.to_toml().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn output_root(&self) -> PathBuf {
        self.output_dir
            .clone()
            .or_else(|| std::env::var_os(OUTPUT_ROOT_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("runs"))
    }

    /// `<dataset>-<horizon>-<hash>` under the output root.
    pub fn run_dir(&self) -> PathBuf {
        self.output_root()
            .join(format!("{}-{}-{}", self.dataset.name, self.horizon, self.hash()))
    }
}

/// Sets `a.b.c = value` in `table`, creating intermediate tables. The value
/// is read as a TOML literal and falls back to a bare string.
pub fn apply_override(table: &mut toml::Table, assignment: &str) -> Result<(), ConfigError> {
    let (key, raw) = assignment
        .split_once('=')
        .ok_or_else(|| ConfigError::Override(assignment.into()))?;
    let key = key.trim();
    let raw = raw.trim();
    if key.is_empty() || key.split('.').any(str::is_empty) {
        return Err(ConfigError::Override(assignment.into()));
    }
    let value = format!("v = {raw}")
        .parse::<toml::Table>()
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(raw.into()));
    let mut parts: Vec<&str> = key.split('.').collect();
    let last = parts.pop().expect("non-empty key");
    let mut current = table;
    for (depth, part) in parts.iter().enumerate() {
        let entry = current
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        current = entry.as_table_mut().ok_or_else(|| {
            ConfigError::key(&parts[..=depth].join("."), "is not a table and cannot take nested keys")
        })?;
    }
    current.insert(last.into(), value);
    Ok(())
}
