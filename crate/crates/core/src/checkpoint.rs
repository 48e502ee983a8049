//! Versioned binary checkpoints.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! b"BEATCKPT" | u32 version | u64 config length | resolved config (TOML, UTF-8)
//! | u32 variates | u32 parameter count
//! | per parameter: u32 name length | name | u32 ndim | u64 dims.. | f64 values..
//! ```
//!
//! The config snapshot rebuilds the architecture; stored values then replace
//! the initial parameters by name.

use std::io::{Read, Write};
use std::path::Path;

use crate::config::{ConfigError, RunConfig};
use crate::model::{ForecastModel, ModelError};

pub const MAGIC: &[u8; 8] = b"BEATCKPT";
pub const VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CheckpointError {
    #[error("checkpoint i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a checkpoint file (bad magic)")]
    BadMagic,
    #[error("unsupported checkpoint version {0}")]
    Version(u32),
    #[error("corrupt checkpoint: {0}")]
    Corrupt(String),
    #[error("checkpoint does not match its config: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

pub fn save(path: &Path, config: &RunConfig, model: &ForecastModel) -> Result<(), CheckpointError> {
    let mut out = Vec::new();
    write_to(&mut out, config, model)?;
    std::fs::write(path, out)?;
    Ok(())
}

pub fn write_to<W: Write>(w: &mut W, config: &RunConfig, model: &ForecastModel) -> Result<(), CheckpointError> {
    let text = config.to_toml();
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(text.len() as u64).to_le_bytes())?;
    w.write_all(text.as_bytes())?;
    w.write_all(&(model.variates() as u32).to_le_bytes())?;
    let params: Vec<_> = model.param_stores().flat_map(|s| s.iter()).collect();
    w.write_all(&(params.len() as u32).to_le_bytes())?;
    for p in params {
        w.write_all(&(p.name().len() as u32).to_le_bytes())?;
        w.write_all(p.name().as_bytes())?;
        w.write_all(&(p.shape().len() as u32).to_le_bytes())?;
        for &d in p.shape() {
            w.write_all(&(d as u64).to_le_bytes())?;
        }
        for v in &p.values {
            w.write_all(&v.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn load(path: &Path) -> Result<(RunConfig, ForecastModel), CheckpointError> {
    let bytes = std::fs::read(path)?;
    read_from(&mut bytes.as_slice())
}

pub fn read_from<R: Read>(r: &mut R) -> Result<(RunConfig, ForecastModel), CheckpointError> {
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(CheckpointError::BadMagic);
    }
    let version = read_u32(r)?;
    if version != VERSION {
        return Err(CheckpointError::Version(version));
    }
    let len = read_len(read_u64(r)?)?;
    let mut text = vec![0u8; len];
    r.read_exact(&mut text)?;
    let text = String::from_utf8(text).map_err(|_| CheckpointError::Corrupt("config is not UTF-8".into()))?;
    let config = RunConfig::from_toml(&text, &[])?;
    let variates = read_u32(r)? as usize;
    let mut model = ForecastModel::new(
        config.wavelet_spec()?,
        config.lookback,
        config.horizon,
        variates,
        config.model.clone(),
        config.seed,
    )?;
    let count = read_u32(r)? as usize;
    let expected: usize = model.param_stores().map(|s| s.len()).sum();
    if count != expected {
        return Err(CheckpointError::Mismatch(format!("{count} parameters stored, model has {expected}")));
    }
    for _ in 0..count {
        let name_len = read_len(read_u32(r)? as u64)?;
        let mut name = vec![0u8; name_len];
        r.read_exact(&mut name)?;
        let name = String::from_utf8(name).map_err(|_| CheckpointError::Corrupt("parameter name is not UTF-8".into()))?;
        let ndim = read_u32(r)? as usize;
        let shape = (0..ndim).map(|_| read_u64(r).map(|d| d as usize)).collect::<Result<Vec<_>, _>>()?;
        let param = model
            .param_stores_mut()
            .find_map(|s| s.by_name_mut(&name))
            .ok_or_else(|| CheckpointError::Mismatch(format!("unknown parameter {name:?}")))?;
        if param.shape() != shape.as_slice() {
            return Err(CheckpointError::Mismatch(format!(
                "{name}: stored shape {shape:?}, model shape {:?}",
                param.shape()
            )));
        }
        for v in param.values.iter_mut() {
            let mut b = [0u8; 8];
            r.read_exact(&mut b)?;
            *v = f64::from_le_bytes(b);
        }
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(CheckpointError::Corrupt("trailing bytes".into()));
    }
    Ok((config, model))
}

fn read_u32<R: Read>(r: &mut R) -> std::io::Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R) -> std::io::Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

// guards allocations against corrupt length fields
fn read_len(len: u64) -> Result<usize, CheckpointError> {
    if len > 1 << 30 {
        return Err(CheckpointError::Corrupt(format!("length field {len} is implausible")));
    }
    Ok(len as usize)
}
