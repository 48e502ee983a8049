//! Frequency-balanced training for wavelet-decomposed forecasters.
//!
//! A lookback window is instance-normalized, split into wavelet bands,
//! forecast band-by-band by independent branch networks and reconstructed.
//! During training a per-band monitor compares predicted and true future
//! coefficients and rescales each branch's gradients so that slow bands
//! catch up with fast ones.

// `!(x >= y)` guards deliberately treat NaN as failing
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod autodiff;
pub mod balance;
pub mod checkpoint;
pub mod config;
pub mod data;
pub mod eval;
pub mod model;
pub mod norm;
pub mod run;
pub mod tensor;
pub mod train;
pub mod wavelet;

pub use tensor::SeriesTensor;
