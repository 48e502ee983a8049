//! A small reverse-mode differentiation engine.
//!
//! Only what the branch networks need is here: dense affine maps,
//! element-wise activations, residual adds, block transposes, patch
//! extraction and a smooth-L1 loss. Every op has a hand-written backward
//! rule; the tape is rebuilt for every batch.

mod activation;
mod loss;
mod matrix;
mod param;
mod tape;

pub use activation::Activation;
pub use loss::{mse_loss, smooth_l1, smooth_l1_loss};
pub use matrix::Matrix;
pub use param::{ParamId, ParamStore, Parameter};
pub use tape::{Gradients, Tape, Var};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AutodiffError {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("backward called on an empty tape")]
    EmptyTape,
    #[error("duplicate parameter name {0:?}")]
    DuplicateParameter(String),
}
