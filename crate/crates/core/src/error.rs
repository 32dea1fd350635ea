//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("invariant violation ({rule}): {msg}")]
    Invariant { rule: &'static str, msg: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),

    #[error("omega weight encountered where a finite weight is required")]
    OmegaNotAllowed,

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("resource cap exceeded: {what} would need {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("strategy is not total: missing a choice at `{0}`")]
    PartialStrategy(String),

    #[error("missing priorities: vertex `{0}` carries no priority")]
    MissingPriority(String),

    #[error("internal soundness failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
