//! Crate-wide error type.

use std::path::PathBuf;

use crate::channels::ChannelKind;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit index {index} out of range for a {qubits}-qubit system")]
    QubitOutOfRange { index: usize, qubits: usize },

    #[error("invalid keep set: {reason}")]
    InvalidKeepSet { reason: String },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("not a valid density matrix: {reason}")]
    InvalidDensityMatrix { reason: String },

    #[error("analytic form expects {expected:?}, got {got:?}")]
    WrongChannelKind { expected: ChannelKind, got: ChannelKind },

    #[error("no closed form covers this point; use the numeric pipeline")]
    OracleUncovered,

    #[error("invalid config field `{field}`: {reason}")]
    Config { field: &'static str, reason: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
