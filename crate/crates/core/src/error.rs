use thiserror::Error;

/// Errors raised by the simulator, the optimizer and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("spin index {index} out of range for a {n_spins}-spin system (spins are numbered from 1)")]
    SpinIndex { index: usize, n_spins: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("deviation density matrix is not traceless (|tr| = {0:.3e})")]
    NotTraceless(f64),

    #[error("delay must be non-negative, got {0}")]
    NegativeDelay(f64),

    #[error("expected {expected} channel parameters, found {found}")]
    ChannelCount { expected: usize, found: usize },

    #[error("invalid spin system: {0}")]
    InvalidSystem(String),

    #[error("state has zero norm; the sequence annihilated the magnetization")]
    ZeroNorm,

    #[error("crusher gradients are not allowed in an operator (unitary) problem")]
    CrusherInOperatorProblem,

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid configuration field `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("solver failed: {0}")]
    Solver(String),

    #[error("sequence file schema violation: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
