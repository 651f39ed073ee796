use alloc::string::String;

/// Errors produced by the core computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A numeric or family parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// The input graph does not have the required structure (e.g. it is disconnected).
    #[error("structural error: {0}")]
    Structure(String),
    /// A four-way partition violates one of the admissibility conditions.
    #[error("inadmissible partition: condition ({condition}) violated: {detail}")]
    Inadmissible { condition: char, detail: String },
    /// A closed form was evaluated outside its real domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The matrix symmetry is not supported by the requested operation.
    #[error("unsupported matrix: {0}")]
    Unsupported(String),
    /// Non-finite or otherwise unusable numeric input.
    #[error("invalid input: {0}")]
    Input(String),
    /// An iterative method failed to reach its tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub(crate) fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}
