use thiserror::Error;

/// Errors raised by transform evaluation, quadrature and the collocation solver.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the domain of the operation (λ = 0 where excluded, |x| > 1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A result or intermediate exceeded the double-precision range.
    #[error("range error: {0}")]
    Range(String),

    /// An adaptive procedure failed to reach its accuracy target.
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// The collocation system has a zero row or column.
    #[error("degenerate system: {0}")]
    Degenerate(String),

    #[error("cannot parse complex literal {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
