/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its legal range (e.g. a switch probability
    /// above 1, or a Lévy exponent outside `(1, 2]`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The inputs are structurally valid but lie outside the mathematical
    /// domain of the operation (e.g. a disc brake with outer radius not
    /// exceeding the inner radius).
    #[error("domain error: {0}")]
    Domain(String),

    /// A front metric was asked to compare empty fronts.
    #[error("empty front: {0}")]
    EmptyFront(String),

    /// A problem name did not match any known benchmark.
    #[error("unknown problem: {0:?}")]
    UnknownProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
