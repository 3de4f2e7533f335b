use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlottError {
    /// Malformed input: duplicate symbols, masks wider than the ground set,
    /// repeated letters, broken partial-order axioms and the like.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The operation requires a path-independent choice function.
    #[error("choice function is not path independent")]
    NotPlott,

    /// The operation requires a choice function with at most one chosen element.
    #[error("choice function is not linear: it chooses {count} elements from some menu")]
    NotLinear { count: usize },

    /// Two arguments live on different ground sets.
    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),

    /// A ground set (or a derived one) would exceed the configured size cap.
    #[error("capacity exceeded: size {size} is over the cap of {cap}")]
    Capacity { size: usize, cap: usize },
}

impl PlottError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        PlottError::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, PlottError>;
