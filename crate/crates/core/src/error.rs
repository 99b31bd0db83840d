use thiserror::Error;

/// Errors raised by classification, homological queries and the algebra oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("window must be positive")]
    InvalidWindow,

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("window exhausted: {0}")]
    WindowExhausted(String),

    #[error("weight with offset {0} is not in the block")]
    WeightNotInBlock(String),

    #[error("branch disagreement: {0}")]
    BranchDisagreement(String),

    /// The integer points do not fit any of the block shapes we know how to build.
    #[error("unclassifiable block: {0}")]
    Unclassifiable(String),

    #[error("operation requires {expected}, block is {found}")]
    WrongShape { expected: String, found: String },

    #[error("relations are unknown for this quiver")]
    RelationsUnknown,

    #[error("algebra dimension mismatch: expected {expected}, built {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("algebra did not terminate by degree {0}")]
    InfiniteDimensional(usize),
}

impl Error {
    /// Short machine-readable tag used on the CLI error stream.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::ParseRational(_) => "parse-error",
            Error::InvalidWindow => "invalid-window",
            Error::WindowTooSmall(_) => "window-too-small",
            Error::WindowExhausted(_) => "window-exhausted",
            Error::WeightNotInBlock(_) => "weight-not-in-block",
            Error::BranchDisagreement(_) => "branch-disagreement",
            Error::Unclassifiable(_) => "unclassifiable",
            Error::WrongShape { .. } => "wrong-shape",
            Error::RelationsUnknown => "relations-unknown",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::InfiniteDimensional(_) => "infinite-dimensional",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
