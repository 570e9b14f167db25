use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {found} is outside the supported range {min}..={max}")]
    UnsupportedDimension { found: usize, min: usize, max: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("fan is not completely unbalanced")]
    NotCompletelyUnbalanced,

    #[error("signed fan is reducible")]
    Reducible,

    #[error("not a fan: {0}")]
    NotAFan(String),

    #[error("fans are not in general position: {0}")]
    NotGeneric(String),

    #[error("{count} rays exceed the enumeration limit of {limit}")]
    TooManyRays { count: usize, limit: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable identifier, used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::UnsupportedDimension { .. } => "unsupported_dimension",
            Error::Parse { .. } => "parse",
            Error::NotCompletelyUnbalanced => "not_completely_unbalanced",
            Error::Reducible => "reducible",
            Error::NotAFan(_) => "not_a_fan",
            Error::NotGeneric(_) => "not_generic",
            Error::TooManyRays { .. } => "too_many_rays",
            Error::Invalid(_) => "invalid",
            Error::Json(_) => "json",
        }
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
