use thiserror::Error;

/// Errors raised by matroid construction, queries and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("pivot entry ({row}, {col}) is zero")]
    ZeroPivot { row: usize, col: usize },

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("capacity exceeded: {what} has {actual} elements, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("case {case}: {source}")]
    Case {
        case: String,
        #[source]
        source: Box<MatroidError>,
    },
}

impl MatroidError {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        MatroidError::Input(msg.into())
    }

    pub(crate) fn in_case(self, case: &str) -> Self {
        MatroidError::Case {
            case: case.to_string(),
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = MatroidError> = std::result::Result<T, E>;
