use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),

    /// A configured size or count cap would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// The operation requires a structural property the input lacks.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    /// The SDP solver stopped before reaching the requested tolerance.
    #[error("numerical error: {message} (best bounds [{lower}, {upper}])")]
    Numerical {
        message: String,
        lower: f64,
        upper: f64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Input(format!("json: {err}"))
    }
}
