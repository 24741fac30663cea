use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value {0}")]
    NonFinite(String),

    #[error("lp exponent must lie in [1, inf], got {0}")]
    InvalidExponent(f64),

    #[error("hexagon generators are (nearly) linearly dependent: |det(p, q)| = {0:e}")]
    DegenerateHexagon(f64),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse { what: &'static str, input: String, reason: String },

    #[error("{0} must be a nonzero vector")]
    ZeroVector(&'static str),

    #[error("parameter {name} = {value} is out of range ({expected})")]
    OutOfRange { name: &'static str, value: f64, expected: &'static str },

    #[error("invalid search options: {0}")]
    InvalidOptions(String),

    #[error("numerical search failed: {0}")]
    SearchFailed(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { what, input: input.to_string(), reason: reason.into() }
    }

    /// True for errors that come from the numerical search rather than from bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::SearchFailed(_))
    }
}
