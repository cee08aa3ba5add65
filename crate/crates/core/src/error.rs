use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group file: {0}")]
    GroupFile(String),
    #[error("not of finite type: {0}")]
    NotFiniteType(String),
    #[error("cap exceeded: {what} would exceed {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("parse: {0}")]
    Parse(String),
    #[error("element of infinite or trivial order has no torsion class")]
    NotTorsion,
    #[error("no directed path from {from} to {to}")]
    NotConnected { from: String, to: String },
    #[error("vertices do not span a simplex")]
    NotASimplex,
    #[error("empty input")]
    EmptyInput,
    #[error("invalid itinerary: {0}")]
    InvalidItinerary(String),
}

impl Error {
    /// Short stable identifier used in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GroupFile(_) => "GroupFile",
            Error::NotFiniteType(_) => "NotFiniteType",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Parse(_) => "Parse",
            Error::NotTorsion => "NotTorsion",
            Error::NotConnected { .. } => "NotConnected",
            Error::NotASimplex => "NotASimplex",
            Error::EmptyInput => "EmptyInput",
            Error::InvalidItinerary(_) => "InvalidItinerary",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
