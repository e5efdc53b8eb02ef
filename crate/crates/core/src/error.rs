use thiserror::Error;

/// Errors raised by constructors, parsers and operations whose
/// preconditions are not met.
///
/// Axiom violations are not errors: they are reported through
/// [`crate::algebra::ValidationReport`] and the verification reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("zero and one must be distinct elements")]
    ZeroEqualsOne,
    #[error("algebra has no elements")]
    EmptyCarrier,
    #[error("map `{name}` is not total: no image for `{element}`")]
    PartialMap { name: String, element: String },
    #[error("map has {found} entries, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
    },
    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("value {0} lies outside [0,1]")]
    OutOfUnitInterval(String),
    #[error("{0} is not a dyadic rational in (0,1)")]
    NotDyadic(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("{path}: {source}")]
    File { path: String, source: Box<Error> },
    #[error("{}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))]
    Multiple(Vec<Error>),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
