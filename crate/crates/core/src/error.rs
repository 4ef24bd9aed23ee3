use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partial order: {0}")]
    NotAPoset(String),

    #[error("not a lattice: {kind} of {x} and {y} does not exist")]
    NotALattice {
        kind: &'static str,
        x: String,
        y: String,
    },

    #[error("bad orthocomplementation: {0}")]
    BadOrtho(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("malformed lattice spec: {0}")]
    Spec(String),

    #[error("parameter {param} out of range for {kind} (allowed {allowed})")]
    ParamTooLarge {
        kind: &'static str,
        param: usize,
        allowed: String,
    },

    #[error("lattice has {size} elements, limit is {limit}")]
    LatticeTooLarge { size: usize, limit: usize },

    #[error("product carrier would have {projected} elements, limit is {limit}")]
    CarrierTooLarge { projected: u128, limit: usize },

    #[error("not an antichain: {0} and {1} are comparable")]
    InvalidAntichain(String, String),

    #[error("not a down-set: {0}")]
    NotADownSet(String),

    #[error("expansion of {size} terms exceeds limit {limit}")]
    ExpansionTooLarge { size: u128, limit: u64 },

    #[error("universal logic exceeded {limit} elements (reached {reached})")]
    UniversalTooLarge { reached: usize, limit: usize },

    #[error("element {0} is not in the carrier")]
    NotInCarrier(String),

    #[error("isomorphism check failed: {0}")]
    IsoFailure(String),

    #[error("ground model has {points} points, limit is {limit}")]
    GroundTooLarge { points: u128, limit: usize },

    #[error("mismatched inputs: {0}")]
    MismatchedInputs(String),

    #[error("target pair invariant failed: {0}")]
    TargetInvariantFailure(String),

    #[error("lattices `{0}` and `{1}` are not isomorphic")]
    NotIsomorphic(String, String),

    #[error("syntax error at {line}:{col}: expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },

    #[error("tuple arity {found} does not match product arity {expected}")]
    Arity { expected: usize, found: usize },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Errors that reflect bad input or exceeded limits rather than a failed law.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::IsoFailure(_) | Error::TargetInvariantFailure(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Spec(e.to_string())
    }
}
