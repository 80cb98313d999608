use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ballot or axis references candidate {0}, which the axis does not contain")]
    CandidateMismatch(usize),

    #[error("axes are over different candidate sets ({left} vs {right} candidates)")]
    AxisSizeMismatch { left: usize, right: usize },

    #[error("{m} candidates exceeds the enumeration bound of {bound}")]
    SizeLimit { m: usize, bound: usize },

    #[error("profile has no candidates")]
    EmptyProfile,

    #[error("ballots must approve at least one candidate")]
    EmptyBallot,

    #[error("at most {max} candidates are supported, got {got}")]
    TooManyCandidates { got: usize, max: usize },

    #[error("candidate name `{0}` is declared twice")]
    DuplicateCandidate(String),

    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),

    #[error("not a permutation of the candidates: {0}")]
    InvalidAxis(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("rule {rule} is not supported by {operation}")]
    RuleUnsupported { rule: String, operation: &'static str },

    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed axiom instance: {0}")]
    MalformedInstance(String),

    #[error("weighted cost does not fit in 64 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
