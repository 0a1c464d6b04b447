use thiserror::Error;

use crate::rational::Q;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// `line` is 1-based; 0 means the input has no line structure.
    #[error("{}", located(*line, message))]
    Parse { line: usize, message: String },

    #[error("graph is disconnected: vertex `{0}` is unreachable from `{1}`")]
    Disconnected(String, String),

    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),

    #[error("self-loop on `{0}` (self-adjacency is implicit)")]
    SelfLoop(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown walk `{0}`")]
    UnknownWalk(String),

    #[error("not a walk: positions {index} and {} are not adjacent", index + 1)]
    NotAWalk { index: usize },

    #[error("evaluation must vanish at base vertex `{vertex}`, found {value}")]
    NonZeroBase { vertex: String, value: Q },

    #[error("evaluation has no value for vertex `{0}`")]
    MissingValue(String),

    #[error("evaluation is constant; its Lipschitz norm is 0")]
    DegenerateEvaluation,

    #[error("Lipschitz constant {given} is below the required {required}")]
    BadConstant { given: Q, required: Q },

    #[error("alpha must lie in [0, 1], got {0}")]
    BadAlpha(Q),

    #[error("ratio must lie in (0, 1), got {0}")]
    BadRatio(Q),

    #[error("index sets are 1-based; got index 0")]
    ZeroIndex,

    #[error("inconsistent proximity at index {index}: the evaluation does not separate the walks there but P = {value}")]
    InconsistentProximity { index: usize, value: Q },

    #[error("negative proximity {value} at index {index}")]
    NegativeProximity { index: usize, value: Q },

    #[error("walks in the exploratory set must share start `{expected}`, found `{found}`")]
    MismatchedEndpoints { expected: String, found: String },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("weight bound {bound} is below the largest weight {max_weight}")]
    BoundTooSmall { bound: Q, max_weight: Q },

    #[error("no path of length at most {max_len} between `{from}` and `{to}`")]
    NoPathWithinLength { from: String, to: String, max_len: usize },

    #[error("domination violated for {label}: {lhs} > {rhs}")]
    DominationViolated { label: String, lhs: Q, rhs: Q },

    #[error("concavity witness check failed: {lhs} > {rhs}")]
    WitnessCheckFailed { lhs: Q, rhs: Q },

    #[error("malformed model: {0}")]
    Model(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("invalid argument: {0}")]
    Argument(String),
}

fn located(line: usize, message: &str) -> String {
    match line {
        0 => message.to_owned(),
        n => format!("line {n}: {message}"),
    }
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    /// Lookup failures (unknown names) are distinguished from malformed input.
    pub fn is_lookup(&self) -> bool {
        matches!(self, Error::UnknownVertex(_) | Error::UnknownWalk(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
