use thiserror::Error;

/// Errors produced while building or relating permutations and Dyck paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as an integer")]
    ParseInt(String),
    #[error("value {0} is zero; permutations are 1-indexed")]
    ZeroValue(usize),
    #[error("value {value} appears more than once")]
    DuplicateValue { value: usize },
    #[error("value {value} is out of range for a permutation of length {len}")]
    ValueOutOfRange { value: usize, len: usize },

    #[error("invalid step `{0}`; expected U or D")]
    InvalidStep(char),
    #[error("path goes below the x-axis at step {step}")]
    BelowAxis { step: usize },
    #[error("path is unbalanced: {ups} up steps, {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },

    #[error("malformed code literal `{0}`; expected `n=<N>;A=<a,..>;D=<d,..>`")]
    MalformedCode(String),
    #[error("ascent list has {ascents} entries but descent list has {descents}")]
    CodeLengthMismatch { ascents: usize, descents: usize },
    #[error("ascent code is not strictly increasing at entry {index}")]
    AscentsNotIncreasing { index: usize },
    #[error("descent code is not strictly increasing at entry {index}")]
    DescentsNotIncreasing { index: usize },
    #[error("code entry {value} lies outside 1..={max}")]
    CodeOutOfRange { value: usize, max: usize },
    #[error("A_{index} = {ascent} is smaller than D_{index} = {descent}")]
    AscentBelowDescent {
        index: usize,
        ascent: usize,
        descent: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("path {0} is reducible")]
    Reducible(String),
    #[error("pair is not admissible")]
    NotAdmissible,
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("size {n} exceeds the configured cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("unknown pattern `{0}`; expected 123 or 1234")]
    UnknownPattern(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
