use thiserror::Error;

/// Errors reported by braid constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least {min}, got {got}")]
    InvalidStrandCount { got: usize, min: usize },

    #[error("letter {letter} at position {position} is out of range for {strands} strands (want 1 <= |letter| <= {})", strands - 1)]
    InvalidLetter {
        letter: i64,
        position: usize,
        strands: usize,
    },

    #[error("strand counts differ: {left} vs {right}")]
    Mismatch { left: usize, right: usize },

    #[error("strand index {index} out of range 1..={strands}")]
    InvalidIndex { index: usize, strands: usize },

    #[error("strand {index} is not fixed by the permutation of the braid")]
    NotFixedStrand { index: usize },

    #[error("circular plat closure needs an even strand count, got {0}")]
    OddStrands(usize),

    #[error("braid is not pure")]
    NotPure,

    #[error("need at least {min} strands, got {got}")]
    TooFewStrands { got: usize, min: usize },

    #[error("subset criterion refused for {strands} strands (cap {cap}); use the even-power test")]
    SubsetBlowup { strands: usize, cap: usize },

    #[error("certificates cannot be combined: {0}")]
    IncompatibleCertificates(String),

    #[error("increasing-in-the-middle braids need an odd strand count, got {0}")]
    NotOddStrands(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid base braid: {0}")]
    InvalidBase(String),

    #[error("parse error at {at}: {message}")]
    Parse { at: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
