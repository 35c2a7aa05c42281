use thiserror::Error;

/// Errors raised when an operation's precondition does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {value} at position {position} is outside [1, {len}]")]
    NotEndofunction {
        position: usize,
        value: u32,
        len: usize,
    },
    #[error("word is not a permutation")]
    NotPermutation,
    #[error("word is not a Cayley permutation")]
    NotCayley,
    #[error("word is not an inversion sequence")]
    NotInversion,
    #[error("word is not a {d}-ascent sequence")]
    NotDAscent { d: usize },
    #[error("word is not a modified inversion sequence")]
    NotModinv,
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("site label {label} exceeds the {sites} active sites")]
    SiteOutOfRange { label: u32, sites: usize },
    #[error("permutation is not {d}-Fishburn")]
    NotFishburn { d: usize },
    #[error("operation needs a nonempty input")]
    Empty,
    #[error("invalid Burge tableau: {0}")]
    InvalidTableau(&'static str),
    #[error("permutation contains the pattern 213")]
    Contains213,
    #[error("invalid Dyck path")]
    InvalidDyckPath,
    #[error("label ({0}, {1}) is not valid for this rule")]
    InvalidLabel(u32, u32),
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("cannot parse {0:?}")]
    Parse(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;
