use thiserror::Error;

use crate::rootsys::CartanType;

/// Errors reported by the library.
///
/// Construction errors name the violated constraint; resource errors carry
/// the configured cap so callers can distinguish "too big" from "wrong".
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for type {family}: {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different root systems ({0} vs {1})")]
    SystemMismatch(CartanType, CartanType),

    #[error("{0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),

    #[error("{0:?} is not a permutation pattern")]
    InvalidPattern(Vec<usize>),

    #[error("set is not biclosed: {0}")]
    NotBiclosed(String),

    #[error("element is not a minimal-length coset representative modulo the given parabolic")]
    NotMinimalCosetRep,

    #[error("expected a factorization w = v\u{b7}u, but the product does not match")]
    FactorizationMismatch,

    #[error("operation requires {0}")]
    Precondition(String),

    #[error("enumeration exceeds the configured cap of {cap} elements")]
    ResourceCap { cap: usize },

    #[error("smoothness is not decided for type {0}")]
    UnsupportedSmoothness(char),

    #[error("cannot parse element {input:?}: {reason}")]
    ElementParse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
