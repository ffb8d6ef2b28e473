use thiserror::Error;

/// Errors surfaced by the library. Everything here is a caller mistake or a
/// configured resource cap; internal invariant violations panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {family:?} rank {rank}")]
    GeneratorOutOfRange {
        family: crate::weyl::Family,
        index: usize,
        rank: usize,
    },

    #[error("rank mismatch: left has rank {left}, right has rank {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("family mismatch: left is {left:?}, right is {right:?}")]
    FamilyMismatch {
        left: crate::weyl::Family,
        right: crate::weyl::Family,
    },

    #[error("invalid composition {0}")]
    InvalidComposition(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("tableau is not row-standard: {0}")]
    NotRowStandard(String),

    #[error("map variant {variant} is not a bijection onto D_J for shape {shape}: {reason}")]
    VariantNotBijective {
        variant: String,
        shape: String,
        reason: String,
    },

    #[error("parabolic subset J = {j:?} out of range for rank {rank}")]
    InvalidParabolic { j: Vec<usize>, rank: usize },

    #[error("{what} size {size} exceeds cap {cap} (raise {env_var} to override)")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
        env_var: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
