use thiserror::Error;

/// Errors produced by the combinatorial and linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: offending token {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid link pattern: {0}")]
    InvalidPattern(String),

    #[error("{what}: size {n} exceeds bound {bound}")]
    SizeBound {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("block index {index} out of range for {blocks} blocks")]
    BlockIndex { index: usize, blocks: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::SizeBound { what, n, bound })
    } else {
        Ok(())
    }
}
