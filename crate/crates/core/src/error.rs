use thiserror::Error;

/// Errors reported by graph construction, solvers, and the synonym pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: f64 },
    #[error("line {line}: weight is not finite")]
    NonFiniteWeight { line: usize },
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("structure graph is not regular")]
    NotRegular,
    #[error("product of {n_a} and {n_b} vertices overflows the index range")]
    SizeOverflow { n_a: usize, n_b: usize },
    #[error("matrix is not symmetric")]
    Asymmetric,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("tolerance {0} out of range; must lie in (0, 1)")]
    InvalidTolerance(f64),
    #[error("unknown word: {0:?}")]
    UnknownWord(String),
    #[error("dictionary has no headwords")]
    EmptyDictionary,
}

pub type Result<T> = std::result::Result<T, Error>;
