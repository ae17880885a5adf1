use thiserror::Error;

use crate::elimination::TfsaVerdict;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Line-oriented parse failure in an alphabet file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("loop edge on `{0}` (independence must be antireflexive)")]
    LoopEdge(String),

    #[error("invalid letter name `{0}`")]
    InvalidLetterName(String),

    #[error("cannot read `{0}` as a word over this alphabet")]
    BadWord(String),

    #[error("`{0}` splits into letters in more than one way")]
    AmbiguousWord(String),

    #[error("operands belong to different alphabets")]
    AlphabetMismatch,

    #[error("the empty trace is not allowed here")]
    EmptyTrace,

    #[error("subset must leave at least one letter outside it")]
    EmptyComplement,

    #[error("`{0}` is not in the eliminated part's complement")]
    NotInComplement(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subset is not transitively factorizing")]
    NotTfsa(TfsaVerdict),

    #[error("`{0}` is not a generator of the current level")]
    NotAGenerator(String),

    #[error("level index {index} out of range (factorization has {len} levels)")]
    LevelOutOfRange { index: usize, len: usize },

    #[error("no decomposition of `{0}` within the length bound")]
    NoDecomposition(String),

    #[error("plan is incomplete at degree {0}")]
    IncompletePlan(usize),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
