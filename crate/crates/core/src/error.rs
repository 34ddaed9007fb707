use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),
    #[error("letter {position}: zero does not name a generator")]
    ZeroLetter { position: usize },
    #[error("letter {position}: generator index {index} out of range 1..={max}")]
    IndexOutOfRange {
        position: usize,
        index: u32,
        max: usize,
    },
    #[error("token {position} ({token:?}) is not a signed integer")]
    BadToken { position: usize, token: String },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("strand {strand} out of range 1..={strands}")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("free word: {0}")]
    FreeWord(String),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
