use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("query sequence is empty")]
    EmptyQuery,

    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    SymbolOutOfAlphabet { symbol: char, position: usize },

    #[error("position {position} is outside the striped range of {len} cells")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("profile was built for a different {0}")]
    ProfileMismatch(&'static str),

    #[error("invalid scoring scheme: {0}")]
    InvalidScoring(String),

    #[error("unsupported lane count {0} (expected one of 2, 4, 8, 16, 32, 64)")]
    InvalidLanes(usize),

    #[error("malformed FASTA at line {line}: {reason}")]
    MalformedFasta { line: usize, reason: String },

    #[error("malformed substitution matrix at line {line}: {reason}")]
    MalformedMatrix { line: usize, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
