use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mixed polynomial indeterminates: {0} and {1}")]
    MixedIndeterminates(&'static str, &'static str),

    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),

    #[error("letter {letter} does not belong to alphabet {alphabet}")]
    ForeignLetter { letter: String, alphabet: String },

    #[error("operation requires nonempty words")]
    EmptyWord,

    #[error("series depth {have} is too small for words of length {need}")]
    InsufficientDepth { need: usize, have: usize },

    #[error("composition sums to {parts} but word has length {len}")]
    CompositionMismatch { parts: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inadmissible index {0}")]
    Inadmissible(String),

    #[error("zero stream has {have} entries, {need} required")]
    ZeroStreamTooShort { need: usize, have: usize },

    #[error("invalid zero stream: {0}")]
    InvalidZeroStream(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
