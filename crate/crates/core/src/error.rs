use std::fmt;

use thiserror::Error;

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("letter `{0}` is not in the alphabet")]
    ForeignLetter(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),

    #[error("malformed grammar: {0}")]
    MalformedGrammar(String),

    #[error("{what} exceeded its limit of {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("selection language of pair {pair} is not finite")]
    NotFinite { pair: usize },

    #[error("decomposition of pair {pair} does not match its selection language: {detail}")]
    DecompositionMismatch { pair: usize, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
