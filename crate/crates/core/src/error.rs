use thiserror::Error;

/// Everything that can go wrong while parsing inputs or running a check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },

    #[error("line {line}: unknown arrow `{name}`")]
    UnknownArrow { line: usize, name: String },

    #[error("line {line}: duplicate identifier `{name}`")]
    DuplicateId { line: usize, name: String },

    #[error("line {line}: relation `{relation}` is not a composable path")]
    NonComposable { line: usize, relation: String },

    #[error("declared signs violate condition ({condition}) at arrows {first} and {second}")]
    SignConflict {
        condition: char,
        first: String,
        second: String,
    },

    #[error("sign constraints are infeasible: {}", cycle.join(", "))]
    SignsInfeasible { cycle: Vec<String> },

    #[error("presentation is not a string algebra: {0}")]
    NotStringAlgebra(String),

    #[error("invalid string: {0}")]
    InvalidString(String),

    #[error("concatenation undefined: {0}")]
    UndefinedConcat(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid automaton: {0}")]
    InvalidMia(String),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for the cap-exceeded class, which the command line reports separately.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
