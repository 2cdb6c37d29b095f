use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A positioned diagnostic produced by the DSL parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constraint {name}: table has {found} rows, arity {arity} needs {expected}")]
    TableLength {
        name: String,
        arity: usize,
        expected: usize,
        found: usize,
    },
    #[error("constraint {0}: arity must be at least 1")]
    ZeroArity(String),
    #[error("constraint {name}: arity {arity} exceeds the supported maximum of {max}")]
    ArityTooLarge {
        name: String,
        arity: usize,
        max: usize,
    },
    #[error("{constraint} expects {expected} arguments, got {found}")]
    ArgumentCount {
        constraint: String,
        expected: usize,
        found: usize,
    },
    #[error("variable {0} is not bound by the assignment")]
    UnboundVariable(String),
    #[error("variable {0} occurs in the matrix but not in the prefix")]
    FreeVariable(String),
    #[error("variable {0} is quantified more than once")]
    DuplicateVariable(String),
    #[error("quantifier block {0} is empty")]
    EmptyBlock(usize),
    #[error("quantifier block {0} uses the same quantifier as the next block")]
    NonAlternatingBlocks(usize),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("evaluation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("prefix shape {shape} does not fit level {level}")]
    ShapeMismatch { shape: String, level: usize },
    #[error("constraint set is empty")]
    EmptyConstraintSet,
    #[error("constraint {constraint} is not {class}")]
    ClassViolated { constraint: String, class: String },
    #[error("arity {arity} exceeds the normal-form synthesis limit of {limit}")]
    SynthesisLimit { arity: usize, limit: usize },
    #[error("innermost quantifier block is not existential")]
    InnermostNotExistential,
    #[error("invalid implementation of {0}")]
    InvalidImplementation(String),
    #[error("unary constraint {0} is neither the identity nor negation")]
    ForeignUnary(String),
    #[error("row {row} does not satisfy {constraint}")]
    NotSatisfying { constraint: String, row: usize },
    #[error("NotApplicable: Schaefer set")]
    NotApplicable,
    #[error("no implementation of {target} found within the search bounds")]
    ImplementationNotFound { target: String },
    #[error("level {level} is not supported by reduction case {case}")]
    LevelUnsupported { level: usize, case: String },
    #[error("constraint {0} is not in the given constraint set")]
    ForeignConstraint(String),
}
