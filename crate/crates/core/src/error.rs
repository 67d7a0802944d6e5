use thiserror::Error;

use crate::term::Arity;

/// Errors raised while reading or typing a term.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// `outer . inner` where `inner` produces a different number of
    /// circles than `outer` consumes.
    #[error(
        "arity mismatch in `{outer} . {inner}`: {inner} has {produced} outputs but {outer} expects {expected} inputs"
    )]
    ArityMismatch {
        outer: String,
        inner: String,
        produced: usize,
        expected: usize,
    },
}

/// Errors raised when a term or surface falls outside a cobordism category.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlavorError {
    #[error("generator `{generator}` is not available in the {flavor} category")]
    GeneratorOutOfFlavor { generator: String, flavor: String },

    #[error("component {component} is not in the {flavor} category: {reason}")]
    ComponentOutOfFlavor {
        component: usize,
        flavor: String,
        reason: String,
    },

    #[error("terms have different arities: {left} vs {right}")]
    ArityDiffers { left: Arity, right: Arity },
}

/// Errors raised by algebra construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("invalid rational `{0}`")]
    BadRational(String),

    #[error("the pairing ε(e_i·e_j) is singular")]
    SingularPairing,

    #[error("algebra failed validation: {0}")]
    Validation(String),

    #[error("term contains theta but no theta element was supplied")]
    MissingTheta,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Term(#[from] TermError),

    #[error(transparent)]
    Flavor(#[from] FlavorError),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
