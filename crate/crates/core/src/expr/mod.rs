//! A small expression language over exact reals.
//!
//! ```
//! use dedekind::expr::{eval_str, parse};
//! use dedekind::rational::Rat;
//! use dedekind::real::Budget;
//!
//! let iv = eval_str("2^(1/2)", &Rat::pow2(-30), Budget::DEFAULT).unwrap();
//! assert!(iv.lo() * iv.lo() <= Rat::from_integer(2));
//! assert!(parse("2^").is_err());
//! ```

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

pub use ast::{ExprKind, ExprNode, Span};
pub use eval::{compile, const_fold, eval, Compiled, DomainError};
pub use parser::parse;

use crate::rational::Rat;
use crate::real::{Budget, RInterval};

/// A parse failure at a 0-based byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub position: usize,
    pub expected: String,
}

impl SyntaxError {
    pub(crate) fn new(position: usize, expected: &str) -> SyntaxError {
        SyntaxError { position, expected: expected.to_string() }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: expected {}", self.position, self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// Parses and evaluates `src` to an enclosure of width at most `eps`.
pub fn eval_str(src: &str, eps: &Rat, budget: Budget) -> Result<RInterval, ExprError> {
    Ok(eval(&parse(src)?, eps, budget)?)
}
