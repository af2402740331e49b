//! A small text language for q-series, so identities can be written as data.
//!
//! ```text
//! gf(pod) * theta{n in N}((-1)^ceil2(n); (n*(n+1)) div 2)
//! poch(-q^1, q^2) / poch(q^2, q^2)
//! subst(gf(p), -q^2)
//! ```
//!
//! `^` binds tightest, then `*` and `/` (left-associative), then `+` and `-`.
//! Unary minus binds tighter than `*`. Inside `theta{..}` the weight and the
//! exponent are integer expressions in the bound variable, with exact
//! division `div k`, `ceil2(x)` and `(-1)^x`.

pub mod ast;
mod eval;
mod lexer;
mod parser;
mod print;

use std::fmt;

use num_bigint::BigInt;

pub use ast::{Expr, IntExpr, IntExprError, ThetaExpr};
pub use eval::{check, eval, CheckOutcome};
pub use lexer::{lex, Token, TokenKind};
pub use parser::parse;

use crate::series::SeriesError;
use crate::theta::ThetaError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax {
        expected: Vec<String>,
        found: String,
    },
    InvalidCharacter(char),
    NumberOutOfRange(String),
    UnknownFunction(String),
    UnboundVariable(String),
}

/// A parse failure at a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn syntax(token: &Token, expected: &[&str]) -> Self {
        let found = match token.kind {
            TokenKind::Eof => "end of input".to_owned(),
            _ => format!("`{}`", token.text),
        };
        ParseError {
            offset: token.offset,
            kind: ParseErrorKind::Syntax {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found,
            },
        }
    }

    pub(crate) fn invalid_character(offset: usize, ch: char) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::InvalidCharacter(ch),
        }
    }

    pub(crate) fn out_of_range(offset: usize, v: &BigInt) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::NumberOutOfRange(v.to_string()),
        }
    }

    pub(crate) fn unknown_function(offset: usize, name: &str) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::UnknownFunction(name.to_owned()),
        }
    }

    pub(crate) fn unbound_variable(offset: usize, name: &str) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::UnboundVariable(name.to_owned()),
        }
    }

    /// 1-based column, valid for single-line input.
    pub fn column(&self) -> usize {
        self.offset + 1
    }

    pub fn expected(&self) -> &[String] {
        match &self.kind {
            ParseErrorKind::Syntax { expected, .. } => expected,
            _ => &[],
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                let list: Vec<String> = expected.iter().map(|e| format!("`{e}`")).collect();
                write!(f, "expected {}, found {found}", list.join(" or "))?
            }
            ParseErrorKind::InvalidCharacter(c) => write!(f, "invalid character {c:?}")?,
            ParseErrorKind::NumberOutOfRange(v) => write!(f, "number {v} out of range")?,
            ParseErrorKind::UnknownFunction(name) => write!(f, "unknown function `{name}`")?,
            ParseErrorKind::UnboundVariable(name) => write!(f, "unbound variable `{name}`")?,
        }
        write!(
            f,
            " at byte offset {} (column {})",
            self.offset,
            self.column()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

/// Either stage of turning text into a series.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

/// Parses and expands `src` in one step.
pub fn eval_str(src: &str, order: usize) -> Result<crate::series::Series, DslError> {
    Ok(eval(&parse(src)?, order)?)
}
