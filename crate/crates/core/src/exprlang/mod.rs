//! Expression language for user-defined mass profiles.
//!
//! Expressions are parsed once into an immutable [`Expr`] tree and evaluated
//! on second-order jets, which gives `m`, `m'` and `m''` at a point without
//! any symbolic manipulation. `x` is the independent variable; every other
//! identifier is a parameter looked up in a [`ParamTable`].

mod ast;
mod eval;
mod jet;
mod parser;

pub use ast::{BinOp, Expr, Func};
pub use eval::{eval_jet, eval_value};
pub use jet::Jet2;
pub use parser::parse;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::qmath::QMathError;

/// Named parameter values, keyed by identifier.
pub type ParamTable<T> = BTreeMap<String, T>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("unknown function `{name}` at byte {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("{func} is undefined for argument {value}")]
    Domain { func: &'static str, value: f64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter `{0}` is not bound")]
    UnboundParameter(String),
    #[error("expression is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error(transparent)]
    QMath(#[from] QMathError),
}
