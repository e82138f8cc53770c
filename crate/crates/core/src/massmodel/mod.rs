//! Mass profiles `m(x)`, their mapping functions `f = ∫ sqrt(m) dx`, and the
//! correction potential generated by the point canonical transformation.
//!
//! Units: the overall mass scale and ħ are both 1.

mod mapping;
mod profile;
pub mod quadrature;
pub mod undeformed;

pub use mapping::Mapping;
pub use profile::{correction_from_jet, Interval, MassKind, MassProfile};

use thiserror::Error;

use crate::exprlang::ExprError;
use crate::qmath::QMathError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MassError {
    #[error("mass parameter `{name}` = {value} {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("invalid domain [{lo}, {hi}]: {reason}")]
    InvalidDomain {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },
    #[error("x = {x} lies outside the profile domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("y = {y} lies outside the mapping image [{lo}, {hi}]")]
    OutOfRange { y: f64, lo: f64, hi: f64 },
    #[error("mass is not positive at x = {x} (m = {value})")]
    NonPositiveMass { x: f64, value: f64 },
    #[error("mass or its derivatives are not finite at x = {x}")]
    NonFiniteMass { x: f64 },
    #[error("custom profiles need an expression")]
    MissingExpression,
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    QMath(#[from] QMathError),
}
