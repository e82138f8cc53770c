//! q-deformed hyperbolic functions and the classical orthogonal polynomials
//! that appear in the reference eigenfunctions.
//!
//! The deformed functions are
//!
//! ```text
//! cosh_q(x) = (e^x + q e^-x) / 2        sinh_q(x) = (e^x - q e^-x) / 2
//! tanh_q = sinh_q / cosh_q              coth_q = cosh_q / sinh_q
//! sech_q = 1 / cosh_q                   csch_q = 1 / sinh_q
//! ```
//!
//! so that `cosh_q^2 - sinh_q^2 = q` and `q = 1` recovers the ordinary
//! hyperbolic functions. Any real `q` is accepted here; the mass profiles
//! that consume these functions restrict themselves to `q > 0`.

mod hyperbolic;
mod poly;

pub use hyperbolic::{arccosh_q, arcsinh_q, cosh_q, coth_q, csch_q, sech_q, sinh_q, tanh_q};
pub use poly::{jacobi, laguerre_assoc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QMathError {
    #[error("{func}: result outside the floating-point range at x = {x}")]
    Range { func: &'static str, x: f64 },
    #[error("{func}: pole at x = {x} (denominator {denominator:e})")]
    Pole {
        func: &'static str,
        x: f64,
        denominator: f64,
    },
    #[error("{func}: argument {arg} has no real preimage for q = {q}")]
    Domain { func: &'static str, arg: f64, q: f64 },
    #[error("polynomial degree must be non-negative, got {0}")]
    NegativeDegree(i32),
}
