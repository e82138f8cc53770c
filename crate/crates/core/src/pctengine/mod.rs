//! The point canonical transformation `y = f(x)`, `f' = sqrt(m)`, which maps a
//! constant-mass reference problem onto a position-dependent-mass target:
//!
//! ```text
//! E_n    = ε_n
//! V(x)   = V_ref(f(x)) + (1/8m) [m''/m - (7/4)(m'/m)²]
//! Ψ_n(x) = m(x)^{1/4} Φ_n(f(x))
//! ```

mod audit;
mod identity;
mod reduction;
mod target;

pub use audit::{
    discrepancy_audit, printed_correction, printed_leading, AuditRow, CorrectionFinding,
    DiscrepancyReport, Verdict, MATCH_TOLERANCE,
};
pub use identity::{pct_identity_residual, transformation_term};
pub use reduction::{q1_reduction_deviation, undeformed_potential_at, undeformed_wavefunction_at};
pub use target::{fit_reference_center, TargetSystem, HULTHEN_EDGE};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TargetError {
    #[error("f({x}) = {y} falls outside the reference domain (y > {lo})")]
    ReferenceDomain { x: f64, y: f64, lo: f64 },
    #[error("x = {x} lies outside the target domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error(
        "the mapping image [{have_lo}, {have_hi}] does not cover the reference window \
         [{need_lo}, {need_hi}]; shift the reference center"
    )]
    ImageTooSmall {
        need_lo: f64,
        need_hi: f64,
        have_lo: f64,
        have_hi: f64,
    },
    #[error("no printed target potential exists for custom mass profiles")]
    CustomProfile,
    #[error("the undeformed comparison needs a built-in profile with q = 1 (got q = {q})")]
    NotUndeformed { q: f64 },
    #[error("audit needs at least two sample points")]
    TooFewSamples,
}
