use thiserror::Error;

use crate::eigensolver::EigenError;
use crate::exprlang::ExprError;
use crate::massmodel::MassError;
use crate::pctengine::TargetError;
use crate::qmath::QMathError;
use crate::refpotentials::ReferenceError;

/// Crate-wide error, one variant per module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    QMath(#[from] QMathError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error(transparent)]
    Reference(#[from] ReferenceError),
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
