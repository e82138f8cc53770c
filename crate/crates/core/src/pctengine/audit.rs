//! Comparison of the verified pipeline against the closed-form target
//! potentials as printed in the source literature, term by term. The printed
//! formulas are never used for anything but this report.

use super::{TargetError, TargetSystem};
use crate::error::Error;
use crate::massmodel::{MassKind, MassProfile};
use crate::qmath::{cosh_q, sinh_q};
use crate::refpotentials::ReferenceSystem;
use crate::scalar::Real;

/// Largest deviation still reported as a match.
pub const MATCH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

/// How the printed correction term relates to the pipeline's.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionFinding {
    Match,
    SignFlipped,
    Mismatch,
}

impl CorrectionFinding {
    pub fn name(self) -> &'static str {
        match self {
            CorrectionFinding::Match => "match",
            CorrectionFinding::SignFlipped => "sign_flipped",
            CorrectionFinding::Mismatch => "mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditRow<T> {
    pub x: T,
    pub pipeline: T,
    pub printed: T,
    pub pipeline_leading: T,
    pub printed_leading: T,
    pub pipeline_correction: T,
    pub printed_correction: T,
}

impl<T: Real> AuditRow<T> {
    pub fn deviation(&self) -> T {
        (self.pipeline - self.printed).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport<T> {
    pub mass: MassKind,
    pub rows: Vec<AuditRow<T>>,
    pub max_deviation: T,
    pub max_leading_deviation: T,
    pub max_correction_deviation: T,
    pub verdict: Verdict,
    pub leading_verdict: Verdict,
    pub correction: CorrectionFinding,
}

/// Leading (reference) part of the printed target potential.
pub fn printed_leading<T: Real>(
    profile: &MassProfile<T>,
    reference: &ReferenceSystem<T>,
    x: T,
) -> Result<T, Error> {
    let (a, q) = (profile.alpha(), profile.q());
    let one = T::one();
    let s = reference.strength();
    let v = match profile.kind() {
        MassKind::AsymptoticallyVanishing => {
            let w = a * a * (x + (x * x + q).sqrt());
            let d = x * x + q;
            match reference {
                ReferenceSystem::Morse(_) => s * ((one + w).powi(2) - one),
                ReferenceSystem::PoschlTeller(_) => -s / d,
                ReferenceSystem::Hulthen(_) => -s / (w - one),
            }
        }
        MassKind::TanhSq => {
            let c = cosh_q(a * x, q)?;
            match reference {
                ReferenceSystem::Morse(_) => s * ((one + c).powi(2) - one),
                ReferenceSystem::PoschlTeller(_) => -T::c(4.0) * s / (c + c.recip()).powi(2),
                ReferenceSystem::Hulthen(_) => -s / (c - one),
            }
        }
        MassKind::CothSq => {
            let sh = sinh_q(a * x, q)?;
            match reference {
                ReferenceSystem::Morse(_) => s * ((one + sh).powi(2) - one),
                ReferenceSystem::PoschlTeller(_) => -T::c(4.0) * s / (sh + sh.recip()).powi(2),
                ReferenceSystem::Hulthen(_) => -s / (sh - one),
            }
        }
        MassKind::Custom => return Err(TargetError::CustomProfile.into()),
    };
    Ok(v)
}

/// Correction part of the printed target potential.
pub fn printed_correction<T: Real>(profile: &MassProfile<T>, x: T) -> Result<T, Error> {
    let (a, q) = (profile.alpha(), profile.q());
    let half_a2 = T::c(0.5) * a * a;
    let v = match profile.kind() {
        MassKind::AsymptoticallyVanishing => {
            (T::one() + q / (x * x + q)) / (T::c(8.0) * a * a)
        }
        MassKind::TanhSq => {
            let sh2 = sinh_q(a * x, q)?.powi(2);
            -half_a2 / (sh2 * sh2) * (T::c(1.25) + sh2)
        }
        MassKind::CothSq => {
            let sh2 = sinh_q(a * x, q)?.powi(2);
            let ch4 = cosh_q(a * x, q)?.powi(4);
            -half_a2 * (sh2.recip() + T::c(2.25) / ch4)
        }
        MassKind::Custom => return Err(TargetError::CustomProfile.into()),
    };
    Ok(v)
}

/// Samples `points` equally spaced positions across the target domain and
/// compares the pipeline's potential with the printed one.
pub fn discrepancy_audit<T: Real>(ts: &TargetSystem<T>, points: usize) -> Result<DiscrepancyReport<T>, Error> {
    let profile = ts.profile();
    if profile.kind() == MassKind::Custom {
        return Err(TargetError::CustomProfile.into());
    }
    if points < 2 {
        return Err(TargetError::TooFewSamples.into());
    }
    let d = ts.domain();
    let reference = ts.reference();
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let x = if i + 1 == points {
            d.hi
        } else {
            d.lo + d.width() * T::c(i as f64 / (points - 1) as f64)
        };
        let pipeline_correction = profile.correction_potential(x)?;
        let pipeline = ts.target_potential_at(x)?;
        let printed_leading = printed_leading(profile, reference, x)?;
        let printed_correction = printed_correction(profile, x)?;
        rows.push(AuditRow {
            x,
            pipeline,
            printed: printed_leading + printed_correction,
            pipeline_leading: pipeline - pipeline_correction,
            printed_leading,
            pipeline_correction,
            printed_correction,
        });
    }
    let tol = T::c(MATCH_TOLERANCE);
    let fold = |f: &dyn Fn(&AuditRow<T>) -> T| rows.iter().fold(T::zero(), |m, r| m.max(f(r)));
    let max_deviation = fold(&|r| r.deviation());
    let max_leading_deviation = fold(&|r| (r.pipeline_leading - r.printed_leading).abs());
    let max_correction_deviation = fold(&|r| (r.pipeline_correction - r.printed_correction).abs());
    let flipped = fold(&|r| (r.pipeline_correction + r.printed_correction).abs());
    let verdict = |dev: T| if dev <= tol { Verdict::Match } else { Verdict::Mismatch };
    let correction = if max_correction_deviation <= tol {
        CorrectionFinding::Match
    } else if flipped <= tol {
        CorrectionFinding::SignFlipped
    } else {
        CorrectionFinding::Mismatch
    };
    Ok(DiscrepancyReport {
        mass: profile.kind(),
        max_deviation,
        max_leading_deviation,
        max_correction_deviation,
        verdict: verdict(max_deviation),
        leading_verdict: verdict(max_leading_deviation),
        correction,
        rows,
    })
}
