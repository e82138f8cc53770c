use super::{TargetError, TargetSystem};
use crate::error::Error;
use crate::exprlang::Jet2;
use crate::massmodel::{correction_from_jet, undeformed, MassKind};
use crate::scalar::Real;

fn undeformed_parts<T: Real>(ts: &TargetSystem<T>, x: T) -> Result<(Jet2<T>, T), Error> {
    let p = ts.profile();
    if p.kind() == MassKind::Custom || p.q() != T::one() {
        return Err(TargetError::NotUndeformed { q: p.q().to_f64_lossy() }.into());
    }
    let jet = undeformed::mass_jet(p.kind(), p.alpha(), x).expect("built-in profile");
    let y = undeformed::forward(p.kind(), p.alpha(), x).expect("built-in profile");
    Ok((jet, y))
}

/// Target potential rebuilt from ordinary hyperbolic functions (q = 1 only).
pub fn undeformed_potential_at<T: Real>(ts: &TargetSystem<T>, x: T) -> Result<T, Error> {
    let (jet, y) = undeformed_parts(ts, x)?;
    Ok(ts.reference().potential_at(y)? + correction_from_jet(jet))
}

/// Target wavefunction rebuilt from ordinary hyperbolic functions (q = 1 only).
pub fn undeformed_wavefunction_at<T: Real>(ts: &TargetSystem<T>, n: i64, x: T) -> Result<T, Error> {
    let (jet, y) = undeformed_parts(ts, x)?;
    Ok(jet.value.sqrt().sqrt() * ts.reference().eigenfunction_at(n, y)?)
}

/// Largest `|deformed - undeformed| / max(1, |undeformed|)` over the target
/// potential and the wavefunctions `0..levels` at the points `xs`.
pub fn q1_reduction_deviation<T: Real>(
    ts: &TargetSystem<T>,
    xs: &[T],
    levels: usize,
) -> Result<T, Error> {
    let rel = |a: T, b: T| (a - b).abs() / b.abs().max(T::one());
    let mut worst = T::zero();
    for &x in xs {
        worst = worst.max(rel(ts.target_potential_at(x)?, undeformed_potential_at(ts, x)?));
        for n in 0..levels as i64 {
            worst = worst.max(rel(
                ts.target_wavefunction_at(n, x)?,
                undeformed_wavefunction_at(ts, n, x)?,
            ));
        }
    }
    Ok(worst)
}
