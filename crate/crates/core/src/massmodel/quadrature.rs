//! Adaptive Simpson quadrature.

use crate::scalar::Real;

const MAX_DEPTH: u32 = 40;

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` (floored at a
/// few ulps of the running estimate). `b < a` yields the signed integral.
pub fn adaptive_simpson<T, E, F>(mut f: F, a: T, b: T, tol: T) -> Result<T, E>
where
    T: Real,
    F: FnMut(T) -> Result<T, E>,
{
    if a == b {
        return Ok(T::zero());
    }
    let half = T::c(0.5);
    let m = half * (a + b);
    let (fa, fm, fb) = (f(a)?, f(m)?, f(b)?);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(&mut f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::c(6.0) * (fa + T::c(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T, E, F>(
    f: &mut F,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> Result<T, E>
where
    T: Real,
    F: FnMut(T) -> Result<T, E>,
{
    let half = T::c(0.5);
    let m = half * (a + b);
    let (lm, rm) = (half * (a + m), half * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    let floor = T::c(64.0) * T::epsilon() * (left + right).abs();
    if depth == 0 || delta.abs() <= T::c(15.0) * tol.max(floor) {
        return Ok(left + right + delta / T::c(15.0));
    }
    let l = recurse(f, a, m, fa, flm, fm, left, half * tol, depth - 1)?;
    let r = recurse(f, m, b, fm, frm, fb, right, half * tol, depth - 1)?;
    Ok(l + r)
}
