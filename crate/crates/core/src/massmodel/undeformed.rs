//! The built-in profiles at `q = 1`, written with the ordinary hyperbolic
//! functions of the standard library. Used to check that the deformed
//! pipeline collapses onto the undeformed one.

use super::profile::MassKind;
use crate::exprlang::Jet2;
use crate::scalar::Real;

/// `(m, m', m'')` of the `q = 1` profile of `kind`.
pub fn mass_jet<T: Real>(kind: MassKind, alpha: T, x: T) -> Option<Jet2<T>> {
    let two = T::c(2.0);
    let u = alpha * x;
    match kind {
        MassKind::AsymptoticallyVanishing => {
            let d = x * x + T::one();
            let a2 = alpha * alpha;
            Some(Jet2::new(
                a2 / d,
                -two * a2 * x / (d * d),
                a2 * (T::c(6.0) * x * x - two) / (d * d * d),
            ))
        }
        MassKind::TanhSq => {
            let t = u.tanh();
            let sech2 = u.cosh().powi(-2);
            let sh = u.sinh();
            Some(Jet2::new(
                t * t,
                two * alpha * t * sech2,
                two * alpha * alpha * sech2 * sech2 * (T::one() - two * sh * sh),
            ))
        }
        MassKind::CothSq => {
            let (sh, ch) = (u.sinh(), u.cosh());
            let k = ch / sh;
            Some(Jet2::new(
                k * k,
                -two * alpha * ch / (sh * sh * sh),
                two * alpha * alpha * (T::one() + two * ch * ch) / (sh * sh * sh * sh),
            ))
        }
        MassKind::Custom => None,
    }
}

/// Mapping function of the `q = 1` profile of `kind`.
pub fn forward<T: Real>(kind: MassKind, alpha: T, x: T) -> Option<T> {
    let u = alpha * x;
    match kind {
        MassKind::AsymptoticallyVanishing => Some(alpha * x.asinh()),
        MassKind::TanhSq => Some(u.cosh().ln() / alpha),
        MassKind::CothSq => Some(u.sinh().ln() / alpha),
        MassKind::Custom => None,
    }
}

/// Inverse mapping of the `q = 1` profile of `kind`.
pub fn inverse<T: Real>(kind: MassKind, alpha: T, y: T) -> Option<T> {
    match kind {
        MassKind::AsymptoticallyVanishing => Some((y / alpha).sinh()),
        MassKind::TanhSq => Some((alpha * y).exp().acosh() / alpha),
        MassKind::CothSq => Some((alpha * y).exp().asinh() / alpha),
        MassKind::Custom => None,
    }
}
