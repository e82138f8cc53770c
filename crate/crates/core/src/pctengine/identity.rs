use crate::error::Error;
use crate::exprlang::Jet2;
use crate::massmodel::{correction_from_jet, MassProfile};
use crate::scalar::Real;

/// Potential shift `V(x) - V_ref(f(x))` obtained directly from the
/// transformed equation with `E = ε` and `f'² = m`:
///
/// ```text
/// -(1/2m) F,   F = g''/g - (f''/f')(g'/g),   g = m^{-1/4}
/// ```
///
/// `g` and `f'` are differentiated as jets of the mass.
pub fn transformation_term<T: Real>(profile: &MassProfile<T>, x: T) -> Result<T, Error> {
    let m = profile.mass_jet(x)?;
    let g = m.powf(T::c(-0.25));
    let fp: Jet2<T> = m.sqrt();
    let f = g.d2 / g.value - fp.d1 / fp.value * (g.d1 / g.value);
    Ok(-f / (T::c(2.0) * m.value))
}

/// `|transformation_term - correction_potential|`: zero when the general
/// transformed equation reduces to the closed-form correction.
pub fn pct_identity_residual<T: Real>(profile: &MassProfile<T>, x: T) -> Result<T, Error> {
    let term = transformation_term(profile, x)?;
    Ok((term - correction_from_jet(profile.mass_jet(x)?)).abs())
}
