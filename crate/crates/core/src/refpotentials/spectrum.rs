use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Numerical,
}

/// Ascending list of bound-state energies.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub energies: Vec<T>,
    pub provenance: Provenance,
}

impl<T: Real> Spectrum<T> {
    pub fn new(energies: Vec<T>, provenance: Provenance) -> Self {
        debug_assert!(energies.windows(2).all(|w| w[0] < w[1]));
        Self {
            energies,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }
}
