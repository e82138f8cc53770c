//! Constant-mass reference systems with closed-form bound states.
//!
//! All three obey `Φ'' + 2[ε - V(y)]Φ = 0` (unit mass, ħ = 1):
//!
//! | system        | potential                           | levels                                     |
//! |---------------|-------------------------------------|--------------------------------------------|
//! | Morse         | `D (e^{-2αu} - 2 e^{-αu})`          | `-(α²/2) (D̄ - n - ½)²`, `D̄ = sqrt(2D)/α`   |
//! | Pöschl-Teller | `-U₀ sech²(αu)`                     | `-(α²/8) (sqrt(1 + 8U₀/α²) - 1 - 2n)²`     |
//! | Hulthén       | `-V₀ e^{-αu} / (1 - e^{-αu})`       | `-(α²/8) ((β² - n̄²) / n̄)²`, `β² = 2V₀/α²`  |
//!
//! with `u = y - center` (the center defaults to zero) and `n̄ = n + 1`.
//! Eigenfunctions are returned unnormalized.

mod hulthen;
mod morse;
mod poschl_teller;
mod spectrum;

pub use hulthen::Hulthen;
pub use morse::Morse;
pub use poschl_teller::PoschlTeller;
pub use spectrum::{Provenance, Spectrum};

use thiserror::Error;

use crate::qmath::QMathError;
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReferenceError {
    #[error("reference parameter `{name}` = {value} {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("level {n} is not bound (valid levels 0..{count})")]
    LevelOutOfRange { n: i64, count: usize },
    #[error("y = {y} lies outside the reference domain (y > {lo})")]
    OutOfDomain { y: f64, lo: f64 },
    #[error("could not bracket the decay window: {0}")]
    Window(&'static str),
    #[error(transparent)]
    QMath(#[from] QMathError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReferenceKind {
    Morse,
    PoschlTeller,
    Hulthen,
}

impl ReferenceKind {
    pub const ALL: [ReferenceKind; 3] = [
        ReferenceKind::Morse,
        ReferenceKind::PoschlTeller,
        ReferenceKind::Hulthen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReferenceKind::Morse => "morse",
            ReferenceKind::PoschlTeller => "poschl_teller",
            ReferenceKind::Hulthen => "hulthen",
        }
    }
}

pub(crate) fn require_positive<T: Real>(name: &'static str, v: T) -> Result<T, ReferenceError> {
    if v.is_finite() && v > T::zero() {
        Ok(v)
    } else {
        Err(ReferenceError::InvalidParameter {
            name,
            value: v.to_f64_lossy(),
            reason: "must be finite and > 0",
        })
    }
}

pub(crate) fn require_finite<T: Real>(name: &'static str, v: T) -> Result<T, ReferenceError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ReferenceError::InvalidParameter {
            name,
            value: v.to_f64_lossy(),
            reason: "must be finite",
        })
    }
}

/// One of the three solvable constant-mass problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceSystem<T> {
    Morse(Morse<T>),
    PoschlTeller(PoschlTeller<T>),
    Hulthen(Hulthen<T>),
}

macro_rules! dispatch {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            ReferenceSystem::Morse($s) => $body,
            ReferenceSystem::PoschlTeller($s) => $body,
            ReferenceSystem::Hulthen($s) => $body,
        }
    };
}

impl<T: Real> ReferenceSystem<T> {
    pub fn kind(&self) -> ReferenceKind {
        match self {
            ReferenceSystem::Morse(_) => ReferenceKind::Morse,
            ReferenceSystem::PoschlTeller(_) => ReferenceKind::PoschlTeller,
            ReferenceSystem::Hulthen(_) => ReferenceKind::Hulthen,
        }
    }

    /// Depth-like parameter: `D`, `U₀` or `V₀`.
    pub fn strength(&self) -> T {
        dispatch!(self, s => s.strength())
    }

    pub fn alpha(&self) -> T {
        dispatch!(self, s => s.alpha())
    }

    pub fn center(&self) -> T {
        dispatch!(self, s => s.center())
    }

    /// Same system translated so that its natural origin sits at `center`.
    pub fn with_center(self, center: T) -> Result<Self, ReferenceError> {
        require_finite("center", center)?;
        Ok(match self {
            ReferenceSystem::Morse(s) => ReferenceSystem::Morse(s.with_center(center)),
            ReferenceSystem::PoschlTeller(s) => ReferenceSystem::PoschlTeller(s.with_center(center)),
            ReferenceSystem::Hulthen(s) => ReferenceSystem::Hulthen(s.with_center(center)),
        })
    }

    pub fn potential_at(&self, y: T) -> Result<T, ReferenceError> {
        dispatch!(self, s => s.potential_at(y))
    }

    /// Number of admissible level indices `n`.
    pub fn level_count(&self) -> usize {
        dispatch!(self, s => s.level_count())
    }

    pub fn closed_form_energy(&self, n: i64) -> Result<T, ReferenceError> {
        self.check_level(n)?;
        Ok(dispatch!(self, s => s.energy(n as usize)))
    }

    pub fn eigenfunction_at(&self, n: i64, y: T) -> Result<T, ReferenceError> {
        self.check_level(n)?;
        dispatch!(self, s => s.eigenfunction(n as usize, y))
    }

    fn check_level(&self, n: i64) -> Result<(), ReferenceError> {
        let count = self.level_count();
        if n < 0 || n as usize >= count {
            Err(ReferenceError::LevelOutOfRange { n, count })
        } else {
            Ok(())
        }
    }

    /// Strictly negative closed-form levels, ascending.
    pub fn spectrum(&self) -> Spectrum<T> {
        let energies = (0..self.level_count())
            .map(|n| dispatch!(self, s => s.energy(n)))
            .filter(|e| *e < T::zero())
            .collect();
        Spectrum::new(energies, Provenance::ClosedForm)
    }

    /// Lower edge of the natural domain (`-∞` for Morse and Pöschl-Teller,
    /// the center for Hulthén, where the wavefunction vanishes).
    pub fn domain_lower(&self) -> T {
        match self {
            ReferenceSystem::Hulthen(h) => h.center(),
            _ => T::neg_infinity(),
        }
    }

    /// Classical turning points `(left, right)` at energy `e < 0`. For
    /// Hulthén the left value is the domain edge.
    pub fn turning_points(&self, e: T) -> (T, T) {
        let (l, r) = dispatch!(self, s => s.turning_points(e));
        (self.center() + l, self.center() + r)
    }

    /// Interval `[y_lo, y_hi]` outside of which every level `n < levels`
    /// satisfies `|Φ_n| < tol · max |Φ_n|`. For Hulthén `y_lo` is the
    /// domain edge.
    pub fn support_window(&self, levels: usize, tol: T) -> Result<(T, T), ReferenceError> {
        if levels == 0 {
            return Err(ReferenceError::Window("need at least one level"));
        }
        self.check_level(levels as i64 - 1)?;
        let top = self.closed_form_energy(levels as i64 - 1)?;
        if top >= T::zero() {
            return Err(ReferenceError::Window("top level sits at the continuum threshold"));
        }
        let (left, right) = self.turning_points(top);
        let samples = 4000;
        let width = right - left;
        let mut peaks = vec![T::zero(); levels];
        for i in 0..=samples {
            let y = left + width * T::c(i as f64 / samples as f64);
            for (n, peak) in peaks.iter_mut().enumerate() {
                let v = self.eigenfunction_at(n as i64, y)?.abs();
                *peak = peak.max(v);
            }
        }
        let negligible = |y: T| -> Result<bool, ReferenceError> {
            for (n, peak) in peaks.iter().enumerate() {
                if self.eigenfunction_at(n as i64, y)?.abs() >= tol * *peak {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let step = width / T::c(400.0);
        let max_steps = 1_000_000;
        let mut hi = right;
        let mut steps = 0;
        while !negligible(hi)? {
            hi = hi + step;
            steps += 1;
            if steps > max_steps {
                return Err(ReferenceError::Window("right tail does not decay"));
            }
        }
        let lo = if matches!(self, ReferenceSystem::Hulthen(_)) {
            left
        } else {
            let mut lo = left;
            steps = 0;
            while !negligible(lo)? {
                lo = lo - step;
                steps += 1;
                if steps > max_steps {
                    return Err(ReferenceError::Window("left tail does not decay"));
                }
            }
            lo
        };
        Ok((lo, hi))
    }
}

impl<T: Real> From<Morse<T>> for ReferenceSystem<T> {
    fn from(s: Morse<T>) -> Self {
        ReferenceSystem::Morse(s)
    }
}

impl<T: Real> From<PoschlTeller<T>> for ReferenceSystem<T> {
    fn from(s: PoschlTeller<T>) -> Self {
        ReferenceSystem::PoschlTeller(s)
    }
}

impl<T: Real> From<Hulthen<T>> for ReferenceSystem<T> {
    fn from(s: Hulthen<T>) -> Self {
        ReferenceSystem::Hulthen(s)
    }
}

#[cfg(test)]
mod tests;
