use super::{require_finite, require_positive, ReferenceError};
use crate::qmath::jacobi;
use crate::scalar::Real;

/// `V(y) = -V₀ e^{-αu} / (1 - e^{-αu})` on `u = y - center > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hulthen<T> {
    strength: T,
    alpha: T,
    center: T,
}

impl<T: Real> Hulthen<T> {
    /// Requires at least one bound level, i.e. `2V₀/α² > 1`.
    pub fn new(strength: T, alpha: T) -> Result<Self, ReferenceError> {
        let strength = require_positive("V0", strength)?;
        let alpha = require_positive("alpha", alpha)?;
        let s = Self {
            strength,
            alpha,
            center: T::zero(),
        };
        if s.beta_sq() <= T::one() {
            return Err(ReferenceError::InvalidParameter {
                name: "V0",
                value: strength.to_f64_lossy(),
                reason: "too weak to bind a level (need 2 V0 / alpha^2 > 1)",
            });
        }
        Ok(s)
    }

    pub fn with_center(mut self, center: T) -> Self {
        self.center = center;
        self
    }

    pub fn strength(&self) -> T {
        self.strength
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn center(&self) -> T {
        self.center
    }

    /// `β² = 2V₀/α²`.
    pub fn beta_sq(&self) -> T {
        T::c(2.0) * self.strength / (self.alpha * self.alpha)
    }

    fn check(&self, y: T) -> Result<T, ReferenceError> {
        require_finite("y", y)?;
        let u = y - self.center;
        if u < T::zero() {
            return Err(ReferenceError::OutOfDomain {
                y: y.to_f64_lossy(),
                lo: self.center.to_f64_lossy(),
            });
        }
        Ok(u)
    }

    pub fn potential_at(&self, y: T) -> Result<T, ReferenceError> {
        let u = self.check(y)?;
        if u == T::zero() {
            return Err(ReferenceError::OutOfDomain {
                y: y.to_f64_lossy(),
                lo: self.center.to_f64_lossy(),
            });
        }
        Ok(-self.strength / (self.alpha * u).exp_m1())
    }

    pub fn level_count(&self) -> usize {
        self.beta_sq().sqrt().ceil().to_f64_lossy() as usize - 1
    }

    pub fn energy(&self, n: usize) -> T {
        let nb = T::c(n as f64 + 1.0);
        let k = (self.beta_sq() - nb * nb) / nb;
        -self.alpha * self.alpha / T::c(8.0) * k * k
    }

    /// `z^ε̃ (1 - z) P_n^{(2ε̃, 1)}(1 - 2z)` with `z = e^{-αu}` and
    /// `ε̃ = sqrt(-2ε)/α`. Vanishes at the domain edge.
    pub fn eigenfunction(&self, n: usize, y: T) -> Result<T, ReferenceError> {
        let u = self.check(y)?;
        let eps = (-T::c(2.0) * self.energy(n)).sqrt() / self.alpha;
        let au = self.alpha * u;
        let z = (-au).exp();
        let env = (-eps * au).exp() * -(-au).exp_m1();
        Ok(env * jacobi(n as i32, T::c(2.0) * eps, T::one(), T::one() - T::c(2.0) * z)?)
    }

    pub fn turning_points(&self, e: T) -> (T, T) {
        let right = (self.strength / -e).ln_1p() / self.alpha;
        (T::zero(), right)
    }
}
