use super::{require_finite, require_positive, ReferenceError};
use crate::qmath::laguerre_assoc;
use crate::scalar::Real;

/// `V(y) = D (e^{-2αu} - 2 e^{-αu})`, `u = y - center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Morse<T> {
    depth: T,
    alpha: T,
    center: T,
}

impl<T: Real> Morse<T> {
    /// Requires at least one bound level, i.e. `sqrt(2D)/α > ½`.
    pub fn new(depth: T, alpha: T) -> Result<Self, ReferenceError> {
        let depth = require_positive("D", depth)?;
        let alpha = require_positive("alpha", alpha)?;
        let s = Self {
            depth,
            alpha,
            center: T::zero(),
        };
        if s.dbar() <= T::c(0.5) {
            return Err(ReferenceError::InvalidParameter {
                name: "D",
                value: depth.to_f64_lossy(),
                reason: "too shallow to bind a level (need sqrt(2D)/alpha > 1/2)",
            });
        }
        Ok(s)
    }

    pub fn with_center(mut self, center: T) -> Self {
        self.center = center;
        self
    }

    pub fn strength(&self) -> T {
        self.depth
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn center(&self) -> T {
        self.center
    }

    /// `D̄ = sqrt(2D)/α`.
    pub fn dbar(&self) -> T {
        (T::c(2.0) * self.depth).sqrt() / self.alpha
    }

    pub fn potential_at(&self, y: T) -> Result<T, ReferenceError> {
        require_finite("y", y)?;
        let w = (-self.alpha * (y - self.center)).exp();
        Ok(self.depth * (w * w - T::c(2.0) * w))
    }

    pub fn level_count(&self) -> usize {
        (self.dbar() - T::c(0.5)).floor().to_f64_lossy() as usize + 1
    }

    fn beta(&self, n: usize) -> T {
        self.dbar() - T::c(n as f64) - T::c(0.5)
    }

    pub fn energy(&self, n: usize) -> T {
        let b = self.beta(n);
        -T::c(0.5) * self.alpha * self.alpha * b * b
    }

    /// `z^β e^{-z/2} L_n^{2β}(z)` with `z = 2 D̄ e^{-αu}`.
    pub fn eigenfunction(&self, n: usize, y: T) -> Result<T, ReferenceError> {
        require_finite("y", y)?;
        let beta = self.beta(n);
        let ln_z = (T::c(2.0) * self.dbar()).ln() - self.alpha * (y - self.center);
        let z = ln_z.exp();
        let log_env = beta * ln_z - T::c(0.5) * z;
        if !log_env.is_finite() || log_env < T::min_positive_value().ln() {
            return Ok(T::zero());
        }
        let l = laguerre_assoc(n as i32, T::c(2.0) * beta, z)?;
        Ok(log_env.exp() * l)
    }

    pub fn turning_points(&self, e: T) -> (T, T) {
        let r = (T::one() + e / self.depth).max(T::zero()).sqrt();
        let left = -(T::one() + r).ln() / self.alpha;
        let right = -(T::one() - r).ln() / self.alpha;
        (left, right)
    }
}
