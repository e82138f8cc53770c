use super::{require_finite, require_positive, ReferenceError};
use crate::qmath::jacobi;
use crate::scalar::{ln_cosh, Real};

/// `V(y) = -U₀ sech²(αu)`, `u = y - center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoschlTeller<T> {
    depth: T,
    alpha: T,
    center: T,
}

impl<T: Real> PoschlTeller<T> {
    pub fn new(depth: T, alpha: T) -> Result<Self, ReferenceError> {
        Ok(Self {
            depth: require_positive("U0", depth)?,
            alpha: require_positive("alpha", alpha)?,
            center: T::zero(),
        })
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

    /// `s = sqrt(1 + 8U₀/α²)`; the well strength is `λ = (1 + s)/2`.
    pub fn s(&self) -> T {
        (T::one() + T::c(8.0) * self.depth / (self.alpha * self.alpha)).sqrt()
    }

    pub fn potential_at(&self, y: T) -> Result<T, ReferenceError> {
        require_finite("y", y)?;
        let u = self.alpha * (y - self.center);
        let sech = (-ln_cosh(u)).exp();
        Ok(-self.depth * sech * sech)
    }

    pub fn level_count(&self) -> usize {
        ((self.s() - T::one()) / T::c(2.0)).ceil().to_f64_lossy() as usize
    }

    fn beta(&self, n: usize) -> T {
        (self.s() - T::one()) / T::c(2.0) - T::c(n as f64)
    }

    pub fn energy(&self, n: usize) -> T {
        let b = self.beta(n);
        -T::c(0.5) * self.alpha * self.alpha * b * b
    }

    /// `sech^β(αu) P_n^{(β,β)}(tanh αu)`.
    pub fn eigenfunction(&self, n: usize, y: T) -> Result<T, ReferenceError> {
        require_finite("y", y)?;
        let beta = self.beta(n);
        let u = self.alpha * (y - self.center);
        let env = (-beta * ln_cosh(u)).exp();
        Ok(env * jacobi(n as i32, beta, beta, u.tanh())?)
    }

    pub fn turning_points(&self, e: T) -> (T, T) {
        let ratio = (self.depth / -e).max(T::one());
        let u = ratio.sqrt().acosh() / self.alpha;
        (-u, u)
    }
}
