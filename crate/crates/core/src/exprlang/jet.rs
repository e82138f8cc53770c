//! Second-order forward-mode jets.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

/// Value of a function of `x` together with its first two derivatives.
///
/// Arithmetic propagates the product, quotient and chain rules exactly, so
/// evaluating an expression on `Jet2::variable(x)` yields `(f, f', f'')`
/// with no truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet2<T> {
    pub value: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Real> Jet2<T> {
    pub fn new(value: T, d1: T, d2: T) -> Self {
        Self { value, d1, d2 }
    }

    pub fn constant(value: T) -> Self {
        Self::new(value, T::zero(), T::zero())
    }

    /// The independent variable itself: `(x, 1, 0)`.
    pub fn variable(x: T) -> Self {
        Self::new(x, T::one(), T::zero())
    }

    pub fn is_constant(&self) -> bool {
        self.d1 == T::zero() && self.d2 == T::zero()
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.d1.is_finite() && self.d2.is_finite()
    }

    /// Applies `g` with known `g(v)`, `g'(v)`, `g''(v)` at `v = self.value`.
    #[inline]
    pub fn chain(self, g: T, dg: T, ddg: T) -> Self {
        Self::new(g, dg * self.d1, ddg * self.d1 * self.d1 + dg * self.d2)
    }

    pub fn exp(self) -> Self {
        let e = self.value.exp();
        self.chain(e, e, e)
    }

    /// Natural log. The caller guarantees a positive value.
    pub fn ln(self) -> Self {
        let v = self.value;
        self.chain(v.ln(), v.recip(), -(v * v).recip())
    }

    /// Square root. The caller guarantees a positive value.
    pub fn sqrt(self) -> Self {
        let r = self.value.sqrt();
        let half = T::c(0.5);
        self.chain(r, half / r, -T::c(0.25) / (r * self.value))
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(s, c, -s)
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(c, -s, -c)
    }

    pub fn sinh(self) -> Self {
        let (s, c) = (self.value.sinh(), self.value.cosh());
        self.chain(s, c, s)
    }

    pub fn cosh(self) -> Self {
        let (s, c) = (self.value.sinh(), self.value.cosh());
        self.chain(c, s, c)
    }

    pub fn tanh(self) -> Self {
        let t = self.value.tanh();
        let sech2 = T::one() - t * t;
        self.chain(t, sech2, -T::c(2.0) * t * sech2)
    }

    /// Integer power; any base.
    pub fn powi(self, n: i32) -> Self {
        let v = self.value;
        match n {
            0 => Self::constant(T::one()),
            1 => self,
            _ => {
                let nf = T::c(n as f64);
                let vn2 = v.powi(n - 2);
                self.chain(vn2 * v * v, nf * vn2 * v, nf * (nf - T::one()) * vn2)
            }
        }
    }

    /// Constant real power `v^p`. The caller guarantees a positive value.
    pub fn powf(self, p: T) -> Self {
        let v = self.value;
        let vp = v.powf(p);
        self.chain(vp, p * vp / v, p * (p - T::one()) * vp / (v * v))
    }

    pub fn recip(self) -> Self {
        let r = self.value.recip();
        self.chain(r, -r * r, T::c(2.0) * r * r * r)
    }
}

impl<T: Real> Add for Jet2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl<T: Real> Sub for Jet2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl<T: Real> Mul for Jet2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + T::c(2.0) * self.d1 * o.d1 + self.value * o.d2,
        )
    }
}

impl<T: Real> Div for Jet2<T> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<T: Real> Neg for Jet2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, -self.d1, -self.d2)
    }
}

impl<T: Real> Mul<T> for Jet2<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.value * k, self.d1 * k, self.d2 * k)
    }
}

impl<T: Real> Add<T> for Jet2<T> {
    type Output = Self;
    fn add(self, k: T) -> Self {
        Self::new(self.value + k, self.d1, self.d2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn fd(f: impl Fn(f64) -> f64, x: f64) -> (f64, f64) {
        let h = 1e-3;
        let d1 = (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
        let d2 = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h)
            - f(x - 2.0 * h))
            / (12.0 * h * h);
        (d1, d2)
    }

    #[test]
    fn square_of_three() {
        let x = Jet2::variable(3.0);
        assert_eq!(x * x, Jet2::new(9.0, 6.0, 2.0));
        assert_eq!(x.powi(2), Jet2::new(9.0, 6.0, 2.0));
    }

    #[test]
    fn composite_matches_finite_differences() {
        let f = |x: f64| (x.sin() * x.exp()).sqrt() / (1.0 + x * x).ln().cosh();
        let x0 = 0.8;
        let x = Jet2::variable(x0);
        let j = (x.sin() * x.exp()).sqrt() / (Jet2::constant(1.0) + x * x).ln().cosh();
        let (d1, d2) = fd(f, x0);
        assert_relative_eq!(j.value, f(x0), max_relative = 1e-14);
        assert_relative_eq!(j.d1, d1, max_relative = 1e-8);
        assert_relative_eq!(j.d2, d2, max_relative = 1e-6);
    }

    #[test]
    fn powf_and_recip() {
        let x = Jet2::variable(2.0);
        let j = x.powf(-0.25);
        let (d1, d2) = fd(|x| x.powf(-0.25), 2.0);
        assert_relative_eq!(j.d1, d1, max_relative = 1e-9);
        assert_relative_eq!(j.d2, d2, max_relative = 1e-7);
        let r = x.recip();
        assert_relative_eq!(r.d2, 2.0 / 8.0);
    }

    #[test]
    fn negative_base_integer_power() {
        let x = Jet2::variable(-1.5);
        let j = x.powi(3);
        assert_relative_eq!(j.value, -3.375);
        assert_relative_eq!(j.d1, 3.0 * 2.25);
        assert_relative_eq!(j.d2, 6.0 * -1.5);
        let k = x.powi(-2);
        assert_relative_eq!(k.d1, -2.0 * (-1.5f64).powi(-3));
    }
}
