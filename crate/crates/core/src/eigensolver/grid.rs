use super::EigenError;
use crate::error::Error;
use crate::scalar::Real;

pub const MIN_POINTS: usize = 16;

/// `n` equally spaced points from `lo` to `hi`, both ends included.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    lo: T,
    hi: T,
    n: usize,
}

impl<T: Real> Grid<T> {
    pub fn new(lo: T, hi: T, n: usize) -> Result<Self, EigenError> {
        if n < MIN_POINTS {
            return Err(EigenError::TooFewPoints { n, min: MIN_POINTS });
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(EigenError::InvalidBounds {
                lo: lo.to_f64_lossy(),
                hi: hi.to_f64_lossy(),
            });
        }
        Ok(Self { lo, hi, n })
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> T {
        (self.hi - self.lo) / T::c((self.n - 1) as f64)
    }

    /// The `i`-th point; the last one is exactly `hi`.
    pub fn x(&self, i: usize) -> T {
        if i + 1 == self.n {
            self.hi
        } else {
            self.lo + self.step() * T::c(i as f64)
        }
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |i| self.x(i))
    }
}

/// Samples of a real function on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    grid: Grid<T>,
    values: Vec<T>,
}

impl<T: Real> GridFunction<T> {
    pub fn new(grid: Grid<T>, values: Vec<T>) -> Result<Self, EigenError> {
        if values.len() != grid.len() {
            return Err(EigenError::GridMismatch);
        }
        Ok(Self { grid, values })
    }

    /// Evaluates `f` at every grid point.
    pub fn sample<F, E>(grid: &Grid<T>, f: F) -> Result<Self, Error>
    where
        F: Fn(T) -> Result<T, E>,
        E: Into<Error>,
    {
        let values = grid
            .points()
            .map(|x| f(x).map_err(Into::into))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            grid: grid.clone(),
            values,
        })
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    /// Trapezoid-rule `sqrt(∫ f² dx)`.
    pub fn norm(&self) -> T {
        trapezoid(self.grid.step(), self.values.iter().map(|v| *v * *v)).sqrt()
    }

    pub fn scale(&mut self, s: T) {
        for v in &mut self.values {
            *v = *v * s;
        }
    }

    /// Copy with unit trapezoid norm.
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        let n = self.norm();
        if n > T::zero() {
            out.scale(n.recip());
        }
        out
    }
}

pub(crate) fn trapezoid<T: Real>(h: T, samples: impl ExactSizeIterator<Item = T>) -> T {
    let last = samples.len().saturating_sub(1);
    let mut sum = T::zero();
    let mut comp = T::zero();
    for (i, s) in samples.enumerate() {
        let term = if i == 0 || i == last { T::c(0.5) * s } else { s } - comp;
        let next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    sum * h
}
