//! Finite-difference bound states on a uniform grid with Dirichlet ends.
//!
//! The constant-mass problem `-½Φ'' + VΦ = εΦ` and the effective-mass
//! problem `-½(Ψ'/m)' + VΨ = EΨ` share one flux-form discretization,
//!
//! ```text
//! (HΨ)_i = -(1/2h²) [a_{i+½}(Ψ_{i+1} - Ψ_i) - a_{i-½}(Ψ_i - Ψ_{i-1})] + V_i Ψ_i
//! ```
//!
//! with `a = 1/m` evaluated at the midpoints (`a ≡ 1` for constant mass).
//! The matrix is symmetric tridiagonal; eigenvalues come from Sturm-count
//! bisection and eigenvectors from inverse iteration.

mod grid;
mod tridiag;

pub use grid::{Grid, GridFunction};

use thiserror::Error;

use crate::error::Error;
use crate::exprlang::Jet2;
use crate::scalar::Real;
use tridiag::SymTridiag;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("grid needs at least {min} points, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("grid bounds [{lo}, {hi}] must be finite with lo < hi")]
    InvalidBounds { lo: f64, hi: f64 },
    #[error("requested {k} levels but the grid has only {available} interior points")]
    TooManyLevels { k: usize, available: usize },
    #[error("at least one level must be requested")]
    NoLevels,
    #[error("{what} is not finite at x = {x}")]
    NonFinite { what: &'static str, x: f64 },
    #[error("mass is not positive at x = {x} (m = {value})")]
    NonPositiveMass { x: f64, value: f64 },
    #[error("grid functions live on different grids")]
    GridMismatch,
}

/// Which operator produced an [`EigenResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassTreatment {
    Constant,
    Effective,
}

/// Lowest eigenpairs, ascending, each state normalized to unit trapezoid
/// norm with its first significant component positive.
#[derive(Debug, Clone)]
pub struct EigenResult<T> {
    pub energies: Vec<T>,
    pub states: Vec<GridFunction<T>>,
    pub grid: Grid<T>,
    pub treatment: MassTreatment,
}

impl<T: Real> EigenResult<T> {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    pub fn step(&self) -> T {
        self.grid.step()
    }
}

/// Lowest `k` eigenpairs of `-½Φ'' + VΦ`.
pub fn solve_constant_mass<T, V, E>(v: V, grid: &Grid<T>, k: usize) -> Result<EigenResult<T>, Error>
where
    T: Real,
    V: Fn(T) -> Result<T, E>,
    E: Into<Error>,
{
    let a = vec![T::one(); grid.len() - 1];
    solve(&a, v, grid, k, MassTreatment::Constant)
}

/// Lowest `k` eigenpairs of `-½(Ψ'/m)' + VΨ`. The mass is sampled at the
/// cell midpoints only.
pub fn solve_effective_mass<T, M, V, E1, E2>(
    m: M,
    v: V,
    grid: &Grid<T>,
    k: usize,
) -> Result<EigenResult<T>, Error>
where
    T: Real,
    M: Fn(T) -> Result<T, E1>,
    V: Fn(T) -> Result<T, E2>,
    E1: Into<Error>,
    E2: Into<Error>,
{
    let h = grid.step();
    let mut a = Vec::with_capacity(grid.len() - 1);
    for i in 0..grid.len() - 1 {
        let x = grid.x(i) + T::c(0.5) * h;
        let mi = m(x).map_err(Into::into)?;
        if !mi.is_finite() {
            return Err(EigenError::NonFinite { what: "mass", x: x.to_f64_lossy() }.into());
        }
        if mi <= T::zero() {
            return Err(EigenError::NonPositiveMass {
                x: x.to_f64_lossy(),
                value: mi.to_f64_lossy(),
            }
            .into());
        }
        a.push(mi.recip());
    }
    solve(&a, v, grid, k, MassTreatment::Effective)
}

fn solve<T, V, E>(
    a: &[T],
    v: V,
    grid: &Grid<T>,
    k: usize,
    treatment: MassTreatment,
) -> Result<EigenResult<T>, Error>
where
    T: Real,
    V: Fn(T) -> Result<T, E>,
    E: Into<Error>,
{
    let n = grid.len() - 2;
    if k == 0 {
        return Err(EigenError::NoLevels.into());
    }
    if k > n {
        return Err(EigenError::TooManyLevels { k, available: n }.into());
    }
    let h = grid.step();
    let inv = T::one() / (T::c(2.0) * h * h);
    let mut diag = Vec::with_capacity(n);
    for i in 1..=n {
        let x = grid.x(i);
        let vi = v(x).map_err(Into::into)?;
        if !vi.is_finite() {
            return Err(EigenError::NonFinite { what: "potential", x: x.to_f64_lossy() }.into());
        }
        diag.push((a[i - 1] + a[i]) * inv + vi);
    }
    let off: Vec<T> = (1..n).map(|i| -a[i] * inv).collect();
    let matrix = SymTridiag::new(diag, off);

    let energies = matrix.lowest_eigenvalues(k);
    let vectors = matrix.eigenvectors(&energies);
    let states = vectors
        .into_iter()
        .map(|interior| {
            let mut values = Vec::with_capacity(grid.len());
            values.push(T::zero());
            values.extend(interior);
            values.push(T::zero());
            let f = GridFunction::new(grid.clone(), values).expect("length matches grid");
            canonical_sign(f.normalized())
        })
        .collect();
    Ok(EigenResult {
        energies,
        states,
        grid: grid.clone(),
        treatment,
    })
}

fn canonical_sign<T: Real>(mut f: GridFunction<T>) -> GridFunction<T> {
    let peak = f.max_abs();
    let first = f
        .values()
        .iter()
        .copied()
        .find(|v| v.abs() > T::c(1e-3) * peak)
        .unwrap_or_else(T::one);
    if first < T::zero() {
        f.scale(-T::one());
    }
    f
}

/// Max-norm of `Ψ'' - (m'/m)Ψ' + 2m(E - V)Ψ` over the points where a
/// five-point stencil fits, relative to `max|Ψ|`. `m` supplies the mass and
/// its derivative as a jet.
pub fn residual_norm<T, M, V, E1, E2>(m: M, v: V, psi: &GridFunction<T>, e: T) -> Result<T, Error>
where
    T: Real,
    M: Fn(T) -> Result<Jet2<T>, E1>,
    V: Fn(T) -> Result<T, E2>,
    E1: Into<Error>,
    E2: Into<Error>,
{
    let grid = psi.grid();
    let p = psi.values();
    let h = grid.step();
    let (c8, c12, c16, c30) = (T::c(8.0), T::c(12.0), T::c(16.0), T::c(30.0));
    let mut worst = T::zero();
    for i in 2..grid.len() - 2 {
        let x = grid.x(i);
        let d1 = (p[i - 2] - c8 * p[i - 1] + c8 * p[i + 1] - p[i + 2]) / (c12 * h);
        let d2 = (-p[i - 2] + c16 * p[i - 1] - c30 * p[i] + c16 * p[i + 1] - p[i + 2])
            / (c12 * h * h);
        let mj = m(x).map_err(Into::into)?;
        let vi = v(x).map_err(Into::into)?;
        let r = d2 - mj.d1 / mj.value * d1 + T::c(2.0) * mj.value * (e - vi) * p[i];
        if !r.is_finite() {
            return Err(EigenError::NonFinite { what: "residual", x: x.to_f64_lossy() }.into());
        }
        worst = worst.max(r.abs());
    }
    Ok(worst / psi.max_abs())
}

/// Trapezoid-rule `∫ ψ_a ψ_b dx`.
pub fn overlap<T: Real>(a: &GridFunction<T>, b: &GridFunction<T>) -> Result<T, EigenError> {
    if a.grid() != b.grid() {
        return Err(EigenError::GridMismatch);
    }
    Ok(grid::trapezoid(a.grid().step(), a.values().iter().zip(b.values()).map(|(x, y)| *x * *y)))
}

/// Sign changes of `f`, skipping samples below `rel · max|f|`.
pub fn node_count<T: Real>(f: &GridFunction<T>, rel: T) -> usize {
    let floor = rel * f.max_abs();
    let mut last = T::zero();
    let mut nodes = 0;
    for &v in f.values() {
        if v.abs() <= floor {
            continue;
        }
        if last != T::zero() && (v > T::zero()) != (last > T::zero()) {
            nodes += 1;
        }
        last = v;
    }
    nodes
}

#[cfg(test)]
mod tests;
