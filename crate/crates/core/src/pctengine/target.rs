use super::TargetError;
use crate::eigensolver::{self, EigenResult, Grid, GridFunction};
use crate::error::Error;
use crate::massmodel::{Interval, Mapping, MassKind, MassProfile};
use crate::refpotentials::{ReferenceKind, ReferenceSystem};
use crate::scalar::Real;

/// Offset `δ·α` of the automatic lower edge above the Hulthén singularity:
/// the automatic domain starts where `f(x) = center + HULTHEN_EDGE / α`.
pub const HULTHEN_EDGE: f64 = 1e-9;

const MASS_SCAN: usize = 4001;

/// A mass profile combined with a reference system on a finite x-domain
/// whose image lies inside the reference domain.
#[derive(Debug, Clone)]
pub struct TargetSystem<T> {
    mapping: Mapping<T>,
    reference: ReferenceSystem<T>,
    domain: Interval<T>,
}

impl<T: Real> TargetSystem<T> {
    /// Target on the explicit domain `[lo, hi]`.
    pub fn new(profile: &MassProfile<T>, reference: ReferenceSystem<T>, lo: T, hi: T) -> Result<Self, Error> {
        let restricted = profile.restrict(lo, hi)?;
        let mapping = Mapping::new(restricted)?;
        let floor = reference.domain_lower();
        for x in [lo, hi] {
            let y = mapping.forward(x)?;
            if y.is_nan() || y <= floor {
                return Err(TargetError::ReferenceDomain {
                    x: x.to_f64_lossy(),
                    y: y.to_f64_lossy(),
                    lo: floor.to_f64_lossy(),
                }
                .into());
            }
        }
        Ok(Self {
            mapping,
            reference,
            domain: Interval::closed(lo, hi),
        })
    }

    /// Target on the pre-image of the reference window outside of which the
    /// lowest `levels` states are below `tol` of their peak.
    pub fn auto(
        profile: &MassProfile<T>,
        reference: ReferenceSystem<T>,
        levels: usize,
        tol: T,
    ) -> Result<Self, Error> {
        let (mut ylo, yhi) = reference.support_window(levels, tol)?;
        if reference.kind() == ReferenceKind::Hulthen {
            ylo = reference.center() + T::c(HULTHEN_EDGE) / reference.alpha();
        }
        let mapping = Mapping::new(profile.clone())?;
        let (ilo, ihi) = mapping.image();
        if !(ylo > ilo && yhi < ihi) {
            return Err(TargetError::ImageTooSmall {
                need_lo: ylo.to_f64_lossy(),
                need_hi: yhi.to_f64_lossy(),
                have_lo: ilo.to_f64_lossy(),
                have_hi: ihi.to_f64_lossy(),
            }
            .into());
        }
        let mut lo = mapping.inverse(ylo)?;
        let hi = mapping.inverse(yhi)?;
        let floor = reference.domain_lower();
        let nudge = T::c(4.0) * T::epsilon() * (T::one() + lo.abs());
        for _ in 0..64 {
            if mapping.forward(lo)? > floor {
                break;
            }
            lo = lo + nudge;
        }
        Self::new(profile, reference, lo, hi)
    }

    pub fn mapping(&self) -> &Mapping<T> {
        &self.mapping
    }

    /// The profile restricted to the target domain.
    pub fn profile(&self) -> &MassProfile<T> {
        self.mapping.profile()
    }

    pub fn reference(&self) -> &ReferenceSystem<T> {
        &self.reference
    }

    pub fn domain(&self) -> Interval<T> {
        self.domain
    }

    fn check(&self, x: T) -> Result<(), TargetError> {
        if self.domain.contains(x) {
            Ok(())
        } else {
            Err(TargetError::OutOfDomain {
                x: x.to_f64_lossy(),
                lo: self.domain.lo.to_f64_lossy(),
                hi: self.domain.hi.to_f64_lossy(),
            })
        }
    }

    fn image_of(&self, x: T) -> Result<T, Error> {
        self.check(x)?;
        let y = self.mapping.forward(x)?;
        let floor = self.reference.domain_lower();
        if (y.is_nan() || y <= floor) && self.reference.kind() == ReferenceKind::Hulthen {
            return Err(TargetError::ReferenceDomain {
                x: x.to_f64_lossy(),
                y: y.to_f64_lossy(),
                lo: floor.to_f64_lossy(),
            }
            .into());
        }
        Ok(y)
    }

    /// `V_ref(f(x)) + correction(x)`.
    pub fn target_potential_at(&self, x: T) -> Result<T, Error> {
        let y = self.image_of(x)?;
        Ok(self.reference.potential_at(y)? + self.profile().correction_potential(x)?)
    }

    /// The reference level `ε_n`, unchanged by the transformation.
    pub fn target_energy(&self, n: i64) -> Result<T, Error> {
        Ok(self.reference.closed_form_energy(n)?)
    }

    /// Unnormalized `m^{1/4} Φ_n(f(x))`.
    pub fn target_wavefunction_at(&self, n: i64, x: T) -> Result<T, Error> {
        let y = self.image_of(x)?;
        let m = self.profile().mass(x)?;
        Ok(m.sqrt().sqrt() * self.reference.eigenfunction_at(n, y)?)
    }

    pub fn mass_at(&self, x: T) -> Result<T, Error> {
        self.check(x)?;
        Ok(self.profile().mass(x)?)
    }

    /// Uniform grid spanning the target domain.
    pub fn grid(&self, n_points: usize) -> Result<Grid<T>, Error> {
        Ok(Grid::new(self.domain.lo, self.domain.hi, n_points)?)
    }

    /// Grid size for which one x-step covers at most `y_step` of the
    /// reference coordinate anywhere on the domain.
    pub fn suggest_points(&self, y_step: T) -> Result<usize, Error> {
        let d = self.domain;
        let mut peak = T::zero();
        for i in 0..MASS_SCAN {
            let x = d.lo + d.width() * T::c(i as f64 / (MASS_SCAN - 1) as f64);
            peak = peak.max(self.profile().mass(x.min(d.hi))?);
        }
        let h = y_step / peak.sqrt();
        Ok((d.width() / h).ceil().to_f64_lossy() as usize + 1)
    }

    /// Lowest `k` levels of the effective-mass Hamiltonian on `grid`.
    pub fn solve(&self, grid: &Grid<T>, k: usize) -> Result<EigenResult<T>, Error> {
        eigensolver::solve_effective_mass(
            |x| self.mass_at(x),
            |x| self.target_potential_at(x),
            grid,
            k,
        )
    }

    /// `Ψ_n` sampled on `grid`, unnormalized.
    pub fn wavefunction_on(&self, grid: &Grid<T>, n: i64) -> Result<GridFunction<T>, Error> {
        GridFunction::sample(grid, |x| self.target_wavefunction_at(n, x))
    }

    /// Effective-mass residual of the analytic `Ψ_n` on `grid`.
    pub fn wavefunction_residual(&self, grid: &Grid<T>, n: i64) -> Result<T, Error> {
        let psi = self.wavefunction_on(grid, n)?;
        eigensolver::residual_norm(
            |x| {
                self.check(x)?;
                Ok::<_, Error>(self.profile().mass_jet(x)?)
            },
            |x| self.target_potential_at(x),
            &psi,
            self.target_energy(n)?,
        )
    }
}

/// Moves the reference center so that the decay window of the lowest
/// `levels` states maps into the region where a hyperbolic profile is close
/// to its asymptotic value (`α(x - x₀) ≥ 2` with `x₀` the natural lower
/// edge). Other profiles, and windows already in that region, are returned
/// unchanged.
pub fn fit_reference_center<T: Real>(
    profile: &MassProfile<T>,
    reference: ReferenceSystem<T>,
    levels: usize,
    tol: T,
) -> Result<ReferenceSystem<T>, Error> {
    if !matches!(profile.kind(), MassKind::TanhSq | MassKind::CothSq) {
        return Ok(reference);
    }
    let (wlo, _) = reference.support_window(levels, tol)?;
    let mapping = Mapping::new(profile.clone())?;
    let safe = mapping.forward(profile.domain().lo + T::c(2.0) / profile.alpha())?;
    if wlo >= safe {
        return Ok(reference);
    }
    let c = reference.center() + (safe - wlo);
    Ok(reference.with_center(c)?)
}
