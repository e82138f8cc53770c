use std::sync::Arc;

use super::MassError;
use crate::exprlang::{eval_jet, Expr, Jet2, ParamTable};
use crate::qmath;
use crate::scalar::Real;

/// Which mass distribution a profile follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MassKind {
    /// `m(x) = alpha^2 / (x^2 + q)`
    AsymptoticallyVanishing,
    /// `m(x) = tanh_q(alpha x)^2`
    TanhSq,
    /// `m(x) = coth_q(alpha x)^2`
    CothSq,
    /// User expression in `x`.
    Custom,
}

impl MassKind {
    pub const BUILT_IN: [MassKind; 3] = [
        MassKind::AsymptoticallyVanishing,
        MassKind::TanhSq,
        MassKind::CothSq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MassKind::AsymptoticallyVanishing => "asymptotically_vanishing",
            MassKind::TanhSq => "tanh_sq",
            MassKind::CothSq => "coth_sq",
            MassKind::Custom => "custom",
        }
    }
}

/// Closed interval of admissible positions. The lower end may be open
/// (`lower_open`), which the hyperbolic profiles use for the point where
/// `sinh_q(alpha x)` vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
    pub lower_open: bool,
}

impl<T: Real> Interval<T> {
    pub fn closed(lo: T, hi: T) -> Self {
        Self {
            lo,
            hi,
            lower_open: false,
        }
    }

    pub fn contains(&self, x: T) -> bool {
        let above = if self.lower_open { x > self.lo } else { x >= self.lo };
        above && x <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> T {
        T::c(0.5) * (self.lo + self.hi)
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Shape<T> {
    Vanishing,
    TanhSq,
    CothSq,
    Custom {
        expr: Arc<Expr>,
        params: ParamTable<T>,
        anchor: T,
    },
}

const POSITIVITY_SAMPLES: usize = 1001;

/// A strictly positive, twice-differentiable mass function on a domain.
///
/// Built-in profiles carry hand-derived jets; custom profiles differentiate
/// their expression with [`eval_jet`]. Profiles are immutable; narrowing the
/// domain with [`MassProfile::restrict`] returns a new value.
#[derive(Debug, Clone)]
pub struct MassProfile<T> {
    pub(crate) shape: Shape<T>,
    alpha: T,
    q: T,
    domain: Interval<T>,
}

fn check_positive<T: Real>(name: &'static str, v: T) -> Result<(), MassError> {
    if v.is_finite() && v > T::zero() {
        Ok(())
    } else {
        Err(MassError::InvalidParameter {
            name,
            value: v.to_f64_lossy(),
            reason: "must be finite and > 0",
        })
    }
}

impl<T: Real> MassProfile<T> {
    fn built_in(shape: Shape<T>, alpha: T, q: T) -> Result<Self, MassError> {
        check_positive("alpha", alpha)?;
        check_positive("q", q)?;
        let domain = match shape {
            Shape::Vanishing => Interval::closed(T::neg_infinity(), T::infinity()),
            _ => {
                // sinh_q(alpha x) = 0 at x = ln(q) / (2 alpha); positions are
                // also kept strictly positive.
                let x0 = q.ln() / (alpha + alpha);
                Interval {
                    lo: x0.max(T::zero()),
                    hi: T::infinity(),
                    lower_open: true,
                }
            }
        };
        Ok(Self {
            shape,
            alpha,
            q,
            domain,
        })
    }

    /// `alpha^2 / (x^2 + q)` on the whole real line.
    pub fn asymptotically_vanishing(alpha: T, q: T) -> Result<Self, MassError> {
        Self::built_in(Shape::Vanishing, alpha, q)
    }

    /// `tanh_q(alpha x)^2` for `x > max(0, ln(q) / 2 alpha)`.
    pub fn tanh_sq(alpha: T, q: T) -> Result<Self, MassError> {
        Self::built_in(Shape::TanhSq, alpha, q)
    }

    /// `coth_q(alpha x)^2` for `x > max(0, ln(q) / 2 alpha)`.
    pub fn coth_sq(alpha: T, q: T) -> Result<Self, MassError> {
        Self::built_in(Shape::CothSq, alpha, q)
    }

    pub fn built_in_kind(kind: MassKind, alpha: T, q: T) -> Result<Self, MassError> {
        match kind {
            MassKind::AsymptoticallyVanishing => Self::asymptotically_vanishing(alpha, q),
            MassKind::TanhSq => Self::tanh_sq(alpha, q),
            MassKind::CothSq => Self::coth_sq(alpha, q),
            MassKind::Custom => Err(MassError::MissingExpression),
        }
    }

    /// Expression-defined profile on a finite domain. `params` must bind every
    /// identifier other than `x`; `alpha` and `q` are reported by the
    /// accessors when present (NaN otherwise).
    pub fn custom(expr: Expr, params: ParamTable<T>, domain: Interval<T>) -> Result<Self, MassError> {
        if !domain.is_finite() || domain.lo >= domain.hi {
            return Err(MassError::InvalidDomain {
                lo: domain.lo.to_f64_lossy(),
                hi: domain.hi.to_f64_lossy(),
                reason: "custom profiles need a finite domain with lo < hi",
            });
        }
        for name in expr.parameters() {
            if !params.contains_key(&name) {
                return Err(MassError::Expr(crate::exprlang::ExprError::UnboundParameter(name)));
            }
        }
        let alpha = params.get("alpha").copied().unwrap_or_else(T::nan);
        let q = params.get("q").copied().unwrap_or_else(T::nan);
        let profile = Self {
            shape: Shape::Custom {
                expr: Arc::new(expr),
                params,
                anchor: domain.midpoint(),
            },
            alpha,
            q,
            domain: Interval::closed(domain.lo, domain.hi),
        };
        profile.check_samples()?;
        Ok(profile)
    }

    /// Same profile on the finite sub-interval `[lo, hi]`.
    pub fn restrict(&self, lo: T, hi: T) -> Result<Self, MassError> {
        let bad = |reason| MassError::InvalidDomain {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
            reason,
        };
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(bad("need finite bounds with lo < hi"));
        }
        if !self.domain.contains(lo) || !self.domain.contains(hi) {
            return Err(bad("interval leaves the profile's admissible domain"));
        }
        let mut out = self.clone();
        out.domain = Interval::closed(lo, hi);
        out.check_samples()?;
        Ok(out)
    }

    fn check_samples(&self) -> Result<(), MassError> {
        if !self.domain.is_finite() {
            return Ok(());
        }
        let n = POSITIVITY_SAMPLES - 1;
        let h = self.domain.width() / T::c(n as f64);
        for i in 0..=n {
            let x = if i == n {
                self.domain.hi
            } else {
                self.domain.lo + h * T::c(i as f64)
            };
            self.mass_jet(x)?;
        }
        Ok(())
    }

    pub fn kind(&self) -> MassKind {
        match self.shape {
            Shape::Vanishing => MassKind::AsymptoticallyVanishing,
            Shape::TanhSq => MassKind::TanhSq,
            Shape::CothSq => MassKind::CothSq,
            Shape::Custom { .. } => MassKind::Custom,
        }
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn domain(&self) -> Interval<T> {
        self.domain
    }

    pub fn expression(&self) -> Option<&Expr> {
        match &self.shape {
            Shape::Custom { expr, .. } => Some(expr),
            _ => None,
        }
    }

    fn check_domain(&self, x: T) -> Result<(), MassError> {
        if self.domain.contains(x) {
            Ok(())
        } else {
            Err(MassError::OutOfDomain {
                x: x.to_f64_lossy(),
                lo: self.domain.lo.to_f64_lossy(),
                hi: self.domain.hi.to_f64_lossy(),
            })
        }
    }

    /// `(m, m', m'')` at `x`.
    pub fn mass_jet(&self, x: T) -> Result<Jet2<T>, MassError> {
        self.check_domain(x)?;
        let j = self.raw_jet(x)?;
        if !j.is_finite() {
            return Err(MassError::NonFiniteMass { x: x.to_f64_lossy() });
        }
        if j.value <= T::zero() {
            return Err(MassError::NonPositiveMass {
                x: x.to_f64_lossy(),
                value: j.value.to_f64_lossy(),
            });
        }
        Ok(j)
    }

    pub fn mass(&self, x: T) -> Result<T, MassError> {
        self.mass_jet(x).map(|j| j.value)
    }

    /// Mass without the domain check, for the midpoint and boundary
    /// evaluations of the discretization. Fails only where the formula does.
    pub(crate) fn raw_jet(&self, x: T) -> Result<Jet2<T>, MassError> {
        let (a, q) = (self.alpha, self.q);
        let two = T::c(2.0);
        Ok(match &self.shape {
            Shape::Vanishing => {
                let d = x * x + q;
                let a2 = a * a;
                Jet2::new(
                    a2 / d,
                    -two * a2 * x / (d * d),
                    a2 * (T::c(6.0) * x * x - two * q) / (d * d * d),
                )
            }
            Shape::TanhSq => {
                let u = a * x;
                let t = qmath::tanh_q(u, q)?;
                let c = qmath::cosh_q(u, q)?;
                let s = qmath::sinh_q(u, q)?;
                let c2 = c * c;
                Jet2::new(
                    t * t,
                    two * a * q * t / c2,
                    two * a * a * q * (q - two * s * s) / (c2 * c2),
                )
            }
            Shape::CothSq => {
                let u = a * x;
                let k = qmath::coth_q(u, q)?;
                let c = qmath::cosh_q(u, q)?;
                let s = qmath::sinh_q(u, q)?;
                let s2 = s * s;
                Jet2::new(
                    k * k,
                    -two * a * q * c / (s2 * s),
                    two * a * a * q * (q + two * c * c) / (s2 * s2),
                )
            }
            Shape::Custom { expr, params, .. } => eval_jet(expr, x, params)?,
        })
    }

    /// Additive potential produced by the transformation:
    /// `(1 / 8m) [m''/m - (7/4) (m'/m)^2]`.
    pub fn correction_potential(&self, x: T) -> Result<T, MassError> {
        Ok(correction_from_jet(self.mass_jet(x)?))
    }
}

/// The correction term for a given mass jet.
pub fn correction_from_jet<T: Real>(m: Jet2<T>) -> T {
    let r1 = m.d1 / m.value;
    let r2 = m.d2 / m.value;
    (r2 - T::c(1.75) * r1 * r1) / (T::c(8.0) * m.value)
}
