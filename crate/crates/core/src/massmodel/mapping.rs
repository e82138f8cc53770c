use super::profile::{MassProfile, Shape};
use super::quadrature::adaptive_simpson;
use super::MassError;
use crate::qmath;
use crate::scalar::Real;

const TABLE_SEGMENTS: usize = 256;
const QUAD_TOL: f64 = 1e-11;
const BISECTION_TOL: f64 = 1e-12;

/// `y = f(x) = ∫ sqrt(m) dx`, strictly increasing on the profile's domain.
///
/// Built-in profiles use closed forms with the integration constant fixed to
/// zero:
///
/// ```text
/// vanishing:  f(x) = alpha ln(x + sqrt(x^2 + q))       x = sinh_q(y / alpha)
/// tanh_sq:    f(x) = ln(cosh_q(alpha x)) / alpha        x = arccosh_q(e^(alpha y)) / alpha
/// coth_sq:    f(x) = ln(sinh_q(alpha x)) / alpha        x = arcsinh_q(e^(alpha y)) / alpha
/// ```
///
/// Custom profiles integrate `sqrt(m)` numerically from the midpoint of their
/// declared domain, through a node table built at construction that also
/// brackets the inverse.
#[derive(Debug, Clone)]
pub struct Mapping<T> {
    profile: MassProfile<T>,
    table: Option<Table<T>>,
}

#[derive(Debug, Clone)]
struct Table<T> {
    nodes: Vec<T>,
    values: Vec<T>,
}

impl<T: Real> Mapping<T> {
    pub fn new(profile: MassProfile<T>) -> Result<Self, MassError> {
        let table = match &profile.shape {
            Shape::Custom { anchor, .. } => Some(build_table(&profile, *anchor)?),
            _ => None,
        };
        Ok(Self { profile, table })
    }

    pub fn profile(&self) -> &MassProfile<T> {
        &self.profile
    }

    /// `f(x)`.
    pub fn forward(&self, x: T) -> Result<T, MassError> {
        let d = self.profile.domain();
        if !d.contains(x) {
            return Err(MassError::OutOfDomain {
                x: x.to_f64_lossy(),
                lo: d.lo.to_f64_lossy(),
                hi: d.hi.to_f64_lossy(),
            });
        }
        self.forward_unchecked(x)
    }

    /// `f'(x) = sqrt(m(x))`.
    pub fn derivative(&self, x: T) -> Result<T, MassError> {
        Ok(self.profile.mass(x)?.sqrt())
    }

    fn forward_unchecked(&self, x: T) -> Result<T, MassError> {
        let p = &self.profile;
        let (a, q) = (p.alpha(), p.q());
        let half = T::c(0.5);
        let v = match &p.shape {
            Shape::Vanishing => a * qmath::arcsinh_q(x, q)?,
            // ln cosh_q(u) = u + ln((1 + q e^-2u) / 2), free of overflow.
            Shape::TanhSq => x + (half * (T::one() + q * (-(a * x + a * x)).exp())).ln() / a,
            Shape::CothSq => x + (half * (T::one() - q * (-(a * x + a * x)).exp())).ln() / a,
            Shape::Custom { .. } => {
                let t = self.table.as_ref().expect("custom mapping has a table");
                let k = locate(&t.nodes, x);
                t.values[k] + integrate(p, t.nodes[k], x)?
            }
        };
        Ok(v)
    }

    /// `[f(lo), f(hi)]` over the profile's domain; may be infinite.
    pub fn image(&self) -> (T, T) {
        let d = self.profile.domain();
        let lo = if d.lo.is_infinite()
            || (d.lower_open
                && matches!(self.profile.shape, Shape::CothSq)
                && self.profile.q() >= T::one())
        {
            T::neg_infinity()
        } else {
            self.forward_unchecked(d.lo).unwrap_or(T::neg_infinity())
        };
        let hi = if d.hi.is_infinite() {
            T::infinity()
        } else {
            self.forward_unchecked(d.hi).unwrap_or(T::infinity())
        };
        (lo, hi)
    }

    /// The unique `x` in the domain with `f(x) = y`.
    pub fn inverse(&self, y: T) -> Result<T, MassError> {
        let (ylo, yhi) = self.image();
        let out_of_range = || MassError::OutOfRange {
            y: y.to_f64_lossy(),
            lo: ylo.to_f64_lossy(),
            hi: yhi.to_f64_lossy(),
        };
        let d = self.profile.domain();
        let p = &self.profile;
        let (a, q) = (p.alpha(), p.q());
        let x = match &p.shape {
            Shape::Vanishing => qmath::sinh_q(y / a, q)?,
            Shape::TanhSq => {
                // arccosh_q(e^(a y)) / a = y + ln(1 + sqrt(1 - q e^(-2 a y))) / a
                let w = q * (-(a * y + a * y)).exp();
                if w.is_nan() || w > T::one() {
                    return Err(out_of_range());
                }
                y + ((T::one() - w).sqrt()).ln_1p() / a
            }
            Shape::CothSq => {
                let ay = a * y;
                if ay > T::zero() {
                    y + ((T::one() + q * (-(ay + ay)).exp()).sqrt()).ln_1p() / a
                } else {
                    qmath::arcsinh_q(ay.exp(), q)? / a
                }
            }
            Shape::Custom { .. } => {
                if !(y >= ylo && y <= yhi) {
                    return Err(out_of_range());
                }
                return self.bisect(y);
            }
        };
        if !d.contains(x) {
            // Rounding right at a domain edge.
            let near = |edge: T| {
                edge.is_finite() && (x - edge).abs() <= T::c(8.0) * T::epsilon() * (T::one() + edge.abs())
            };
            if near(d.lo) && !d.lower_open {
                return Ok(d.lo);
            }
            if near(d.hi) {
                return Ok(d.hi);
            }
            return Err(out_of_range());
        }
        Ok(x)
    }

    fn bisect(&self, y: T) -> Result<T, MassError> {
        let t = self.table.as_ref().expect("custom mapping has a table");
        let k = locate(&t.values, y);
        let (mut lo, mut hi) = (t.nodes[k], t.nodes[(k + 1).min(t.nodes.len() - 1)]);
        let tol = T::c(BISECTION_TOL);
        while hi - lo > tol * (T::one() + lo.abs().max(hi.abs())) {
            let mid = T::c(0.5) * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.forward_unchecked(mid)? < y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(T::c(0.5) * (lo + hi))
    }
}

fn integrate<T: Real>(p: &MassProfile<T>, a: T, b: T) -> Result<T, MassError> {
    let tol = T::c(QUAD_TOL / TABLE_SEGMENTS as f64);
    adaptive_simpson(|x| p.raw_jet(x).map(|j| j.value.sqrt()), a, b, tol)
}

fn build_table<T: Real>(p: &MassProfile<T>, anchor: T) -> Result<Table<T>, MassError> {
    let d = p.domain();
    let h = d.width() / T::c(TABLE_SEGMENTS as f64);
    let nodes: Vec<T> = (0..=TABLE_SEGMENTS)
        .map(|i| {
            if i == TABLE_SEGMENTS {
                d.hi
            } else {
                d.lo + h * T::c(i as f64)
            }
        })
        .collect();
    let mut values = Vec::with_capacity(nodes.len());
    let mut acc = integrate(p, anchor, nodes[0])?;
    values.push(acc);
    for w in nodes.windows(2) {
        acc = acc + integrate(p, w[0], w[1])?;
        values.push(acc);
    }
    Ok(Table { nodes, values })
}

/// Index `k` with `xs[k] <= v < xs[k+1]`, clamped to the table.
fn locate<T: Real>(xs: &[T], v: T) -> usize {
    let k = xs.partition_point(|&n| n <= v);
    k.saturating_sub(1).min(xs.len() - 2)
}
