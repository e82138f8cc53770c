use super::QMathError;
use crate::scalar::Real;

fn finite<T: Real>(func: &'static str, x: T, v: T) -> Result<T, QMathError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(QMathError::Range {
            func,
            x: x.to_f64_lossy(),
        })
    }
}

fn ratio<T: Real>(func: &'static str, x: T, num: T, den: T) -> Result<T, QMathError> {
    if den.abs() < T::pole_threshold() {
        return Err(QMathError::Pole {
            func,
            x: x.to_f64_lossy(),
            denominator: den.to_f64_lossy(),
        });
    }
    finite(func, x, num / den)
}

/// `(e^x + q e^-x) / 2`
pub fn cosh_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let half = T::c(0.5);
    finite("cosh_q", x, half * x.exp() + half * q * (-x).exp())
}

/// `(e^x - q e^-x) / 2`
pub fn sinh_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let half = T::c(0.5);
    finite("sinh_q", x, half * x.exp() - half * q * (-x).exp())
}

/// `sinh_q / cosh_q`, evaluated as `(1 - q e^-2x) / (1 + q e^-2x)` for
/// `x >= 0` (and the mirrored form otherwise) so that it saturates instead
/// of overflowing.
pub fn tanh_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let (num, den) = if x >= T::zero() {
        let w = q * (-(x + x)).exp();
        (T::one() - w, T::one() + w)
    } else {
        let w = (x + x).exp();
        (w - q, w + q)
    };
    ratio("tanh_q", x, num, den)
}

/// `cosh_q / sinh_q`
pub fn coth_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let (num, den) = if x >= T::zero() {
        let w = q * (-(x + x)).exp();
        (T::one() + w, T::one() - w)
    } else {
        let w = (x + x).exp();
        (w + q, w - q)
    };
    ratio("coth_q", x, num, den)
}

/// `1 / cosh_q`
pub fn sech_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let c = cosh_q(x, q).map_err(|_| QMathError::Range {
        func: "sech_q",
        x: x.to_f64_lossy(),
    })?;
    ratio("sech_q", x, T::one(), c)
}

/// `1 / sinh_q`
pub fn csch_q<T: Real>(x: T, q: T) -> Result<T, QMathError> {
    let s = sinh_q(x, q).map_err(|_| QMathError::Range {
        func: "csch_q",
        x: x.to_f64_lossy(),
    })?;
    ratio("csch_q", x, T::one(), s)
}

/// Inverse of [`sinh_q`]: `ln(y + sqrt(y^2 + q))`.
///
/// For `q > 0` this is a bijection of the reals. For `q <= 0` only the
/// increasing branch `y + sqrt(y^2 + q) > 0` is returned.
pub fn arcsinh_q<T: Real>(y: T, q: T) -> Result<T, QMathError> {
    let domain = || QMathError::Domain {
        func: "arcsinh_q",
        arg: y.to_f64_lossy(),
        q: q.to_f64_lossy(),
    };
    let disc = y * y + q;
    if disc < T::zero() || !disc.is_finite() {
        return Err(domain());
    }
    let root = disc.sqrt();
    let arg = if y >= T::zero() {
        y + root
    } else if q > T::zero() {
        // y + root suffers cancellation here; use q / (root - y).
        q / (root - y)
    } else {
        y + root
    };
    if arg <= T::zero() {
        return Err(domain());
    }
    finite("arcsinh_q", y, arg.ln())
}

/// Inverse of [`cosh_q`] on the branch where `sinh_q >= 0`:
/// `ln(w + sqrt(w^2 - q))`, defined for `w^2 >= q` and `w > 0`.
pub fn arccosh_q<T: Real>(w: T, q: T) -> Result<T, QMathError> {
    let disc = w * w - q;
    if disc < T::zero() || w <= T::zero() || !disc.is_finite() {
        return Err(QMathError::Domain {
            func: "arccosh_q",
            arg: w.to_f64_lossy(),
            q: q.to_f64_lossy(),
        });
    }
    finite("arccosh_q", w, (w + disc.sqrt()).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn trivial_values() {
        assert_eq!(cosh_q(0.0, 1.0).unwrap(), 1.0);
        assert_eq!(cosh_q(0.0, 3.0).unwrap(), 2.0);
        assert_eq!(sinh_q(0.0, 1.0).unwrap(), 0.0);
        assert_eq!(sinh_q(0.0, 3.0).unwrap(), -1.0);
        assert_eq!(arcsinh_q(0.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn cosh_q_against_direct_formula() {
        let e = std::f64::consts::E;
        assert_relative_eq!(
            cosh_q(1.0, 0.5).unwrap(),
            (e + 0.5 / e) / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn deformed_pythagoras_at_sample_point() {
        let (c, s) = (cosh_q(0.7f64, 2.0).unwrap(), sinh_q(0.7f64, 2.0).unwrap());
        assert!((c * c - s * s - 2.0).abs() < 1e-14);
    }

    #[test]
    fn tanh_q_saturates() {
        for q in [0.1f64, 1.0, 7.0] {
            assert_eq!(tanh_q(800.0, q).unwrap(), 1.0);
            assert!((tanh_q(40.0, q).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn coth_one_is_coth() {
        assert_relative_eq!(
            coth_q(1.0, 1.0).unwrap(),
            1.0f64.cosh() / 1.0f64.sinh(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn csch_q_pole_at_sinh_zero() {
        // sinh_q vanishes where e^x = q e^-x, i.e. x = ln sqrt(q); q = 1 puts it at 0.
        assert!(matches!(csch_q(0.0, 1.0), Err(QMathError::Pole { .. })));
        assert!(matches!(coth_q(0.0, 1.0), Err(QMathError::Pole { .. })));
        // Off the exact zero the value is returned as-is.
        let x = 0.5 * 4.0f64.ln();
        assert!(csch_q(x + 1e-9, 4.0).unwrap().abs() > 1e8);
    }

    #[test]
    fn overflow_is_a_range_error() {
        assert!(matches!(cosh_q(1000.0, 1.0), Err(QMathError::Range { .. })));
        assert!(matches!(sinh_q(-1000.0, 1.0), Err(QMathError::Range { .. })));
    }

    #[test]
    fn arcsinh_q_closed_forms() {
        assert_relative_eq!(arcsinh_q(1.0, 0.0).unwrap(), 2.0f64.ln(), max_relative = 1e-15);
        let y = sinh_q(1.3f64, 2.0).unwrap();
        assert!((arcsinh_q(y, 2.0).unwrap() - 1.3).abs() < 1e-12);
        // Far left tail keeps full accuracy.
        let y = sinh_q(-20.0, 2.0).unwrap();
        assert_relative_eq!(arcsinh_q(y, 2.0).unwrap(), -20.0, max_relative = 1e-14);
    }

    #[test]
    fn inverse_domain_errors() {
        assert!(matches!(
            arcsinh_q(0.5, -1.0),
            Err(QMathError::Domain { .. })
        ));
        assert!(matches!(
            arcsinh_q(-2.0, -1.0),
            Err(QMathError::Domain { .. })
        ));
        assert!(matches!(arccosh_q(1.0, 2.0), Err(QMathError::Domain { .. })));
        assert!(arcsinh_q(-1.0, 0.0).is_err());
    }

    #[test]
    fn arccosh_q_round_trip() {
        for &(x, q) in &[(0.9f64, 0.5), (2.0, 1.0), (3.0, 4.0)] {
            let w = cosh_q(x, q).unwrap();
            assert!((arccosh_q(w, q).unwrap() - x).abs() < 1e-12);
        }
    }

    #[test]
    fn works_in_single_precision() {
        let c: f32 = cosh_q(0.5f32, 2.0).unwrap();
        let s: f32 = sinh_q(0.5f32, 2.0).unwrap();
        assert!((c * c - s * s - 2.0).abs() < 1e-5);
    }
}
