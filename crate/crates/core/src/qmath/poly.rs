use super::QMathError;
use crate::scalar::Real;

/// Generalized Laguerre polynomial `L_n^(t)(z)` by the ascending recurrence
///
/// ```text
/// (k + 1) L_{k+1} = (2k + 1 + t - z) L_k - (k + t) L_{k-1}
/// ```
pub fn laguerre_assoc<T: Real>(n: i32, t: T, z: T) -> Result<T, QMathError> {
    if n < 0 {
        return Err(QMathError::NegativeDegree(n));
    }
    let mut prev = T::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = T::one() + t - z;
    for k in 1..n {
        let kf = T::c(k as f64);
        let next = ((kf + kf + T::one() + t - z) * cur - (kf + t) * prev) / (kf + T::one());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Jacobi polynomial `P_n^(a,b)(z)` by the standard three-term recurrence.
///
/// The recurrence divides by `2k + a + b`, which stays positive for
/// `a, b > -1`; other parameters are evaluated as-is.
pub fn jacobi<T: Real>(n: i32, a: T, b: T, z: T) -> Result<T, QMathError> {
    if n < 0 {
        return Err(QMathError::NegativeDegree(n));
    }
    let one = T::one();
    let two = T::c(2.0);
    let mut prev = one;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = (a - b) / two + (a + b + two) * z / two;
    for k in 1..n {
        let kf = T::c(k as f64);
        let s = two * kf + a + b;
        let c1 = two * (kf + one) * (kf + a + b + one) * s;
        let c2 = (s + one) * (a * a - b * b);
        let c3 = s * (s + one) * (s + two);
        let c4 = two * (kf + a) * (kf + b) * (s + two);
        let next = ((c2 + c3 * z) * cur - c4 * prev) / c1;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_degrees() {
        assert_eq!(laguerre_assoc(0, 2.5, 0.3).unwrap(), 1.0);
        assert_relative_eq!(laguerre_assoc(1, 2.5, 0.3).unwrap(), 1.0 + 2.5 - 0.3);
        assert_eq!(jacobi(0, 1.5, 0.5, 0.3).unwrap(), 1.0);
        let (a, b, z) = (1.5, 0.5, 0.3);
        assert_relative_eq!(
            jacobi(1, a, b, z).unwrap(),
            (a - b) / 2.0 + (a + b + 2.0) * z / 2.0
        );
    }

    #[test]
    fn negative_degree_rejected() {
        assert_eq!(
            laguerre_assoc(-1, 0.0, 0.0),
            Err(QMathError::NegativeDegree(-1))
        );
        assert_eq!(jacobi(-2, 0.0, 0.0, 0.0), Err(QMathError::NegativeDegree(-2)));
    }

    #[test]
    fn legendre_special_case() {
        // P_2^(0,0) = (3z^2 - 1)/2
        let z = 0.37;
        assert_relative_eq!(
            jacobi(2, 0.0, 0.0, z).unwrap(),
            (3.0 * z * z - 1.0) / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn jacobi_endpoint_value() {
        // P_n^(a,b)(1) = binom(n + a, n)
        let (n, a, b) = (5, 1.5, 0.25);
        let mut expected = 1.0;
        for j in 1..=n {
            expected *= (a + j as f64) / j as f64;
        }
        assert_relative_eq!(jacobi(n, a, b, 1.0).unwrap(), expected, max_relative = 1e-13);
    }

    #[test]
    fn laguerre_at_origin() {
        // L_n^t(0) = binom(n + t, n)
        let (n, t) = (6, 2.5);
        let mut expected = 1.0;
        for j in 1..=n {
            expected *= (t + j as f64) / j as f64;
        }
        assert_relative_eq!(laguerre_assoc(n, t, 0.0).unwrap(), expected, max_relative = 1e-13);
    }
}
