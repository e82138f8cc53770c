use crate::scalar::Real;

const INVERSE_ITERATIONS: usize = 3;

/// Symmetric tridiagonal matrix with diagonal `d` and off-diagonal `e`.
pub(crate) struct SymTridiag<T> {
    d: Vec<T>,
    e: Vec<T>,
}

impl<T: Real> SymTridiag<T> {
    pub fn new(d: Vec<T>, e: Vec<T>) -> Self {
        debug_assert_eq!(e.len() + 1, d.len());
        Self { d, e }
    }

    fn len(&self) -> usize {
        self.d.len()
    }

    fn gershgorin(&self) -> (T, T) {
        let n = self.len();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let r = if i > 0 { self.e[i - 1].abs() } else { T::zero() }
                + if i + 1 < n { self.e[i].abs() } else { T::zero() };
            lo = lo.min(self.d[i] - r);
            hi = hi.max(self.d[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x`.
    fn count_below(&self, x: T) -> usize {
        let tiny = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut q = self.d[0] - x;
        for i in 0..self.len() {
            if i > 0 {
                let e = self.e[i - 1];
                q = self.d[i] - x - e * e / q;
            }
            if q == T::zero() {
                q = -tiny;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// The `k` smallest eigenvalues, ascending, bisected to full precision.
    pub fn lowest_eigenvalues(&self, k: usize) -> Vec<T> {
        let (glo, ghi) = self.gershgorin();
        let pad = T::epsilon() * (glo.abs() + ghi.abs()) + T::min_positive_value();
        let (glo, ghi) = (glo - pad, ghi + pad);
        let half = T::c(0.5);
        let mut out = Vec::with_capacity(k);
        let mut floor = glo;
        for j in 0..k {
            let (mut lo, mut hi) = (floor, ghi);
            for _ in 0..512 {
                let mid = half * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let lambda = half * (lo + hi);
            out.push(lambda);
            floor = lo;
        }
        out
    }

    /// Unit eigenvectors (Euclidean norm) for the given eigenvalues.
    pub fn eigenvectors(&self, values: &[T]) -> Vec<Vec<T>> {
        let n = self.len();
        let (glo, ghi) = self.gershgorin();
        let scale = glo.abs().max(ghi.abs()).max(T::one());
        let mut out: Vec<Vec<T>> = Vec::with_capacity(values.len());
        for &lambda in values {
            let lu = ShiftedLu::factor(&self.d, &self.e, lambda, T::epsilon() * scale);
            let mut v: Vec<T> = (0..n).map(|i| start_component(i)).collect();
            for _ in 0..INVERSE_ITERATIONS {
                lu.solve(&mut v);
                for prev in &out {
                    let dot = dot(prev, &v);
                    for (x, p) in v.iter_mut().zip(prev) {
                        *x = *x - dot * *p;
                    }
                }
                let norm = dot(&v, &v).sqrt();
                for x in &mut v {
                    *x = *x / norm;
                }
            }
            out.push(v);
        }
        out
    }
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |s, (x, y)| s + *x * *y)
}

/// Deterministic start vector without the symmetries of the eigenvectors.
fn start_component<T: Real>(i: usize) -> T {
    let s = ((i as u64).wrapping_mul(2654435761) % 1000) as f64 / 1000.0;
    T::c(0.5 + s)
}

/// LU factorization of `T - λI` with partial pivoting.
struct ShiftedLu<T> {
    dl: Vec<T>,
    d: Vec<T>,
    du: Vec<T>,
    du2: Vec<T>,
    swapped: Vec<bool>,
}

impl<T: Real> ShiftedLu<T> {
    fn factor(diag: &[T], off: &[T], lambda: T, tiny: T) -> Self {
        let n = diag.len();
        let mut d: Vec<T> = diag.iter().map(|v| *v - lambda).collect();
        let mut dl = off.to_vec();
        let mut du = off.to_vec();
        let mut du2 = vec![T::zero(); n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] != T::zero() {
                    let fact = dl[i] / d[i];
                    dl[i] = fact;
                    d[i + 1] = d[i + 1] - fact * du[i];
                }
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        for p in &mut d {
            if p.abs() < tiny {
                *p = if *p < T::zero() { -tiny } else { tiny };
            }
        }
        Self { dl, d, du, du2, swapped }
    }

    fn solve(&self, b: &mut [T]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] = b[i + 1] - self.dl[i] * b[i];
            }
        }
        b[n - 1] = b[n - 1] / self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}
