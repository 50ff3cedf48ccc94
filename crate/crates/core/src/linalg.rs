//! Small dense symmetric solves used by the kernel designer and the
//! nonnegative least-squares fitter. Problems here are tiny (a handful of
//! unknowns), so a plain Cholesky factorization is enough.

/// Solve `a x = b` for symmetric positive-definite `a` (row-major, n x n).
///
/// Returns `None` when the matrix is not numerically positive definite.
pub(crate) fn solve_spd(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    // forward then backward substitution
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * y[k];
        }
        y[i] = s / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_spd_system() {
        // a = [[4,2],[2,3]], b = [8, 7] -> x = [1, 5/3 - ...]; verify by residual
        let a = [4.0, 2.0, 2.0, 3.0];
        let b = [8.0, 7.0];
        let x = solve_spd(&a, &b, 2).unwrap();
        let r0 = 4.0 * x[0] + 2.0 * x[1] - 8.0;
        let r1 = 2.0 * x[0] + 3.0 * x[1] - 7.0;
        assert!(r0.abs() < 1e-12 && r1.abs() < 1e-12);
    }

    #[test]
    fn rejects_indefinite_matrix() {
        let a = [1.0, 2.0, 2.0, 1.0];
        assert!(solve_spd(&a, &[1.0, 1.0], 2).is_none());
    }
}
