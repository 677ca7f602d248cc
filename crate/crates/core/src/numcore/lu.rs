//! Partially pivoted LU elimination: determinants and linear solves.

use num_complex::Complex;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// In-place factorization `P·m = L·U`; returns the row permutation and its parity.
struct Lu<T> {
    lu: ComplexMatrix<T>,
    perm: Vec<usize>,
    odd: bool,
    /// Smallest pivot magnitude encountered.
    min_pivot: T,
}

fn factor<T: Real>(m: &ComplexMatrix<T>) -> Lu<T> {
    let n = m.n();
    let mut lu = m.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut odd = false;
    let mut min_pivot = T::infinity();
    for col in 0..n {
        let (p, pmag) = (col..n)
            .map(|r| (r, lu[(r, col)].norm()))
            .fold((col, -T::one()), |best, cur| if cur.1 > best.1 { cur } else { best });
        min_pivot = min_pivot.min(pmag);
        if p != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(p, j)];
                lu[(p, j)] = tmp;
            }
            perm.swap(col, p);
            odd = !odd;
        }
        let pivot = lu[(col, col)];
        if pivot == czero() {
            continue;
        }
        for r in col + 1..n {
            let f = lu[(r, col)] / pivot;
            lu[(r, col)] = f;
            if f == czero() {
                continue;
            }
            for j in col + 1..n {
                let u = lu[(col, j)];
                lu[(r, j)] = lu[(r, j)] - f * u;
            }
        }
    }
    Lu { lu, perm, odd, min_pivot }
}

/// Determinant by partially pivoted elimination. Singular input yields zero.
pub fn lu_det<T: Real>(m: &ComplexMatrix<T>) -> Complex<T> {
    let f = factor(m);
    let mut det = if f.odd { -cone::<T>() } else { cone() };
    for i in 0..m.n() {
        det = det * f.lu[(i, i)];
    }
    det
}

/// Solves `m · X = rhs`.
///
/// Fails with [`Error::SingularMatrix`] when a pivot drops below
/// `n · eps · max|m_ij|`.
pub fn lu_solve<T: Real>(m: &ComplexMatrix<T>, rhs: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let n = m.n();
    if rhs.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: rhs.n() });
    }
    let f = factor(m);
    let threshold = T::of(n) * T::epsilon() * m.max_abs();
    if !(f.min_pivot > threshold) {
        return Err(Error::SingularMatrix);
    }
    let mut x = ComplexMatrix::zeros(n);
    for c in 0..n {
        // forward substitution with unit lower factor
        let mut y: Vec<Complex<T>> = (0..n).map(|i| rhs[(f.perm[i], c)]).collect();
        for i in 0..n {
            let mut acc = y[i];
            for k in 0..i {
                acc = acc - f.lu[(i, k)] * y[k];
            }
            y[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for k in i + 1..n {
                acc = acc - f.lu[(i, k)] * y[k];
            }
            y[i] = acc / f.lu[(i, i)];
        }
        for i in 0..n {
            x[(i, c)] = y[i];
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;
    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(lu_det(&M::identity(3)), c(1.0, 0.0));
        let dp = M::from_real_rows(&[&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0], &[0.0, 0.0, 0.0]]).unwrap();
        assert_eq!(lu_det(&dp), c(0.0, 0.0));
        let d = M::diagonal(&[c(2.0, 0.0), c(0.0, 3.0)]);
        assert!((lu_det(&d) - c(0.0, 6.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_sign_tracks_row_swaps() {
        let p = M::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(lu_det(&p), c(-1.0, 0.0));
    }

    #[test]
    fn solve_examples() {
        let r = M::from_fn(3, |i, j| c(i as f64, j as f64 - 1.0));
        assert_eq!(lu_solve(&M::identity(3), &r).unwrap(), r);
        let m = M::diagonal(&[c(2.0, 0.0), c(4.0, 0.0)]);
        let x = lu_solve(&m, &M::identity(2)).unwrap();
        assert_eq!(x, M::diagonal(&[c(0.5, 0.0), c(0.25, 0.0)]));
    }

    #[test]
    fn singular_solve_is_an_error() {
        let m = M::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert_eq!(lu_solve(&m, &M::identity(2)), Err(Error::SingularMatrix));
    }
}
