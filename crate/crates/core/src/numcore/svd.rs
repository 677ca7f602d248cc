//! One-sided (Hestenes) Jacobi singular value decomposition.

use num_complex::Complex;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};

/// Thin wrapper around the factors of `m = U · diag(s) · V†`.
#[derive(Debug, Clone)]
pub struct Svd<T: Real> {
    pub u: ComplexMatrix<T>,
    /// Singular values, descending.
    pub s: Vec<T>,
    pub v: ComplexMatrix<T>,
}

impl<T: Real> Svd<T> {
    /// `U · diag(s) · V†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.u.n();
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).fold(czero(), |acc, k| acc + self.u[(i, k)] * self.v[(j, k)].conj() * self.s[k])
        })
    }
}

fn column_dot<T: Real>(w: &ComplexMatrix<T>, p: usize, q: usize) -> Complex<T> {
    (0..w.n()).fold(czero(), |acc, i| acc + w[(i, p)].conj() * w[(i, q)])
}

fn column_norm_sqr<T: Real>(w: &ComplexMatrix<T>, p: usize) -> T {
    (0..w.n()).fold(T::zero(), |acc, i| acc + w[(i, p)].norm_sqr())
}

/// Applies `[x, y] <- [c x - s e* y, s x + c e* y]` to columns `p`, `q`.
fn rotate<T: Real>(w: &mut ComplexMatrix<T>, p: usize, q: usize, c: T, s: T, phase: Complex<T>) {
    let ph = phase.conj();
    for i in 0..w.n() {
        let x = w[(i, p)];
        let y = w[(i, q)] * ph;
        w[(i, p)] = x * c - y * s;
        w[(i, q)] = x * s + y * c;
    }
}

/// Singular value decomposition of a square complex matrix.
///
/// Rotations are capped at `30 n²`; exceeding the cap yields
/// [`Error::NoConvergence`].
pub fn svd<T: Real>(m: &ComplexMatrix<T>) -> Result<Svd<T>> {
    let n = m.n();
    let mut w = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let cap = 30 * n * n;
    let mut rotations = 0usize;
    let eps = T::epsilon();
    let null_column = {
        let f = eps * m.frobenius_norm();
        f * f
    };
    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = column_norm_sqr(&w, p);
                let beta = column_norm_sqr(&w, q);
                let gamma = column_dot(&w, p, q);
                let g = gamma.norm();
                if g == T::zero() || g <= eps * (alpha * beta).sqrt() || alpha.min(beta) <= null_column {
                    continue;
                }
                rotated = true;
                rotations += 1;
                if rotations > cap {
                    return Err(Error::NoConvergence { what: "jacobi svd", limit: cap });
                }
                let phase = gamma / g;
                let zeta = (beta - alpha) / (g + g);
                let sign = if zeta < T::zero() { -T::one() } else { T::one() };
                let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(usize, T)> = (0..n).map(|j| (j, column_norm_sqr(&w, j).sqrt())).collect();
    order.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(std::cmp::Ordering::Equal).then(a.0.cmp(&b.0)));

    let mut u = ComplexMatrix::zeros(n);
    let mut v_sorted = ComplexMatrix::zeros(n);
    let mut s = Vec::with_capacity(n);
    let mut filled = Vec::with_capacity(n);
    for (k, &(j, sigma)) in order.iter().enumerate() {
        for i in 0..n {
            v_sorted[(i, k)] = v[(i, j)];
        }
        s.push(sigma);
        if sigma * sigma > null_column && sigma > T::min_positive_value() {
            for i in 0..n {
                u[(i, k)] = w[(i, j)] / sigma;
            }
            filled.push(k);
        }
    }
    complete_basis(&mut u, &filled);
    Ok(Svd { u, s, v: v_sorted })
}

/// Fills the columns of `u` not listed in `filled` with an orthonormal
/// completion built from the standard basis.
fn complete_basis<T: Real>(u: &mut ComplexMatrix<T>, filled: &[usize]) {
    let n = u.n();
    let mut basis: Vec<usize> = filled.to_vec();
    let mut candidate = 0usize;
    for k in 0..n {
        if filled.contains(&k) {
            continue;
        }
        while candidate < n {
            let mut x: Vec<Complex<T>> = (0..n).map(|i| if i == candidate { Complex::new(T::one(), T::zero()) } else { czero() }).collect();
            candidate += 1;
            for _ in 0..2 {
                for &b in &basis {
                    let proj = (0..n).fold(czero(), |acc, i| acc + u[(i, b)].conj() * x[i]);
                    for (i, xi) in x.iter_mut().enumerate() {
                        *xi = *xi - u[(i, b)] * proj;
                    }
                }
            }
            let norm = x.iter().fold(T::zero(), |a, z| a + z.norm_sqr()).sqrt();
            if norm > T::lit(0.5) {
                for (i, xi) in x.iter().enumerate() {
                    u[(i, k)] = *xi / norm;
                }
                basis.push(k);
                break;
            }
        }
    }
}

/// Largest singular value, `‖m‖₂`.
pub fn spectral_norm<T: Real>(m: &ComplexMatrix<T>) -> Result<T> {
    Ok(svd(m)?.s[0])
}

/// Number of singular values above `tol`, or above `n · eps · σ_max` when
/// no tolerance is given.
pub fn numerical_rank<T: Real>(m: &ComplexMatrix<T>, tol: Option<T>) -> Result<usize> {
    let s = svd(m)?.s;
    let tau = tol.unwrap_or_else(|| T::of(m.n()) * T::epsilon() * s[0]);
    Ok(s.iter().filter(|&&x| x > tau).count())
}
