//! Determinantal minors and their partial traces.
//!
//! `M_{[I];[J]}` is the determinant left after deleting the rows `I` and
//! columns `J`. The partial trace of order `k` contracts the antisymmetric
//! minor tensor down to an `n x n` matrix,
//!
//! ```text
//! N^(k)_{ij} = Σ_{[p,q,...]} σ(i,p,q,...) σ(j,p,q,...) M_{[i,p,q,...];[j,p,q,...]}
//! ```
//!
//! summed over ordered `(k-1)`-subsets avoiding `i` and `j`, with
//! `N^(n) = 1` by convention. Three routes are provided: the definition
//! (exponential cost, an oracle for `n <= 8`), the top-down recursion, and
//! the closed form in powers of `-Σ mᵀ Σ`. All indices are zero-based.

use itertools::Itertools;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::modal::flv_expand;
use crate::numcore::{lu_det, ComplexMatrix, Polynomial};
use crate::scalar::{cone, czero, Real};

fn check_index_set(set: &[usize], n: usize) -> Result<()> {
    if let Some(&bad) = set.iter().find(|&&i| i >= n) {
        return Err(Error::BadIndexSet(format!("index {bad} out of range for dimension {n}")));
    }
    if !set.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::BadIndexSet(format!("{set:?} is not strictly increasing")));
    }
    Ok(())
}

/// Determinant of `m` with the given (sorted, zero-based) rows and columns deleted.
pub fn minor<T: Real>(m: &ComplexMatrix<T>, rows_deleted: &[usize], cols_deleted: &[usize]) -> Result<Complex<T>> {
    let n = m.n();
    if rows_deleted.len() != cols_deleted.len() {
        return Err(Error::BadIndexSet("row and column sets differ in length".into()));
    }
    if rows_deleted.len() >= n {
        return Err(Error::BadIndexSet(format!("cannot delete {} of {n} rows", rows_deleted.len())));
    }
    check_index_set(rows_deleted, n)?;
    check_index_set(cols_deleted, n)?;
    let sub = m.submatrix_deleting(rows_deleted, cols_deleted).expect("at least one row kept");
    Ok(lu_det(&sub))
}

/// Parity of the permutation that sorts `seq`; zero when an index repeats.
pub fn parity(seq: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// Antisymmetric minor tensor entry `σ(I) σ(J) M_{[I];[J]}` for arbitrary
/// (unordered, possibly repeating) index sequences.
pub fn minor_tensor<T: Real>(m: &ComplexMatrix<T>, rows: &[usize], cols: &[usize]) -> Result<Complex<T>> {
    let sign = parity(rows) * parity(cols);
    if sign == 0 {
        return Ok(czero());
    }
    let sorted_r: Vec<usize> = rows.iter().copied().sorted().collect();
    let sorted_c: Vec<usize> = cols.iter().copied().sorted().collect();
    let value = minor(m, &sorted_r, &sorted_c)?;
    Ok(if sign > 0 { value } else { -value })
}

fn check_order(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BadOrder { k, n });
    }
    Ok(())
}

/// Partial trace `N^(k)` straight from the definition. Cost grows like
/// `C(n, k-1)` determinants per entry, so use it as an oracle only.
pub fn partial_trace_direct<T: Real>(m: &ComplexMatrix<T>, k: usize) -> Result<ComplexMatrix<T>> {
    let n = m.n();
    check_order(k, n)?;
    if k == n {
        return Ok(ComplexMatrix::identity(n));
    }
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let pool: Vec<usize> = (0..n).filter(|&p| p != i && p != j).collect();
            let mut acc = czero::<T>();
            for rest in pool.into_iter().combinations(k - 1) {
                let mut rows = vec![i];
                rows.extend(&rest);
                let mut cols = vec![j];
                cols.extend(&rest);
                acc = acc + minor_tensor(m, &rows, &cols)?;
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Partial trace by the top-down recursion
/// `N^(k) = tr(N^(k+1) S)/(n-k) · 1 - N^(k+1) S` with `S = Σ mᵀ Σ`.
pub fn partial_trace_recursive<T: Real>(m: &ComplexMatrix<T>, k: usize) -> Result<ComplexMatrix<T>> {
    let n = m.n();
    check_order(k, n)?;
    let s = m.transpose().sign_conjugate();
    let mut current = ComplexMatrix::identity(n);
    for order in (k..n).rev() {
        let prod = &current * &s;
        let t = prod.trace() / T::of(n - order);
        current = -&prod;
        current.add_diagonal(t);
    }
    Ok(current)
}

/// Partial trace from the closed form `N^(k) = Σ_{l=0}^{n-k} c_{k+l} (-Σ mᵀ Σ)^l`.
///
/// `coeffs` must hold the coefficients of `det(λ·1 + m)`, i.e. the
/// characteristic polynomial of `-m`; see [`negated_charpoly`].
pub fn partial_trace_explicit<T: Real>(m: &ComplexMatrix<T>, k: usize, coeffs: &Polynomial<T>) -> Result<ComplexMatrix<T>> {
    let n = m.n();
    check_order(k, n)?;
    if coeffs.degree() != n {
        return Err(Error::DimensionMismatch { expected: n, found: coeffs.degree() });
    }
    let base = -&m.transpose().sign_conjugate();
    let mut power = ComplexMatrix::identity(n);
    let mut acc = ComplexMatrix::zeros(n);
    for l in 0..=n - k {
        acc = &acc + &power.scale(coeffs.coeff(k + l));
        if l < n - k {
            power = &power * &base;
        }
    }
    Ok(acc)
}

/// Coefficients of `det(λ·1 + m)`, as required by [`partial_trace_explicit`].
pub fn negated_charpoly<T: Real>(m: &ComplexMatrix<T>) -> Polynomial<T> {
    flv_expand(&-m, czero()).coeffs().clone()
}

/// `Σ [N^(k+1)(-A)]ᵀ Σ`, which equals the mode `B_k(A)` of the modal expansion.
pub fn mode_from_partial_trace<T: Real>(a: &ComplexMatrix<T>, k: usize) -> Result<ComplexMatrix<T>> {
    let n = a.n();
    if k >= n {
        return Err(Error::BadOrder { k: k + 1, n });
    }
    Ok(partial_trace_recursive(&-a, k + 1)?.transpose().sign_conjugate())
}

/// Adjugate assembled from cofactors, `Σ [M^(1)]ᵀ Σ`.
pub fn adjugate_by_cofactors<T: Real>(m: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let n = m.n();
    if n == 1 {
        return ComplexMatrix::scalar(1, cone());
    }
    ComplexMatrix::from_fn(n, |i, j| {
        let v = minor(m, &[j], &[i]).expect("valid single index");
        if (i + j) % 2 == 0 { v } else { -v }
    })
}
