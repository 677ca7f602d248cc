//! Modal expansion of the adjugate around a reference energy.
//!
//! With `A = H - Ω·1` and `λ = E - Ω`,
//!
//! ```text
//! adj(λ·1 - A) = Σ_k λ^k B_k,        det(λ·1 - A) = Σ_k λ^k c_k,  c_N = 1
//! ```
//!
//! The modes `B_k` and coefficients `c_k` come from the Faddeev–LeVerrier
//! recursion. [`charpoly_newton`] and [`modes_explicit`] are independent
//! routes to the same data and serve as oracles.

use num_complex::Complex;

use crate::numcore::{ComplexMatrix, Polynomial};
use crate::scalar::{cone, czero, Real};

/// Coefficients `c_0..c_N` and modes `B_0..B_{N-1}` at a reference energy.
#[derive(Debug, Clone)]
pub struct ModalExpansion<T: Real> {
    omega: Complex<T>,
    shifted: ComplexMatrix<T>,
    coeffs: Polynomial<T>,
    modes: Vec<ComplexMatrix<T>>,
}

impl<T: Real> ModalExpansion<T> {
    pub fn omega(&self) -> Complex<T> {
        self.omega
    }

    pub fn n(&self) -> usize {
        self.shifted.n()
    }

    /// `A = H - Ω·1`.
    pub fn shifted(&self) -> &ComplexMatrix<T> {
        &self.shifted
    }

    /// Shifted characteristic polynomial `q(λ) = det(λ·1 - A)`.
    pub fn coeffs(&self) -> &Polynomial<T> {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.coeff(k)
    }

    pub fn modes(&self) -> &[ComplexMatrix<T>] {
        &self.modes
    }

    pub fn mode(&self, k: usize) -> &ComplexMatrix<T> {
        &self.modes[k]
    }
}

/// Faddeev–LeVerrier recursion from `B_{N-1} = 1`:
/// `c_k = -tr(A·B_k)/(N-k)` and `B_{k-1} = A·B_k + c_k·1`.
pub fn flv_expand<T: Real>(h: &ComplexMatrix<T>, omega: Complex<T>) -> ModalExpansion<T> {
    let n = h.n();
    let a = h.shifted(omega);
    let mut coeffs = vec![czero::<T>(); n + 1];
    coeffs[n] = cone();
    let mut modes = vec![ComplexMatrix::identity(n)];
    for k in (0..n).rev() {
        let mut next = &a * &modes[modes.len() - 1];
        let ck = -next.trace() / T::of(n - k);
        coeffs[k] = ck;
        if k > 0 {
            next.add_diagonal(ck);
            modes.push(next);
        }
    }
    modes.reverse();
    ModalExpansion { omega, shifted: a, coeffs: Polynomial::new(coeffs), modes }
}

/// Characteristic coefficients of `A = h - Ω·1` from the power traces
/// `tr(A^m)` via Newton's identities.
pub fn charpoly_newton<T: Real>(h: &ComplexMatrix<T>, omega: Complex<T>) -> Polynomial<T> {
    let n = h.n();
    let a = h.shifted(omega);
    let mut power_traces = Vec::with_capacity(n);
    let mut power = a.clone();
    for m in 1..=n {
        power_traces.push(power.trace());
        if m < n {
            power = &power * &a;
        }
    }
    let mut c = vec![czero::<T>(); n + 1];
    c[n] = cone();
    for j in 1..=n {
        let acc = (1..=j).fold(czero::<T>(), |acc, i| acc + c[n - j + i] * power_traces[i - 1]);
        c[n - j] = -acc / T::of(j);
    }
    Polynomial::new(c)
}

/// Closed-form modes `B_k = Σ_{l=1}^{N-k} c_{k+l} A^{l-1}` from known coefficients.
pub fn modes_explicit<T: Real>(exp: &ModalExpansion<T>, a: &ComplexMatrix<T>) -> Vec<ComplexMatrix<T>> {
    let n = a.n();
    let mut powers = vec![ComplexMatrix::identity(n)];
    for _ in 1..n {
        let next = &powers[powers.len() - 1] * a;
        powers.push(next);
    }
    (0..n)
        .map(|k| {
            (1..=n - k).fold(ComplexMatrix::zeros(n), |acc, l| &acc + &powers[l - 1].scale(exp.coeff(k + l)))
        })
        .collect()
}

/// `adj(E·1 - H) = Σ_k (E - Ω)^k B_k`, evaluated by Horner's scheme.
pub fn adjugate_at<T: Real>(exp: &ModalExpansion<T>, energy: Complex<T>) -> ComplexMatrix<T> {
    let lambda = energy - exp.omega;
    let mut acc = ComplexMatrix::zeros(exp.n());
    for b in exp.modes.iter().rev() {
        acc = &acc.scale(lambda) + b;
    }
    acc
}
