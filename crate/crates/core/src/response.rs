//! Green's function and response power.
//!
//! The uniform expansion
//!
//! ```text
//! G(E) = Σ_k (E-Ω)^k B_k / Σ_k (E-Ω)^k c_k
//! ```
//!
//! is exact for every reference energy `Ω`; near an eigenvalue the power
//! `P(E) = tr(G† G)` follows `η² / |E - E_i|^{2ℓ}`.

use num_complex::Complex;

use crate::degeneracy::DegeneracyReport;
use crate::error::{Error, Result};
use crate::modal::{adjugate_at, flv_expand, ModalExpansion};
use crate::numcore::{aberth_roots, lu_solve, ComplexMatrix};
use crate::scalar::{creal, Real};

#[derive(Debug, Clone)]
pub struct GreensEvaluation<T: Real> {
    pub energy: Complex<T>,
    pub matrix: ComplexMatrix<T>,
    pub power: T,
}

#[derive(Debug, Clone)]
pub struct SweepResult<T: Real> {
    pub energies: Vec<Complex<T>>,
    pub powers: Vec<T>,
    /// Uniform imaginary offset: the sweep ran on `H - i·loss_shift·1`.
    pub loss_shift: T,
}

fn evaluation<T: Real>(energy: Complex<T>, matrix: ComplexMatrix<T>) -> GreensEvaluation<T> {
    let f = matrix.frobenius_norm();
    GreensEvaluation { energy, matrix, power: f * f }
}

fn resonance_floor<T: Real>() -> T {
    T::lit(1e-13).max(T::epsilon() * T::lit(10.0))
}

/// `G(E)` from the modal expansion.
pub fn greens_uniform<T: Real>(exp: &ModalExpansion<T>, energy: Complex<T>) -> Result<GreensEvaluation<T>> {
    let lambda = energy - exp.omega();
    let den = exp.coeffs().eval(lambda);
    let scale = T::one().max(lambda.norm().powi(exp.n() as i32));
    if !(den.norm() >= resonance_floor::<T>() * scale) {
        return Err(Error::OnResonance);
    }
    Ok(evaluation(energy, adjugate_at(exp, energy).scale(den.inv())))
}

/// `G(E)` by solving `(E·1 - h) X = 1`.
pub fn greens_direct<T: Real>(h: &ComplexMatrix<T>, energy: Complex<T>) -> Result<GreensEvaluation<T>> {
    let m = -&h.shifted(energy);
    let g = lu_solve(&m, &ComplexMatrix::identity(h.n()))?;
    Ok(evaluation(energy, g))
}

/// Response power on a real energy grid with a uniform background loss.
///
/// The grid is `e_min + j·(e_max - e_min)/(steps - 1)`. `H` is shifted by
/// `-i·s·1` with `s` chosen so that the longest-living state has decay
/// rate `min_i(-Im E_i)/2 = loss`.
pub fn power_sweep<T: Real>(h: &ComplexMatrix<T>, e_min: T, e_max: T, steps: usize, loss: T) -> Result<SweepResult<T>> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!("need at least two grid points, got {steps}")));
    }
    if !(loss >= T::zero()) || !loss.is_finite() {
        return Err(Error::InvalidArgument("loss must be finite and non-negative".into()));
    }
    if !(e_min < e_max) || !e_min.is_finite() || !e_max.is_finite() {
        return Err(Error::InvalidArgument("energy range must be finite with e_min < e_max".into()));
    }
    let zero = creal(T::zero());
    let roots = aberth_roots(flv_expand(h, zero).coeffs())?;
    let max_im = roots.iter().map(|z| z.im).fold(T::neg_infinity(), T::max);
    let loss_shift = loss + loss + max_im;
    let lossy = h.shifted(Complex::new(T::zero(), loss_shift));
    let two = T::lit(2.0);
    let exp = flv_expand(&lossy, creal((e_min + e_max) / two));
    let step = (e_max - e_min) / T::of(steps - 1);
    let mut energies = Vec::with_capacity(steps);
    let mut powers = Vec::with_capacity(steps);
    for j in 0..steps {
        let e = if j + 1 == steps { e_max } else { e_min + step * T::of(j) };
        let energy = creal(e);
        powers.push(greens_uniform(&exp, energy)?.power);
        energies.push(energy);
    }
    Ok(SweepResult { energies, powers, loss_shift })
}

/// Leading-order resonant power `η² / |E - E_i|^{2ℓ}`.
pub fn leading_power<T: Real>(report: &DegeneracyReport<T>, energy: Complex<T>) -> T {
    let d = (energy - report.eigenvalue).norm();
    report.eta * report.eta / d.powi(2 * report.ell as i32)
}

/// Least-squares slope of `log P` against `log |E - E_i|` for `samples`
/// log-spaced radii in `window`, approaching the eigenvalue along a fixed ray.
pub fn loglog_slope<T: Real>(h: &ComplexMatrix<T>, eigenvalue: Complex<T>, window: (T, T), samples: usize) -> Result<T> {
    let (lo, hi) = window;
    if samples < 2 || !(lo > T::zero()) || !(lo < hi) {
        return Err(Error::InvalidArgument("loglog window needs 0 < lo < hi and at least two samples".into()));
    }
    let exp = flv_expand(h, eigenvalue);
    let ray = Complex::from_polar(T::one(), T::lit(0.3));
    let (llo, lhi) = (lo.ln(), hi.ln());
    let mut xs = Vec::with_capacity(samples);
    let mut ys = Vec::with_capacity(samples);
    for j in 0..samples {
        let lr = llo + (lhi - llo) * T::of(j) / T::of(samples - 1);
        let lambda = ray * lr.exp();
        let den = exp.coeffs().eval(lambda);
        let g = adjugate_at(&exp, eigenvalue + lambda).scale(den.inv());
        let f = g.frobenius_norm();
        xs.push(lr);
        ys.push((f * f).ln());
    }
    let k = T::of(samples);
    let mx = xs.iter().fold(T::zero(), |a, &x| a + x) / k;
    let my = ys.iter().fold(T::zero(), |a, &y| a + y) / k;
    let (sxy, sxx) = xs.iter().zip(&ys).fold((T::zero(), T::zero()), |(sxy, sxx), (&x, &y)| {
        (sxy + (x - mx) * (y - my), sxx + (x - mx) * (x - mx))
    });
    let slope = sxy / sxx;
    if !slope.is_finite() {
        return Err(Error::OnResonance);
    }
    Ok(slope)
}
