//! First-order splitting of a degenerate eigenvalue under `H₀ + ε H′`.
//!
//! Each leading sector `B⋆_j` sees the element `h_j = tr(B⋆_j H′)`, and the
//! `ℓ` eigenvalues it carries move to the vertices of a regular polygon,
//!
//! ```text
//! E_jk = E_i + (ε h_j / c_α)^{1/ℓ} · exp(2πik/ℓ)
//! ```

use num_complex::Complex;

use crate::degeneracy::DegeneracyReport;
use crate::error::{Error, Result};
use crate::modal::flv_expand;
use crate::numcore::{aberth_roots, ComplexMatrix};
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct PolygonSector<T: Real> {
    pub h: Complex<T>,
    pub radius: T,
    /// Argument of the `k = 0` vertex relative to the eigenvalue.
    pub rotation: T,
    pub vertices: Vec<Complex<T>>,
}

#[derive(Debug, Clone)]
pub struct PolygonPrediction<T: Real> {
    pub epsilon: T,
    pub sectors: Vec<PolygonSector<T>>,
    /// All eigenvalues of `H₀ + ε H′`.
    pub exact_roots: Vec<Complex<T>>,
    /// Largest distance from a predicted vertex to its nearest exact root.
    pub matched_error: T,
}

/// `h_j = tr(B⋆_j H′)`.
pub fn sector_element<T: Real>(b_star_sector: &ComplexMatrix<T>, h_prime: &ComplexMatrix<T>) -> Complex<T> {
    b_star_sector.trace_of_product(h_prime)
}

/// Sector matrices used for the splitting: the whole `B⋆` when `β = 1`,
/// otherwise the singular pieces.
pub fn sector_matrices<T: Real>(report: &DegeneracyReport<T>) -> Vec<ComplexMatrix<T>> {
    if report.beta == 1 {
        vec![report.b_star.clone()]
    } else {
        report.sectors.iter().map(|s| s.matrix()).collect()
    }
}

/// The unit-norm perturbation `|L⟩⟨R|` that maximizes `|h_j|` for the given sector.
pub fn rank_one_maximizer<T: Real>(report: &DegeneracyReport<T>, sector: usize) -> Result<ComplexMatrix<T>> {
    let s = report
        .sectors
        .get(sector)
        .ok_or_else(|| Error::InvalidArgument(format!("sector {sector} out of range")))?;
    let col: Vec<Complex<T>> = s.left.iter().map(|z| z.conj()).collect();
    let row: Vec<Complex<T>> = s.right.iter().map(|z| z.conj()).collect();
    Ok(ComplexMatrix::outer(&col, &row))
}

/// Predicted polygons around `report.eigenvalue` together with the exact
/// perturbed spectrum.
pub fn predict_polygons<T: Real>(
    h0: &ComplexMatrix<T>,
    h_prime: &ComplexMatrix<T>,
    epsilon: T,
    report: &DegeneracyReport<T>,
) -> Result<PolygonPrediction<T>> {
    if h0.n() != h_prime.n() {
        return Err(Error::DimensionMismatch { expected: h0.n(), found: h_prime.n() });
    }
    if !epsilon.is_finite() || epsilon == T::zero() {
        return Err(Error::InvalidArgument("epsilon must be finite and nonzero".into()));
    }
    let ell = report.ell;
    let elements: Vec<Complex<T>> = sector_matrices(report).iter().map(|b| sector_element(b, h_prime)).collect();
    let floor = report.tol * report.b_star.frobenius_norm() * h_prime.frobenius_norm();
    if elements.iter().all(|h| h.norm() <= floor) {
        return Err(Error::ZeroElement);
    }
    let inv_ell = T::one() / T::of(ell);
    let sectors = elements
        .into_iter()
        .map(|h| {
            let w = h * epsilon / report.c_alpha;
            let radius = w.norm().powf(inv_ell);
            let rotation = w.arg() * inv_ell;
            let vertices = (0..ell)
                .map(|k| report.eigenvalue + Complex::from_polar(radius, rotation + T::TAU() * T::of(k) * inv_ell))
                .collect();
            PolygonSector { h, radius, rotation, vertices }
        })
        .collect::<Vec<_>>();

    let perturbed = &h0.clone() + &h_prime.scale(Complex::new(epsilon, T::zero()));
    let exp = flv_expand(&perturbed, report.eigenvalue);
    let exact_roots: Vec<Complex<T>> = aberth_roots(exp.coeffs())?.into_iter().map(|z| z + report.eigenvalue).collect();
    let matched_error = sectors
        .iter()
        .flat_map(|s| s.vertices.iter())
        .map(|v| exact_roots.iter().map(|r| (r - v).norm()).fold(T::infinity(), T::min))
        .fold(T::zero(), T::max);
    Ok(PolygonPrediction { epsilon, sectors, exact_roots, matched_error })
}
