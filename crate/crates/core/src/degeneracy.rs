//! Degeneracy classification and response strengths at an eigenvalue.
//!
//! Everything here is read off the modal expansion evaluated at `Ω = E_i`:
//! the first nonvanishing coefficient gives the algebraic multiplicity `α`,
//! the first nonvanishing mode `B⋆ = B_{α-ℓ}` gives the maximal partial
//! multiplicity `ℓ`, and the rank of `B⋆` counts the leading eigenvectors.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::modal::{flv_expand, ModalExpansion};
use crate::numcore::{aberth_roots, numerical_rank, spectral_norm, svd, ComplexMatrix};
use crate::scalar::Real;

/// One rank-one piece `weight · |right⟩⟨left|` of the first finite mode.
#[derive(Debug, Clone)]
pub struct Sector<T: Real> {
    pub weight: T,
    /// Unit vector spanning part of the column space of `B⋆`.
    pub right: Vec<Complex<T>>,
    /// Unit row vector spanning part of the row space of `B⋆`.
    pub left: Vec<Complex<T>>,
}

impl<T: Real> Sector<T> {
    pub fn matrix(&self) -> ComplexMatrix<T> {
        ComplexMatrix::outer(&self.right, &self.left).scale(Complex::new(self.weight, T::zero()))
    }
}

/// Classification and strengths of one eigenvalue.
#[derive(Debug, Clone)]
pub struct DegeneracyReport<T: Real> {
    pub eigenvalue: Complex<T>,
    pub alpha: usize,
    pub gamma: usize,
    pub ell: usize,
    pub beta: usize,
    pub c_alpha: Complex<T>,
    /// `α - ℓ`, the index of `B⋆` in the modal expansion.
    pub b_star_index: usize,
    pub b_star: ComplexMatrix<T>,
    pub sectors: Vec<Sector<T>>,
    /// `|ξ_j|`, descending.
    pub partial_strengths: Vec<T>,
    pub xi: T,
    pub eta: T,
    /// Petermann factor for a simple eigenvalue, generalized Petermann
    /// factor when `ℓ = 1`, absent otherwise.
    pub petermann: Option<T>,
    pub tol: T,
}

impl<T: Real> DegeneracyReport<T> {
    pub fn leading_right(&self) -> Vec<&[Complex<T>]> {
        self.sectors.iter().map(|s| s.right.as_slice()).collect()
    }

    pub fn leading_left(&self) -> Vec<&[Complex<T>]> {
        self.sectors.iter().map(|s| s.left.as_slice()).collect()
    }
}

fn shift_norm<T: Real>(exp: &ModalExpansion<T>) -> T {
    spectral_norm(exp.shifted()).unwrap_or_else(|_| exp.shifted().frobenius_norm())
}

fn coeff_scale<T: Real>(norm: T, power: usize) -> T {
    T::one().max(norm.powi(power as i32))
}

/// Smallest `k` with `|c_k| > tol · max(1, ‖A‖₂^{N-k})`; zero when `Ω` is not an eigenvalue.
pub fn algebraic_multiplicity<T: Real>(exp: &ModalExpansion<T>, tol: T) -> usize {
    let n = exp.n();
    let norm = shift_norm(exp);
    (0..=n).find(|&k| exp.coeff(k).norm() > tol * coeff_scale(norm, n - k)).unwrap_or(n)
}

/// `n - rank(E·1 - h)`.
pub fn geometric_multiplicity<T: Real>(h: &ComplexMatrix<T>, eigenvalue: Complex<T>, tol: Option<T>) -> Result<usize> {
    let m = -&h.shifted(eigenvalue);
    Ok(h.n() - numerical_rank(&m, tol)?)
}

/// Locates the first finite mode. Returns `ℓ` and `B⋆`.
pub fn max_partial_multiplicity<T: Real>(exp: &ModalExpansion<T>, alpha: usize, tol: T) -> Result<(usize, ComplexMatrix<T>)> {
    if alpha == 0 {
        return Err(Error::NotAnEigenvalue);
    }
    let n = exp.n();
    let norm = shift_norm(exp);
    let root_n = T::of(n).sqrt();
    let m = (0..n)
        .find(|&m| exp.mode(m).frobenius_norm() > tol * coeff_scale(norm, n - 1 - m) * root_n)
        .ok_or(Error::DegenerateInput)?;
    if m >= alpha {
        return Err(Error::ZeroMode);
    }
    Ok((alpha - m, exp.mode(m).clone()))
}

/// Splits `B⋆` into its leading sectors.
///
/// `β` counts singular values above `tol · σ_max`. For `ℓ > 1` the partial
/// strengths are the singular values over `|c_α|`; for `ℓ = 1` they are the
/// moduli of the `β` largest eigenvalues of `B⋆` over `|c_α|`. The sector
/// vectors always come from the singular bases.
pub fn leading_sectors<T: Real>(
    b_star: &ComplexMatrix<T>,
    c_alpha: Complex<T>,
    ell: usize,
    tol: T,
) -> Result<(usize, Vec<T>, Vec<Sector<T>>)> {
    let d = svd(b_star)?;
    let top = d.s[0];
    if top <= T::zero() || !top.is_finite() {
        return Err(Error::ZeroMode);
    }
    let beta = d.s.iter().filter(|&&s| s > tol * top).count();
    let n = b_star.n();
    let sectors: Vec<Sector<T>> = (0..beta)
        .map(|j| Sector {
            weight: d.s[j],
            right: d.u.column(j),
            left: (0..n).map(|i| d.v[(i, j)].conj()).collect(),
        })
        .collect();
    let scale = c_alpha.norm();
    let strengths = if ell == 1 {
        let poly = flv_expand(b_star, Complex::new(T::zero(), T::zero())).coeffs().clone();
        let mut moduli: Vec<T> = aberth_roots(&poly)?.into_iter().map(|z| z.norm()).collect();
        moduli.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        moduli.truncate(beta);
        moduli.into_iter().map(|m| m / scale).collect()
    } else {
        d.s[..beta].iter().map(|&s| s / scale).collect()
    };
    Ok((beta, strengths, sectors))
}

/// `(ξ, η) = (‖B⋆‖₂, ‖B⋆‖_F) / |c_α|`.
pub fn response_strengths<T: Real>(b_star: &ComplexMatrix<T>, c_alpha: Complex<T>) -> Result<(T, T)> {
    let c = c_alpha.norm();
    Ok((spectral_norm(b_star)? / c, b_star.frobenius_norm() / c))
}

/// `|η^(n,m)|² = tr(B_m† B_m) / |c_n|²`.
pub fn strength_function<T: Real>(exp: &ModalExpansion<T>, n: usize, m: usize, tol: T) -> Result<T> {
    let dim = exp.n();
    if n == 0 || n > dim {
        return Err(Error::BadOrder { k: n, n: dim });
    }
    if m >= dim {
        return Err(Error::BadOrder { k: m, n: dim - 1 });
    }
    let cn = exp.coeff(n).norm();
    if cn <= tol * coeff_scale(shift_norm(exp), dim - n) {
        return Err(Error::DivergentStrength { n });
    }
    let f = exp.mode(m).frobenius_norm();
    Ok(f * f / (cn * cn))
}

/// Table of `|η^(n,m)|²` for `1 <= n <= α`, `0 <= m <= min(α, N-1)`;
/// divergent entries are `None`.
pub fn strength_table<T: Real>(exp: &ModalExpansion<T>, alpha: usize, tol: T) -> Vec<Vec<Option<T>>> {
    let m_max = alpha.min(exp.n() - 1);
    (1..=alpha.max(1).min(exp.n()))
        .map(|n| (0..=m_max).map(|m| strength_function(exp, n, m, tol).ok()).collect())
        .collect()
}

/// Petermann factor `K = tr(B₀† B₀) / |c₁|²` of a simple eigenvalue.
pub fn petermann_simple<T: Real>(exp: &ModalExpansion<T>, tol: T) -> Result<T> {
    strength_function(exp, 1, 0, tol)
}

/// Full classification of `h` at `eigenvalue`.
pub fn classify<T: Real>(h: &ComplexMatrix<T>, eigenvalue: Complex<T>, tol: T) -> Result<DegeneracyReport<T>> {
    let exp = flv_expand(h, eigenvalue);
    let alpha = algebraic_multiplicity(&exp, tol);
    if alpha == 0 {
        return Err(Error::NotAnEigenvalue);
    }
    let norm = shift_norm(&exp);
    let gamma = geometric_multiplicity(h, eigenvalue, Some(tol * T::one().max(norm)))?;
    let (ell, b_star) = max_partial_multiplicity(&exp, alpha, tol)?;
    let c_alpha = exp.coeff(alpha);
    let (beta, partial_strengths, sectors) = leading_sectors(&b_star, c_alpha, ell, tol)?;
    let (xi, eta) = response_strengths(&b_star, c_alpha)?;
    Ok(DegeneracyReport {
        eigenvalue,
        alpha,
        gamma,
        ell,
        beta,
        c_alpha,
        b_star_index: alpha - ell,
        b_star,
        sectors,
        partial_strengths,
        xi,
        eta,
        petermann: (ell == 1).then(|| eta * eta),
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::default_tolerance;

    type M = ComplexMatrix<f64>;
    fn c(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }
    fn tol() -> f64 {
        default_tolerance::<f64>(4)
    }
    fn signature(r: &DegeneracyReport<f64>) -> (usize, usize, usize, usize) {
        (r.alpha, r.gamma, r.ell, r.beta)
    }

    #[test]
    fn algebraic_examples() {
        assert_eq!(algebraic_multiplicity(&flv_expand(&fixtures::example1_dp(), c(0.0)), tol()), 2);
        assert_eq!(algebraic_multiplicity(&flv_expand(&fixtures::example1_ep(), c(1.0)), tol()), 2);
        assert_eq!(algebraic_multiplicity(&flv_expand(&fixtures::example2_ep4(), c(0.0)), tol()), 4);
        assert_eq!(algebraic_multiplicity(&flv_expand(&fixtures::example1_ep(), c(0.5)), tol()), 0);
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_multiplicity(&fixtures::example1_dp(), c(0.0), None).unwrap(), 2);
        assert_eq!(geometric_multiplicity(&fixtures::example1_ep(), c(1.0), None).unwrap(), 1);
        assert_eq!(geometric_multiplicity(&fixtures::example2_211(), c(0.0), None).unwrap(), 3);
    }

    #[test]
    fn first_finite_mode_examples() {
        let exp = flv_expand(&fixtures::example1_ep(), c(1.0));
        let (ell, b) = max_partial_multiplicity(&exp, 2, tol()).unwrap();
        assert_eq!(ell, 2);
        assert_eq!(b, M::from_real_rows(&[&[0.0, 1.0, 1.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]).unwrap());

        let exp = flv_expand(&fixtures::example2_31(), c(0.0));
        let (ell, b) = max_partial_multiplicity(&exp, 4, tol()).unwrap();
        assert_eq!(ell, 3);
        let mut want = M::zeros(4);
        want[(0, 3)] = c(1.0);
        assert_eq!(b, want);

        let h = fixtures::example1_dp::<f64>();
        let exp = flv_expand(&h, c(0.0));
        let (ell, b) = max_partial_multiplicity(&exp, 2, tol()).unwrap();
        assert_eq!(ell, 1);
        assert_eq!(b, h.shifted(c(2.0)));
        assert!(matches!(max_partial_multiplicity(&exp, 0, tol()), Err(Error::NotAnEigenvalue)));
    }

    #[test]
    fn sector_examples() {
        let b0 = M::from_real_rows(&[&[0.0, 1.0, 1.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]).unwrap();
        let (beta, strengths, sectors) = leading_sectors(&b0, c(1.0), 2, tol()).unwrap();
        assert_eq!(beta, 1);
        assert!((strengths[0] - 2f64.sqrt()).abs() < 1e-14);
        assert!((sectors[0].right[0].norm() - 1.0).abs() < 1e-14);
        assert!((sectors[0].left[1].norm() - 0.5f64.sqrt()).abs() < 1e-14);
        assert!(sectors[0].left[0].norm() < 1e-14);
        assert!((&sectors[0].matrix() - &b0).max_abs() < 1e-14);

        let exp = flv_expand(&fixtures::example2_22(), c(0.0));
        let (_, b) = max_partial_multiplicity(&exp, 4, tol()).unwrap();
        let (beta, strengths, _) = leading_sectors(&b, exp.coeff(4), 2, tol()).unwrap();
        assert_eq!(beta, 2);
        assert!((strengths[0] - 2.0).abs() < 1e-12 && (strengths[1] - 1.0).abs() < 1e-12);

        let h = fixtures::example1_dp::<f64>();
        let (beta, strengths, _) = leading_sectors(&h.shifted(c(2.0)), c(-2.0), 1, tol()).unwrap();
        assert_eq!(beta, 2);
        assert!(strengths.iter().all(|s| (s - 1.0).abs() < 1e-7));

        assert!(matches!(leading_sectors(&M::zeros(2), c(1.0), 1, tol()), Err(Error::ZeroMode)));
    }

    #[test]
    fn strength_examples() {
        let ep = flv_expand(&fixtures::example1_ep(), c(1.0));
        assert!((strength_function(&ep, 2, 0, tol()).unwrap() - 2.0).abs() < 1e-14);
        let dp = flv_expand(&fixtures::example1_dp(), c(0.0));
        assert!((strength_function(&dp, 2, 1, tol()).unwrap() - 2.5).abs() < 1e-14);
        assert_eq!(strength_function(&dp, 2, 0, tol()).unwrap(), 0.0);
        assert!(matches!(strength_function(&dp, 1, 0, tol()), Err(Error::DivergentStrength { n: 1 })));
        assert!(matches!(strength_function(&dp, 0, 0, tol()), Err(Error::BadOrder { .. })));
        assert!(matches!(strength_function(&dp, 1, 3, tol()), Err(Error::BadOrder { .. })));
    }

    #[test]
    fn petermann_examples() {
        let k0 = petermann_simple(&flv_expand(&fixtures::example1_ep(), c(0.0)), tol()).unwrap();
        assert!((k0 - 2.0).abs() < 1e-12);
        let kp = petermann_simple(&flv_expand(&fixtures::example1_dp(), c(2.0)), tol()).unwrap();
        assert!((kp - 1.5).abs() < 1e-12);
        let herm = M::diagonal(&[c(0.0), c(1.0)]);
        assert!((petermann_simple(&flv_expand(&herm, c(0.0)), tol()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn petermann_is_scale_invariant() {
        let h = fixtures::example1_ep::<f64>();
        let s = Complex::new(0.3, -1.7);
        let k = petermann_simple(&flv_expand(&h, c(0.0)), tol()).unwrap();
        let ks = petermann_simple(&flv_expand(&h.scale(s), c(0.0)), tol()).unwrap();
        assert!((k - ks).abs() < 1e-12);
    }

    #[test]
    fn classify_fixture_table() {
        let dp = classify(&fixtures::example1_dp(), c(0.0), tol()).unwrap();
        assert_eq!(signature(&dp), (2, 2, 1, 2));
        assert!((dp.petermann.unwrap() - 2.5).abs() < 1e-12);

        let ep = classify(&fixtures::example1_ep(), c(1.0), tol()).unwrap();
        assert_eq!(signature(&ep), (2, 1, 2, 1));
        assert!((ep.xi * ep.xi - 2.0).abs() < 1e-12 && (ep.eta * ep.eta - 2.0).abs() < 1e-12);
        assert_eq!(ep.petermann, None);

        let cases: [(M, (usize, usize, usize, usize), f64, f64); 4] = [
            (fixtures::example2_ep4(), (4, 1, 4, 1), 1.0, 1.0),
            (fixtures::example2_31(), (4, 2, 3, 1), 1.0, 1.0),
            (fixtures::example2_22(), (4, 2, 2, 2), 5.0, 4.0),
            (fixtures::example2_211(), (4, 3, 2, 1), 3.0, 3.0),
        ];
        for (h, sig, eta2, xi2) in cases {
            let r = classify(&h, c(0.0), tol()).unwrap();
            assert_eq!(signature(&r), sig);
            assert!((r.eta * r.eta - eta2).abs() < 1e-9);
            assert!((r.xi * r.xi - xi2).abs() < 1e-9);
            assert_eq!(r.b_star_index, r.alpha - r.ell);
        }
        assert!(matches!(classify(&fixtures::example1_dp(), c(0.5), tol()), Err(Error::NotAnEigenvalue)));
    }

    #[test]
    fn small_coupling_expansion_of_spectral_strength() {
        let f = 0.05;
        let r = classify(&fixtures::example2(0.0, 1.0, -1.0, 1.0, 0.0, f, f), c(0.0), tol()).unwrap();
        let approx = 3.0 + 2.0 / 3.0 * f * f;
        assert!((r.xi * r.xi - approx).abs() / approx < 0.01);
        assert!((r.eta * r.eta - (3.0 + 2.0 * f * f)).abs() < 1e-12);
    }

    #[test]
    fn strength_table_marks_divergences() {
        let exp = flv_expand(&fixtures::example1_dp(), c(0.0));
        let t = strength_table(&exp, 2, tol());
        assert_eq!(t.len(), 2);
        assert!(t[0].iter().all(Option::is_none));
        assert_eq!(t[1][0], Some(0.0));
        assert!((t[1][1].unwrap() - 2.5).abs() < 1e-14);
    }
}
