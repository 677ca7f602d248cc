//! Dense complex polynomials and simultaneous root finding.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// Polynomial with `coeffs[k]` multiplying `λ^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> Polynomial<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex::new(T::lit(c), T::zero())).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex<T>]) -> Self {
        let mut coeffs = vec![cone::<T>()];
        for &r in roots {
            let mut next = vec![czero(); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1] + c;
                next[k] = next[k] - c * r;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs[k]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(czero(), |acc, &c| acc * z + c)
    }

    /// Value and first derivative by Horner's scheme.
    fn eval_with_derivative(&self, z: Complex<T>) -> (Complex<T>, Complex<T>) {
        let mut p = czero();
        let mut dp = czero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `Σ |c_k| |z|^k`, the magnitude that bounds rounding in Horner evaluation.
    fn abs_eval(&self, r: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * r + c.norm())
    }

    /// `Σ |c_k|`.
    pub fn scale(&self) -> T {
        self.abs_eval(T::one())
    }

    /// `dp/dλ`; the derivative of a constant is the zero constant.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self { coeffs: vec![czero()] };
        }
        Self { coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * T::of(k)).collect() }
    }
}

/// Refines an approximation `z` of a root of multiplicity `k` by Newton's
/// method on `p^(k-1)`, where the root is simple. Returns `z` unchanged if
/// the iteration wanders further than `reach`.
pub fn polish_multiple_root<T: Real>(p: &Polynomial<T>, z: Complex<T>, k: usize, reach: T) -> Complex<T> {
    if k == 0 || k > p.degree() {
        return z;
    }
    let mut q = p.clone();
    for _ in 1..k {
        q = q.derivative();
    }
    let eps = T::epsilon();
    let mut x = z;
    let mut last = T::infinity();
    for _ in 0..MAX_ABERTH_ITERATIONS {
        let (val, der) = q.eval_with_derivative(x);
        if der == czero() || val == czero() {
            break;
        }
        let step = val / der;
        if step.norm() >= last {
            break;
        }
        last = step.norm();
        x = x - step;
        if step.norm() <= eps * x.norm().max(T::one()) {
            break;
        }
    }
    if (x - z).norm() <= reach && x.re.is_finite() && x.im.is_finite() {
        x
    } else {
        z
    }
}

const MAX_ABERTH_ITERATIONS: usize = 200;
const JITTER_SEED: u64 = 0x5eed_ab3e;

/// All roots of `p` (with multiplicity) by the Aberth–Ehrlich iteration.
///
/// Initial guesses sit on a circle of radius `|c_0 / c_N|^{1/N}` (radius 1
/// when `c_0 = 0`) at the `N`-th roots of unity, jittered by a relative
/// `1e-3` from a fixed-seed generator so results are reproducible.
/// A root is accepted once its value drops to the Horner rounding level or
/// its Aberth correction falls below machine precision relative to the
/// root scale.
pub fn aberth_roots<T: Real>(p: &Polynomial<T>) -> Result<Vec<Complex<T>>> {
    let deg = p.degree();
    if deg == 0 {
        return Err(Error::BadPolynomial("degree must be at least one"));
    }
    let lead = p.coeff(deg);
    if lead == czero() {
        return Err(Error::BadPolynomial("leading coefficient is zero"));
    }
    if !p.coeffs().iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
        return Err(Error::BadPolynomial("non-finite coefficient"));
    }
    if deg == 1 {
        return Ok(vec![-p.coeff(0) / lead]);
    }

    let c0 = p.coeff(0).norm();
    let radius = if c0 == T::zero() { T::one() } else { (c0 / lead.norm()).powf(T::one() / T::of(deg)) };
    let mut rng = ChaCha8Rng::seed_from_u64(JITTER_SEED);
    let jitter = T::lit(1e-3);
    let mut roots: Vec<Complex<T>> = (0..deg)
        .map(|k| {
            let theta = T::TAU() * T::of(k) / T::of(deg);
            let dr = T::one() + jitter * T::lit(rng.gen_range(-1.0..1.0));
            let dt = jitter * T::lit(rng.gen_range(-1.0..1.0));
            Complex::from_polar(radius * dr, theta + dt)
        })
        .collect();

    let eps = T::epsilon();
    let rounding = T::lit(4.0) * T::of(deg + 1) * eps;
    let mut done = vec![false; deg];
    let mut last_step = vec![T::infinity(); deg];
    for _ in 0..MAX_ABERTH_ITERATIONS {
        for i in 0..deg {
            if done[i] {
                continue;
            }
            let z = roots[i];
            let (val, der) = p.eval_with_derivative(z);
            let magnitude = p.abs_eval(z.norm());
            if val.norm() <= eps * magnitude {
                done[i] = true;
                continue;
            }
            let repulsion = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(czero::<T>(), |acc, (_, &zj)| {
                    let d = z - zj;
                    if d == czero() { acc } else { acc + cone::<T>() / d }
                });
            let denom = der - val * repulsion;
            let step = if denom == czero() {
                // stationary point: nudge off it
                Complex::new(radius * eps.sqrt(), radius * eps.sqrt())
            } else {
                val / denom
            };
            // inside the rounding band, stop as soon as corrections stop shrinking
            if val.norm() <= rounding * magnitude && step.norm() >= last_step[i] {
                done[i] = true;
                continue;
            }
            last_step[i] = step.norm();
            roots[i] = z - step;
            if !(roots[i].re.is_finite() && roots[i].im.is_finite()) {
                return Err(Error::NoConvergence { what: "aberth iteration", limit: MAX_ABERTH_ITERATIONS });
            }
            if step.norm() <= eps * roots[i].norm().max(radius) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(roots);
        }
    }
    Err(Error::NoConvergence { what: "aberth iteration", limit: MAX_ABERTH_ITERATIONS })
}
