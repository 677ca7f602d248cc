//! Hamiltonian families with closed-form spectral data, used as reference
//! problems throughout the test suites and by the CLI examples.

use num_complex::Complex;

use crate::numcore::ComplexMatrix;
use crate::scalar::{czero, Real};

fn c<T: Real>(x: f64) -> Complex<T> {
    Complex::new(T::lit(x), T::zero())
}

/// Three-level family
///
/// ```text
/// [ ω  a  b ]
/// [ c  ω  d ]
/// [ 0  0  0 ]
/// ```
///
/// with eigenvalues `0` and `ω ± sqrt(ac)`.
pub fn example1<T: Real>(omega: f64, a: f64, b: f64, cc: f64, d: f64) -> ComplexMatrix<T> {
    ComplexMatrix::from_rows(vec![
        vec![c(omega), c(a), c(b)],
        vec![c(cc), c(omega), c(d)],
        vec![czero(), czero(), czero()],
    ])
    .expect("square")
}

/// `ω = a = b = c = d = 1`: a diabolic point at `E = 0` and a simple eigenvalue at `2`.
pub fn example1_dp<T: Real>() -> ComplexMatrix<T> {
    example1(1.0, 1.0, 1.0, 1.0, 1.0)
}

/// `ω = a = b = d = 1, c = 0`: a second-order exceptional point at `E = 1`
/// and a simple eigenvalue at `0`.
pub fn example1_ep<T: Real>() -> ComplexMatrix<T> {
    example1(1.0, 1.0, 1.0, 0.0, 1.0)
}

/// Four-level upper-triangular family with a fourfold eigenvalue `ω`:
///
/// ```text
/// [ ω  a  b  c ]
/// [ 0  ω  d  e ]
/// [ 0  0  ω  f ]
/// [ 0  0  0  ω ]
/// ```
#[allow(clippy::too_many_arguments)]
pub fn example2<T: Real>(omega: f64, a: f64, b: f64, cc: f64, d: f64, e: f64, f: f64) -> ComplexMatrix<T> {
    let z = czero::<T>();
    ComplexMatrix::from_rows(vec![
        vec![c(omega), c(a), c(b), c(cc)],
        vec![z, c(omega), c(d), c(e)],
        vec![z, z, c(omega), c(f)],
        vec![z, z, z, c(omega)],
    ])
    .expect("square")
}

/// Generic fourth-order exceptional point, partial multiplicities (4).
pub fn example2_ep4<T: Real>() -> ComplexMatrix<T> {
    example2(0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0)
}

/// `d = 0`: partial multiplicities (3, 1).
pub fn example2_31<T: Real>() -> ComplexMatrix<T> {
    example2(0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0)
}

/// `d = 0, ae = -bf`: partial multiplicities (2, 2) with two leading eigenvectors.
pub fn example2_22<T: Real>() -> ComplexMatrix<T> {
    example2(0.0, 1.0, -1.0, 1.0, 0.0, 1.0, 1.0)
}

/// `d = e = f = 0`: partial multiplicities (2, 1, 1).
pub fn example2_211<T: Real>() -> ComplexMatrix<T> {
    example2(0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0)
}
