//! Complex dense-matrix arithmetic and the numerical kernels the analyses
//! depend on: determinant and solve, SVD, spectral norm, numerical rank and
//! polynomial roots. Everything here is implemented in-crate so results are
//! reproducible bit for bit.

mod lu;
mod matrix;
mod poly;
mod svd;

pub use lu::{lu_det, lu_solve};
pub use matrix::ComplexMatrix;
pub use poly::{aberth_roots, polish_multiple_root, Polynomial};
pub use svd::{numerical_rank, spectral_norm, svd, Svd};
