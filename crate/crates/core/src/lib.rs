//! Spectral and response analysis of finite non-Hermitian Hamiltonians.
//!
//! The central object is the modal expansion of the adjugate,
//! `adj(E·1 - H) = Σ_k (E - Ω)^k B_k`, together with the characteristic
//! coefficients `c_k`. Multiplicities, response strengths, the Green's
//! function and first-order eigenvalue splittings are all read off these
//! matrices without forming Jordan chains.
//!
//! Kernels are generic over the real scalar ([`Real`], implemented for
//! `f32` and `f64`). The aliases below fix `f64`, the precision used by the
//! command-line tool.
//!
//! ```
//! use nhr::{classify, fixtures, C64};
//!
//! let h = fixtures::example1_ep::<f64>();
//! let r = classify(&h, C64::new(1.0, 0.0), 1e-9).unwrap();
//! assert_eq!((r.alpha, r.gamma, r.ell, r.beta), (2, 1, 2, 1));
//! assert!((r.eta * r.eta - 2.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod degeneracy;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod minors;
pub mod modal;
pub mod numcore;
pub mod perturb;
pub mod response;
pub mod scalar;

pub use degeneracy::{classify, strength_function, DegeneracyReport, Sector};
pub use error::{Error, Result};
pub use modal::{adjugate_at, flv_expand, ModalExpansion};
pub use numcore::{ComplexMatrix, Polynomial};
pub use perturb::{predict_polygons, PolygonPrediction};
pub use response::{greens_direct, greens_uniform, GreensEvaluation, SweepResult};
pub use scalar::{default_tolerance, Real};

pub type C64 = num_complex::Complex<f64>;
pub type Matrix = ComplexMatrix<f64>;
pub type Expansion = ModalExpansion<f64>;
pub type Report = DegeneracyReport<f64>;
pub type Prediction = PolygonPrediction<f64>;

pub type C32 = num_complex::Complex<f32>;
pub type Matrix32 = ComplexMatrix<f32>;
pub type Expansion32 = ModalExpansion<f32>;
pub type Report32 = DegeneracyReport<f32>;
