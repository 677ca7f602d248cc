//! Scalar abstraction shared by every numerical kernel.
//!
//! All matrices hold `Complex<T>` entries where `T` is a real floating type.
//! The kernels only rely on `num-traits`, so the same code runs in `f32`
//! and `f64`; the crate root exposes `f64` aliases for everyday use.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point field underlying the complex entries.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Converts a count into `Self`.
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex zero.
#[inline]
pub fn czero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Complex one.
#[inline]
pub fn cone<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

/// Real number lifted into the complex plane.
#[inline]
pub fn creal<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Default relative tolerance for degeneracy decisions on an `n`-dimensional
/// problem: `1e-9 * n` in double precision, floored at `1e3` machine epsilons
/// so that single precision gets a usable threshold.
pub fn default_tolerance<T: Real>(n: usize) -> T {
    T::lit(1e-9).max(T::epsilon() * T::lit(1e3)) * T::of(n.max(1))
}

/// `true` when both components are finite.
#[inline]
pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
