use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cone, czero, Real};

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        Self { n, data: vec![czero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, cone())
    }

    /// `value * 1`.
    pub fn scalar(n: usize, value: Complex<T>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = value;
        }
        m
    }

    pub fn diagonal(values: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged or non-square input.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("matrix must have at least one row".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    /// Real-valued convenience constructor, mostly for fixtures.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex::new(T::lit(x), T::zero())).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex<T>]> {
        self.data.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n).map(|i| self[(i, i)]).fold(czero(), |acc, x| acc + x)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&x| x * s).collect() }
    }

    /// `self - omega * 1`.
    pub fn shifted(&self, omega: Complex<T>) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] = m[(i, i)] - omega;
        }
        m
    }

    /// `self + value * 1`, in place.
    pub fn add_diagonal(&mut self, value: Complex<T>) {
        for i in 0..self.n {
            let d = self[(i, i)];
            self[(i, i)] = d + value;
        }
    }

    /// `Σ·self·Σ` with `Σ = diag((-1)^i)`: flips the sign of every entry with odd `i + j`.
    pub fn sign_conjugate(&self) -> Self {
        Self::from_fn(self.n, |i, j| if (i + j) % 2 == 0 { self[(i, j)] } else { -self[(i, j)] })
    }

    /// Root-sum-square of the entries, `sqrt(tr(M† M))`.
    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.n);
        self.rows()
            .map(|row| row.iter().zip(v).fold(czero(), |acc, (&a, &b)| acc + a * b))
            .collect()
    }

    /// `|u><v|` with `v` given as a row (already conjugated if it comes from a ket).
    pub fn outer(u: &[Complex<T>], v_row: &[Complex<T>]) -> Self {
        assert_eq!(u.len(), v_row.len());
        Self::from_fn(u.len(), |i, j| u[i] * v_row[j])
    }

    /// Deletes the listed rows and columns; both lists must be sorted.
    pub(crate) fn submatrix_deleting(&self, rows: &[usize], cols: &[usize]) -> Option<Self> {
        let keep_r: Vec<usize> = (0..self.n).filter(|i| rows.binary_search(i).is_err()).collect();
        let keep_c: Vec<usize> = (0..self.n).filter(|j| cols.binary_search(j).is_err()).collect();
        if keep_r.is_empty() {
            return None;
        }
        Some(Self::from_fn(keep_r.len(), |i, j| self[(keep_r[i], keep_c[j])]))
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.n, other.n);
        let mut acc = czero();
        for i in 0..self.n {
            for k in 0..self.n {
                acc = acc + self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of bounds for {0}x{0}", self.n);
        &self.data[i * self.n + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of bounds for {0}x{0}", self.n);
        &mut self.data[i * self.n + j]
    }
}

impl<'a, T: Real> Mul for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch in matrix product");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == czero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl<'a, T: Real> Add for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n);
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<'a, T: Real> Sub for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n);
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect() }
    }
}

impl<'a, T: Real> Neg for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|&a| -a).collect() }
    }
}

impl<T: Real> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.n, self.n)?;
        for row in self.rows() {
            write!(f, "  ")?;
            for z in row {
                write!(f, "({:+.6e}{:+.6e}i) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
