//! Complex scalars and the 2×2 complex matrix the wave cascades are built on.
//!
//! Every transform in this crate — quantum interface matrices, their
//! N-period compositions, and the classical characteristic matrices of the
//! oracle — is a 2×2 complex matrix acting on a pair of wave amplitudes.
//! A fixed four-field struct keeps that arithmetic explicit,
//! allocation-free, and exactly reproducible; no general linear algebra is
//! needed because the cascades are forward-only products and the method
//! never inverts a matrix.

use num_complex::Complex64;

/// Complex scalar used throughout: amplitudes, phase factors, matrix entries.
pub type ComplexScalar = Complex64;

/// A 2×2 complex matrix with explicitly named entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub m11: ComplexScalar,
    pub m12: ComplexScalar,
    pub m21: ComplexScalar,
    pub m22: ComplexScalar,
}

impl Matrix2 {
    /// Builds a matrix from its row-major entries.
    pub fn new(m11: ComplexScalar, m12: ComplexScalar, m21: ComplexScalar, m22: ComplexScalar) -> Self {
        Matrix2 { m11, m12, m21, m22 }
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Matrix2::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
    }

    /// Determinant `m11·m22 − m12·m21`.
    pub fn det(&self) -> ComplexScalar {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Applies the matrix to a column vector of two amplitudes.
    pub fn apply(&self, v: (ComplexScalar, ComplexScalar)) -> (ComplexScalar, ComplexScalar) {
        (
            self.m11 * v.0 + self.m12 * v.1,
            self.m21 * v.0 + self.m22 * v.1,
        )
    }
}

impl std::ops::Mul for Matrix2 {
    type Output = Matrix2;

    /// Row-by-column product. In a cascade written `M = Mᴺ···M²M¹`, the
    /// right factor acts first; the product preserves that order.
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }
}
