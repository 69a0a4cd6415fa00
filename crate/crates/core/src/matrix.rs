//! Dense square complex matrices, row-major.
//!
//! This is the carrier type for states, Kraus elements and lifted operators.
//! Everything the sweep touches is 8x8 or smaller, so the kernel favors
//! clarity over blocking tricks.

use std::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = Complex::new(0.0, 0.0);
pub const ONE: C64 = Complex::new(1.0, 0.0);

/// Square complex matrix with row-major storage; `(i, j)` is row `i`, column `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Build from row-major entries; rejects length mismatches and non-finite values.
    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: (entries.len() as f64).sqrt() as usize,
            });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidDensityMatrix {
                reason: "non-finite entry".into(),
            });
        }
        Ok(Self { dim, data: entries })
    }

    /// 2x2 convenience constructor.
    pub fn two_by_two(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self {
            dim: 2,
            data: vec![a, b, c, d],
        }
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    /// Kronecker product; block `(i, j)` of the result is `a(i,j) * b`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let (da, db) = (self.dim, other.dim);
        let mut out = ComplexMatrix::zeros(da * db);
        for i in 0..da {
            for j in 0..da {
                let aij = self.get(i, j);
                if aij == ZERO {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        out.set(i * db + k, j * db + l, aij * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, factor: C64) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// In-place `self += other`, dimensions already known to match.
    pub(crate) fn add_assign(&mut self, other: &ComplexMatrix) {
        debug_assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest |a(i,j) - conj(a(j,i))| over all entries; 0 for exactly
    /// Hermitian matrices.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..=i {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian_within(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Largest entrywise |difference|; handy for oracle comparisons.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Real diagonal matrix from an `f64` slice.
pub fn diag_real(values: &[f64]) -> ComplexMatrix {
    ComplexMatrix::diagonal(&values.iter().map(|&v| C64::new(v, 0.0)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_projector_case() {
        let proj = diag_real(&[1.0, 0.0]);
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(proj.kron(&i2), diag_real(&[1.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn kron_of_vanished_bitflip_element_is_zero() {
        // sqrt(1-p) I at p = 1 is the zero matrix, and so is its product with I.
        let e0 = ComplexMatrix::identity(2).scale(C64::new((1.0f64 - 1.0).sqrt(), 0.0));
        let out = e0.kron(&ComplexMatrix::identity(2));
        assert_eq!(out, ComplexMatrix::zeros(4));
    }

    #[test]
    fn kron_is_associative() {
        let a = ComplexMatrix::two_by_two(
            C64::new(0.3, 0.1),
            C64::new(-0.2, 0.7),
            C64::new(1.1, 0.0),
            C64::new(0.0, -0.4),
        );
        let b = ComplexMatrix::two_by_two(
            C64::new(0.9, -0.3),
            C64::new(0.5, 0.5),
            C64::new(-0.1, 0.2),
            C64::new(0.8, 0.0),
        );
        let c = ComplexMatrix::identity(2);
        let left = a.kron(&b).kron(&c);
        let right = a.kron(&b.kron(&c));
        assert!(left.max_abs_diff(&right) <= 1e-15);
    }

    #[test]
    fn matmul_identity_and_flip() {
        let x = ComplexMatrix::two_by_two(ZERO, ONE, ONE, ZERO);
        let rho = diag_real(&[0.25, 0.75]);
        assert!(ComplexMatrix::identity(2)
            .matmul(&rho)
            .unwrap()
            .max_abs_diff(&rho)
            .abs()
            < 1e-15);
        assert!(x.matmul(&x).unwrap().max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn matmul_phase_damping_element() {
        // E0 E0† for the damping element diag(1, sqrt(1-p)) is diag(1, 1-p).
        let p: f64 = 0.37;
        let e0 = diag_real(&[1.0, (1.0 - p).sqrt()]);
        let prod = e0.matmul(&e0.dagger()).unwrap();
        assert!(prod.max_abs_diff(&diag_real(&[1.0, 1.0 - p])) < 1e-15);
    }

    #[test]
    fn matmul_dimension_mismatch_is_error() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        assert!(matches!(
            a.matmul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 4 })
        ));
    }

    #[test]
    fn dagger_examples() {
        let i4 = ComplexMatrix::identity(4);
        assert_eq!(i4.dagger(), i4);

        let m = ComplexMatrix::two_by_two(ZERO, C64::new(0.0, 1.0), ZERO, ZERO);
        let expected = ComplexMatrix::two_by_two(ZERO, ZERO, C64::new(0.0, -1.0), ZERO);
        assert_eq!(m.dagger(), expected);
        assert_eq!(m.dagger().dagger(), m);
    }

    #[test]
    fn from_entries_rejects_nan() {
        let bad = vec![C64::new(f64::NAN, 0.0); 4];
        assert!(ComplexMatrix::from_entries(2, bad).is_err());
    }
}
