//! Validated density matrices over qubit registers.
//!
//! Qubit 0 is the leftmost ket slot and the most significant bit of the
//! basis index: |i0 i1 i2> lives at index 4*i0 + 2*i1 + i2.

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::tolerances;

/// Hermitian, unit-trace, positive-semidefinite matrix on `qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    qubits: usize,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate and wrap: dimension 2^qubits, Hermitian, trace 1, eigenvalues
    /// above the positivity floor.
    pub fn new(qubits: usize, mat: ComplexMatrix) -> Result<Self> {
        let dim = 1usize << qubits;
        if qubits == 0 || mat.dim() != dim {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("dimension {} does not match {} qubits", mat.dim(), qubits),
            });
        }
        let herm = mat.hermiticity_deviation();
        if herm > tolerances::HERMITICITY {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("hermiticity deviation {herm:.3e}"),
            });
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > tolerances::UNIT_TRACE || tr.im.abs() > tolerances::UNIT_TRACE {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("trace {tr} is not 1"),
            });
        }
        let eigen = hermitian_eigenvalues(&mat)?;
        if let Some(&min) = eigen.first() {
            if min < tolerances::PSD_FLOOR {
                return Err(Error::InvalidDensityMatrix {
                    reason: format!("negative eigenvalue {min:.3e}"),
                });
            }
        }
        Ok(Self { qubits, mat })
    }

    /// Outer product |psi><psi| of a normalized amplitude vector.
    pub fn from_pure(qubits: usize, amplitudes: &[C64]) -> Result<Self> {
        let dim = 1usize << qubits;
        if amplitudes.len() != dim {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("{} amplitudes for {} qubits", amplitudes.len(), qubits),
            });
        }
        let mut mat = ComplexMatrix::zeros(dim);
        for (i, a) in amplitudes.iter().enumerate() {
            for (j, b) in amplitudes.iter().enumerate() {
                mat.set(i, j, a * b.conj());
            }
        }
        Self::new(qubits, mat)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Tr(rho^2); 1 for pure states.
    pub fn purity(&self) -> f64 {
        self.mat
            .matmul(&self.mat)
            .expect("square by construction")
            .trace()
            .re
    }

    /// Reduced state over `keep` (strictly increasing qubit indices), other
    /// qubits traced out. Kept qubits retain their original order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidKeepSet {
                reason: "empty keep set".into(),
            });
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidKeepSet {
                reason: format!("{keep:?} is not strictly increasing"),
            });
        }
        if *keep.last().unwrap() >= self.qubits {
            return Err(Error::InvalidKeepSet {
                reason: format!("{keep:?} exceeds {} qubits", self.qubits),
            });
        }

        let n = self.qubits;
        let k = keep.len();
        let dropped: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
        let mut out = ComplexMatrix::zeros(1 << k);

        // Qubit q occupies bit (n - 1 - q) of the basis index.
        let bit_of = |index: usize, q: usize| (index >> (n - 1 - q)) & 1;
        let full_dim = 1usize << n;
        for i in 0..full_dim {
            for j in 0..full_dim {
                if dropped.iter().any(|&q| bit_of(i, q) != bit_of(j, q)) {
                    continue;
                }
                let mut a = 0usize;
                let mut b = 0usize;
                for &q in keep {
                    a = (a << 1) | bit_of(i, q);
                    b = (b << 1) | bit_of(j, q);
                }
                let v = out.get(a, b) + self.mat.get(i, j);
                out.set(a, b, v);
            }
        }
        DensityMatrix::new(k, out)
    }

    /// Transpose the indices of one qubit:
    /// out[(.., i_s, ..), (.., j_s, ..)] = rho[(.., j_s, ..), (.., i_s, ..)].
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix> {
        if subsystem >= self.qubits {
            return Err(Error::QubitOutOfRange {
                index: subsystem,
                qubits: self.qubits,
            });
        }
        Ok(transpose_qubit(&self.mat, self.qubits, subsystem))
    }
}

/// Single-qubit index swap on a bare square matrix of `2^qubits` rows; also
/// used to compose transposes over multi-qubit partitions, where the
/// intermediate matrices need not be states.
pub(crate) fn transpose_qubit(
    mat: &ComplexMatrix,
    qubits: usize,
    subsystem: usize,
) -> ComplexMatrix {
    let mask = 1usize << (qubits - 1 - subsystem);
    let dim = mat.dim();
    let mut out = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            // Swap the subsystem bit between row and column.
            let i2 = (i & !mask) | (j & mask);
            let j2 = (j & !mask) | (i & mask);
            out.set(i, j, mat.get(i2, j2));
        }
    }
    out
}
