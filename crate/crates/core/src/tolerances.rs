//! Central tolerance table.
//!
//! Every numerical threshold used by the library and its test suites lives
//! here, so that an assertion in a test and the check it exercises can never
//! drift apart.

/// Hermiticity check on stored density matrices: |m(i,j) - conj(m(j,i))|.
pub const HERMITICITY: f64 = 1e-12;

/// Unit-trace check on density matrices.
pub const UNIT_TRACE: f64 = 1e-12;

/// Positivity floor: eigenvalues of a density matrix may dip this far below
/// zero before the matrix is rejected.
pub const PSD_FLOOR: f64 = -1e-10;

/// Input Hermiticity tolerance for the eigensolver and trace norm.
pub const EIGEN_INPUT_HERMITICITY: f64 = 1e-10;

/// Jacobi sweep convergence: off-diagonal Frobenius norm target.
pub const EIGEN_OFF_DIAGONAL: f64 = 1e-13;

/// Hard cap on Jacobi sweeps.
pub const EIGEN_MAX_SWEEPS: usize = 100;

/// Kraus completeness: max-abs deviation of sum E†E from the identity.
pub const KRAUS_COMPLETENESS: f64 = 1e-13;

/// Trace preservation through a channel.
pub const CHANNEL_TRACE: f64 = 1e-12;

/// Negativities in (NEGATIVITY_CLAMP, 0) are eigensolver dust and are
/// reported as exactly 0.
pub const NEGATIVITY_CLAMP: f64 = -1e-10;

/// Agreement demanded between the matrix pipeline and the closed forms.
pub const ORACLE_AGREEMENT: f64 = 1e-9;

/// Default threshold below which a tangle counts as dead in sweeps.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Two-tangles must stay below this on every sweep point.
pub const TWO_TANGLE_NULL: f64 = 1e-10;

/// Monogamy slack may dip this far below zero.
pub const CKW_SLACK_FLOOR: f64 = -1e-10;

/// Construct-then-trace state oracle vs the direct form, entrywise.
pub const STATE_ORACLE: f64 = 1e-13;
