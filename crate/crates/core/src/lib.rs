//! Entanglement of a three-qubit GHZ state shared between one inertial and
//! two uniformly accelerated observers, evolving under phase-damping,
//! phase-flip or bit-flip noise.
//!
//! The crate is organized as a small pipeline:
//!
//! 1. [`rindler`] prepares the GHZ state and applies the accelerated-mode
//!    transformation, tracing out the causally disconnected wedge.
//! 2. [`channels`] evolves the state under per-qubit Kraus channels.
//! 3. [`measures`] extracts negativities: one-tangles, two-tangles,
//!    residual entanglements, the pi-tangle and the monogamy (CKW) slack.
//! 4. [`sweep`] runs deterministic (r, p) grids — in parallel with the
//!    default `parallel` feature — and emits plot-ready CSV.
//! 5. [`analytic`] carries the closed-form expressions for cross-checking;
//!    [`sweep::compare_numeric_analytic`] reports where they deviate from
//!    the matrix pipeline.
//!
//! Everything rests on the dense complex kernel in [`matrix`] and the
//! Jacobi eigensolver in [`eigen`]; all tolerances live in [`tolerances`].

pub mod analytic;
pub mod channels;
pub mod density;
pub mod eigen;
pub mod error;
pub mod figures;
pub mod matrix;
pub mod measures;
pub mod rindler;
pub mod sweep;
pub mod tolerances;

pub use channels::{apply_channel, kraus_single, lift, ChannelKind, CouplingSpec, KrausSet};
pub use density::DensityMatrix;
pub use eigen::{hermitian_eigenvalues, trace_norm};
pub use error::{Error, Result};
pub use matrix::{C64, ComplexMatrix};
pub use measures::{negativity, one_tangles, pi_tangle, two_tangles, TangleReport};
pub use rindler::{ghz_pure, r_from_acceleration, rindler_ghz, AccelerationParam, PhysicalAcceleration};
pub use sweep::{
    compare_numeric_analytic, detect_rebirth, detect_sudden_death, emit_csv, run_sweep,
    run_sweep_serial, Coupling, SweepConfig, SweepRow,
};
