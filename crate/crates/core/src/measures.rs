//! Negativity-based entanglement measures for the three-qubit state.
//!
//! Conventions: negativity N = ||rho^T_X|| - 1 (trace norm of the partial
//! transpose minus one). A one-tangle transposes a single qubit against the
//! remaining pair; a two-tangle is the negativity of a two-qubit reduced
//! state, transposing the second listed qubit. Residual entanglement of
//! qubit X is N_X(YZ)^2 - N_XY^2 - N_XZ^2 and the pi-tangle is the mean of
//! the three residuals.

use crate::density::DensityMatrix;
use crate::eigen::trace_norm;
use crate::error::{Error, Result};
use crate::tolerances;

/// Raw negativity of `rho` with the qubits in `partition` transposed.
///
/// Exact zeros come back as eigensolver dust of either sign; reporting-level
/// clamping happens in [`pi_tangle`].
pub fn negativity(rho: &DensityMatrix, partition: &[usize]) -> Result<f64> {
    if partition.is_empty() || partition.len() >= rho.qubits() {
        return Err(Error::InvalidKeepSet {
            reason: format!(
                "partition {partition:?} is not a nonempty proper subset of {} qubits",
                rho.qubits()
            ),
        });
    }
    if partition.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidKeepSet {
            reason: format!("partition {partition:?} is not strictly increasing"),
        });
    }
    if *partition.last().unwrap() >= rho.qubits() {
        return Err(Error::QubitOutOfRange {
            index: *partition.last().unwrap(),
            qubits: rho.qubits(),
        });
    }
    // Transposing a set is the composition of single-qubit transposes.
    let mut pt = rho.partial_transpose(partition[0])?;
    for &q in &partition[1..] {
        pt = crate::density::transpose_qubit(&pt, rho.qubits(), q);
    }
    Ok(trace_norm(&pt)? - 1.0)
}

/// One-tangles (N_A(BC), N_B(AC), N_C(AB)) of a three-qubit state, raw.
pub fn one_tangles(rho: &DensityMatrix) -> Result<[f64; 3]> {
    Ok([
        negativity(rho, &[0])?,
        negativity(rho, &[1])?,
        negativity(rho, &[2])?,
    ])
}

/// Two-tangles (N_AB, N_AC, N_BC) of a three-qubit state, raw.
///
/// Each pair is reduced by tracing out the third qubit, then the second
/// listed qubit is transposed.
pub fn two_tangles(rho: &DensityMatrix) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (slot, pair) in [[0usize, 1], [0, 2], [1, 2]].into_iter().enumerate() {
        let reduced = rho.partial_trace(&pair)?;
        out[slot] = negativity(&reduced, &[1])?;
    }
    Ok(out)
}

/// All tangles of one state, with reporting-level clamping applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangleReport {
    /// (N_A(BC), N_B(AC), N_C(AB)), clamped at zero.
    pub one_tangles: [f64; 3],
    /// (N_AB, N_AC, N_BC), clamped at zero.
    pub two_tangles: [f64; 3],
    /// Residual entanglement per qubit, clamped at zero.
    pub residuals: [f64; 3],
    /// Mean of the residuals.
    pub pi_tangle: f64,
    /// Monogamy slack N_A(BC)^2 - N_AB^2 - N_AC^2, unclamped.
    pub ckw_slack: f64,
}

/// Compute the full tangle report of a three-qubit state.
pub fn pi_tangle(rho: &DensityMatrix) -> Result<TangleReport> {
    let n1 = one_tangles(rho)?.map(clamp_dust);
    let n2 = two_tangles(rho)?.map(clamp_dust);

    let raw_residuals = [
        n1[0] * n1[0] - n2[0] * n2[0] - n2[1] * n2[1],
        n1[1] * n1[1] - n2[0] * n2[0] - n2[2] * n2[2],
        n1[2] * n1[2] - n2[1] * n2[1] - n2[2] * n2[2],
    ];
    let residuals = raw_residuals.map(|x| x.max(0.0));
    Ok(TangleReport {
        one_tangles: n1,
        two_tangles: n2,
        residuals,
        pi_tangle: residuals.iter().sum::<f64>() / 3.0,
        ckw_slack: raw_residuals[0],
    })
}

/// Negative values inside the dust window collapse to exactly zero;
/// anything else passes through.
fn clamp_dust(x: f64) -> f64 {
    if x < 0.0 && x > tolerances::NEGATIVITY_CLAMP {
        0.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{apply_channel, ChannelKind, CouplingSpec};
    use crate::matrix::{diag_real, C64};
    use crate::rindler::{ghz_pure, rindler_ghz, AccelerationParam};
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    fn bell() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        DensityMatrix::from_pure(
            2,
            &[
                C64::new(h, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(h, 0.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn separable_diagonal_state_has_zero_negativity() {
        let rho = DensityMatrix::new(2, diag_real(&[0.5, 0.0, 0.0, 0.5])).unwrap();
        assert!(negativity(&rho, &[1]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn bell_and_ghz_negativities_are_one() {
        assert!((negativity(&bell(), &[1]).unwrap() - 1.0).abs() < 1e-12);
        assert!((negativity(&ghz_pure(), &[0]).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn negativity_rejects_bad_partitions() {
        let rho = ghz_pure();
        assert!(negativity(&rho, &[]).is_err());
        assert!(negativity(&rho, &[0, 1, 2]).is_err());
        assert!(negativity(&rho, &[2, 1]).is_err());
    }

    #[test]
    fn negativity_side_independent_for_pairs() {
        // ||rho^T_A|| = ||rho^T_B|| for Hermitian rho; both sides of each
        // two-qubit pair give the same two-tangle.
        let r = AccelerationParam::new(FRAC_PI_6).unwrap();
        let rho = rindler_ghz(r, r);
        for pair in [[0usize, 1], [0, 2], [1, 2]] {
            let red = rho.partial_trace(&pair).unwrap();
            let a = negativity(&red, &[0]).unwrap();
            let b = negativity(&red, &[1]).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn one_tangles_match_independent_pipeline_values() {
        // Frozen via an independent dense-eigensolver pipeline; the pi/6
        // undecohered value is exactly (sqrt(577) - 1)/32.
        let r6 = AccelerationParam::new(FRAC_PI_6).unwrap();
        let n = one_tangles(&rindler_ghz(r6, r6)).unwrap();
        assert!((n[0] - 0.719_400_759_341_519).abs() < 1e-12);
        assert!((n[1] - 0.662_086_663_902_989).abs() < 1e-12);
        assert!((n[2] - n[1]).abs() < 1e-12);
        assert!((n[0] - (577f64.sqrt() - 1.0) / 32.0).abs() < 1e-13);

        // At pi/4 all three coincide at (sqrt(17) - 1)/8.
        let r4 = AccelerationParam::new(FRAC_PI_4).unwrap();
        let n = one_tangles(&rindler_ghz(r4, r4)).unwrap();
        let want = (17f64.sqrt() - 1.0) / 8.0;
        for v in n {
            assert!((v - want).abs() < 1e-12);
            assert!((v - 0.390_388_203_202_207).abs() < 1e-12);
        }
    }

    #[test]
    fn two_tangles_vanish_for_the_noisy_families() {
        let r = AccelerationParam::new(FRAC_PI_6).unwrap();
        for (kind, p) in [
            (ChannelKind::PhaseDamping, 0.35),
            (ChannelKind::PhaseFlip, 0.8),
        ] {
            let coupling = CouplingSpec::collective(kind, p).unwrap();
            let rho = apply_channel(&rindler_ghz(r, r), &coupling).unwrap();
            for t in two_tangles(&rho).unwrap() {
                assert!(t.abs() < 1e-12, "{kind:?} two-tangle {t}");
            }
        }
        for t in two_tangles(&ghz_pure()).unwrap() {
            assert!(t.abs() < 1e-12);
        }
    }

    #[test]
    fn ghz_pi_tangle_is_one() {
        let report = pi_tangle(&ghz_pure()).unwrap();
        assert!((report.pi_tangle - 1.0).abs() < 1e-12);
        assert!(report.ckw_slack >= crate::tolerances::CKW_SLACK_FLOOR);
    }

    #[test]
    fn inertial_phase_damping_pi_law() {
        for (qubit, p) in [(0usize, 0.3), (1, 0.55), (2, 0.9)] {
            let coupling = CouplingSpec::single(ChannelKind::PhaseDamping, qubit, p).unwrap();
            let rho = apply_channel(&ghz_pure(), &coupling).unwrap();
            let report = pi_tangle(&rho).unwrap();
            assert!(
                (report.pi_tangle - (1.0 - p)).abs() < 1e-12,
                "qubit {qubit}, p {p}"
            );
        }
    }

    #[test]
    fn phase_flip_half_kills_everything() {
        for r in [0.0, FRAC_PI_6, FRAC_PI_4] {
            let r = AccelerationParam::new(r).unwrap();
            let coupling = CouplingSpec::single(ChannelKind::PhaseFlip, 1, 0.5).unwrap();
            let rho = apply_channel(&rindler_ghz(r, r), &coupling).unwrap();
            let report = pi_tangle(&rho).unwrap();
            assert!(report.pi_tangle.abs() < 1e-12);
            for t in report.one_tangles {
                assert!(t.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn report_pi_is_mean_of_residuals() {
        let r = AccelerationParam::new(FRAC_PI_6).unwrap();
        let coupling = CouplingSpec::single(ChannelKind::BitFlip, 0, 0.3).unwrap();
        let rho = apply_channel(&rindler_ghz(r, r), &coupling).unwrap();
        let report = pi_tangle(&rho).unwrap();
        let mean = report.residuals.iter().sum::<f64>() / 3.0;
        assert!((report.pi_tangle - mean).abs() < 1e-12);
        for t in report.one_tangles.iter().chain(report.two_tangles.iter()) {
            assert!(*t >= 0.0);
        }
    }
}
