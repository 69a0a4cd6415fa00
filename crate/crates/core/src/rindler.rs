//! GHZ preparation and the accelerated-observer transformation.
//!
//! One inertial observer (Alice, qubit 0) and two uniformly accelerated ones
//! (Bob, Charlie). Each accelerated mode splits into Rindler wedge-I and
//! wedge-II partners under the fermionic single-mode dictionary
//!
//! ```text
//! |0>  ->  cos r |0>_I |0>_II + sin r |1>_I |1>_II
//! |1>  ->  |1>_I |0>_II
//! ```
//!
//! with cos r = (exp(-2 pi omega c / a) + 1)^(-1/2). Wedge II is causally
//! disconnected and gets traced out, leaving a mixed three-qubit state over
//! (Alice, Bob-I, Charlie-I).

use std::f64::consts::FRAC_PI_4;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Dimensionless acceleration angle in [0, pi/4]; 0 is inertial, pi/4 is the
/// infinite-acceleration limit for Dirac modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationParam(f64);

impl AccelerationParam {
    pub const INERTIAL: AccelerationParam = AccelerationParam(0.0);
    pub const MAX: AccelerationParam = AccelerationParam(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=FRAC_PI_4).contains(&r) {
            return Err(Error::ParamOutOfRange {
                name: "r",
                value: r,
                min: 0.0,
                max: FRAC_PI_4,
            });
        }
        Ok(Self(r))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Mode frequency and proper acceleration of one observer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalAcceleration {
    /// Mode angular frequency, rad/s.
    pub omega: f64,
    /// Proper acceleration, m/s^2.
    pub a: f64,
    /// Speed of light, m/s.
    pub c: f64,
}

impl PhysicalAcceleration {
    pub fn new(omega: f64, a: f64) -> Self {
        Self {
            omega,
            a,
            c: SPEED_OF_LIGHT,
        }
    }
}

/// r = arccos((exp(-2 pi omega c / a) + 1)^(-1/2)), in (0, pi/4).
pub fn r_from_acceleration(p: &PhysicalAcceleration) -> Result<AccelerationParam> {
    for (name, value) in [("omega", p.omega), ("a", p.a), ("c", p.c)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::ParamOutOfRange {
                name,
                value,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
    }
    let exponent = -2.0 * std::f64::consts::PI * p.omega * p.c / p.a;
    let cos_r = 1.0 / (exponent.exp() + 1.0).sqrt();
    // acos can land a rounding ulp past pi/4 when the exponent underflows.
    AccelerationParam::new(cos_r.acos().clamp(0.0, FRAC_PI_4))
}

/// The shared maximally entangled state (|000> + |111>)/sqrt(2).
pub fn ghz_pure() -> DensityMatrix {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let zero = C64::new(0.0, 0.0);
    DensityMatrix::from_pure(3, &[h, zero, zero, zero, zero, zero, zero, h])
        .expect("GHZ amplitudes are normalized")
}

/// Three-qubit state seen by (Alice, Bob-I, Charlie-I) after the wedge-II
/// modes of both accelerated observers are traced out.
///
/// Diagonal (1/2){cb^2 cc^2, cb^2 sc^2, sb^2 cc^2, sb^2 sc^2, 0, 0, 0, 1}
/// plus (cb cc / 2) on |000><111| + h.c., with cb = cos rb, sc = sin rc, etc.
/// Reduces to [`ghz_pure`] at rb = rc = 0.
pub fn rindler_ghz(rb: AccelerationParam, rc: AccelerationParam) -> DensityMatrix {
    let (cb, sb) = (rb.radians().cos(), rb.radians().sin());
    let (cc, sc) = (rc.radians().cos(), rc.radians().sin());

    let mut m = ComplexMatrix::zeros(8);
    let re = |v: f64| C64::new(v, 0.0);
    m.set(0, 0, re(0.5 * cb * cb * cc * cc));
    m.set(1, 1, re(0.5 * cb * cb * sc * sc));
    m.set(2, 2, re(0.5 * sb * sb * cc * cc));
    m.set(3, 3, re(0.5 * sb * sb * sc * sc));
    m.set(7, 7, re(0.5));
    m.set(0, 7, re(0.5 * cb * cc));
    m.set(7, 0, re(0.5 * cb * cc));

    DensityMatrix::new(3, m).expect("valid by construction for r in [0, pi/4]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_6, PI};

    #[test]
    fn ghz_entries_and_purity() {
        let rho = ghz_pure();
        assert!((rho.matrix().get(0, 0).re - 0.5).abs() < 1e-15);
        assert!((rho.matrix().get(0, 7).re - 0.5).abs() < 1e-15);
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inertial_limit_is_ghz() {
        let rho = rindler_ghz(AccelerationParam::INERTIAL, AccelerationParam::INERTIAL);
        assert!(rho.matrix().max_abs_diff(ghz_pure().matrix()) < 1e-15);
    }

    #[test]
    fn infinite_acceleration_entries() {
        let r = AccelerationParam::MAX;
        let rho = rindler_ghz(r, r);
        let want_diag = [0.125, 0.125, 0.125, 0.125, 0.0, 0.0, 0.0, 0.5];
        for (i, want) in want_diag.into_iter().enumerate() {
            assert!((rho.matrix().get(i, i).re - want).abs() < 1e-15);
        }
        assert!((rho.matrix().get(0, 7).re - 0.25).abs() < 1e-15);
    }

    #[test]
    fn pi_over_six_entries() {
        let r = AccelerationParam::new(FRAC_PI_6).unwrap();
        let rho = rindler_ghz(r, r);
        assert!((rho.matrix().get(0, 0).re - 0.28125).abs() < 1e-15);
        assert!((rho.matrix().get(0, 7).re - 0.375).abs() < 1e-15);
    }

    #[test]
    fn max_acceleration_spectrum_sums_to_one() {
        let rho = rindler_ghz(AccelerationParam::MAX, AccelerationParam::MAX);
        let ev = crate::eigen::hermitian_eigenvalues(rho.matrix()).unwrap();
        assert_eq!(ev.len(), 8);
        let sum: f64 = ev.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn acceleration_limits() {
        let fast = r_from_acceleration(&PhysicalAcceleration {
            omega: 1.0,
            a: 1e30,
            c: 1.0,
        })
        .unwrap();
        assert!((fast.radians() - FRAC_PI_4).abs() < 1e-6);

        let slow = r_from_acceleration(&PhysicalAcceleration {
            omega: 1.0,
            a: 1e-3,
            c: 1.0,
        })
        .unwrap();
        assert!(slow.radians() < 1e-6);
    }

    #[test]
    fn acceleration_midpoint_value() {
        // a = 2 pi with omega = c = 1 puts exactly -1 in the exponent.
        let r = r_from_acceleration(&PhysicalAcceleration {
            omega: 1.0,
            a: 2.0 * PI,
            c: 1.0,
        })
        .unwrap();
        let want = (1.0f64 / ((-1.0f64).exp() + 1.0).sqrt()).acos();
        assert!((want - 0.545_207_623_830_584).abs() < 1e-12);
        assert!((r.radians() - want).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_inputs() {
        let bad = PhysicalAcceleration {
            omega: -1.0,
            a: 1.0,
            c: 1.0,
        };
        assert!(r_from_acceleration(&bad).is_err());
        assert!(AccelerationParam::new(1.0).is_err());
        assert!(AccelerationParam::new(-0.1).is_err());
        assert!(AccelerationParam::new(f64::NAN).is_err());
    }
}
