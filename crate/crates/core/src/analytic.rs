//! Closed-form tangle expressions for equal accelerations (rb = rc = r).
//!
//! These are the textbook formulas for this system, kept verbatim so the
//! sweep can diff them against the matrix pipeline. They coincide with the
//! pipeline in the inertial limit and wherever the coherence factor
//! vanishes, but deviate for r > 0 (see `compare_numeric_analytic` and the
//! README); the matrix pipeline is the reference.

use crate::channels::ChannelKind;
use crate::error::{Error, Result};
use crate::rindler::AccelerationParam;

/// One point of the closed-form family: channel kind, acceleration, and the
/// three per-qubit decoherence parameters (uncoupled qubits sit at 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticPoint {
    pub kind: ChannelKind,
    pub r: AccelerationParam,
    pub p: [f64; 3],
}

impl AnalyticPoint {
    pub fn new(kind: ChannelKind, r: AccelerationParam, p: [f64; 3]) -> Result<Self> {
        for v in p {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::ParamOutOfRange {
                    name: "p",
                    value: v,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        Ok(Self { kind, r, p })
    }

    fn expect_kind(&self, expected: ChannelKind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::WrongChannelKind {
                expected,
                got: self.kind,
            });
        }
        Ok(())
    }
}

/// Phase damping one-tangles (N_A(BC), N_B(AC), N_C(AB)).
pub fn pd_one_tangles(pt: &AnalyticPoint) -> Result<[f64; 3]> {
    pt.expect_kind(ChannelKind::PhaseDamping)?;
    let r = pt.r.radians();
    let q = (1.0 - pt.p[0]) * (1.0 - pt.p[1]) * (1.0 - pt.p[2]);
    let (c4, s8, s2r2) = trig(r);

    let na = 0.25
        * (-2.0 + 2.0 * c4 + 2.0 * (q * c4).sqrt() + 2.0 * (q * c4 + s8).sqrt() + s2r2);
    let nb = (1.0 / 16.0)
        * (-1.0
            + 8.0 * (q * c4).sqrt()
            + (4.0 * r).cos()
            + 2.0 * (16.0 * q * c4 + s2r2 * s2r2).sqrt());
    Ok([na, nb, nb])
}

/// Phase damping pi-tangle.
pub fn pd_pi_tangle(pt: &AnalyticPoint) -> Result<f64> {
    pt.expect_kind(ChannelKind::PhaseDamping)?;
    let r = pt.r.radians();
    let q = (1.0 - pt.p[0]) * (1.0 - pt.p[1]) * (1.0 - pt.p[2]);
    let (c4, s8, s2r2) = trig(r);

    let a = -2.0 + 2.0 * c4 + 2.0 * (q * c4).sqrt() + 2.0 * (q * c4 + s8).sqrt() + s2r2;
    let b = -1.0
        + 8.0 * (q * c4).sqrt()
        + (4.0 * r).cos()
        + 2.0 * (16.0 * q * c4 + s2r2 * s2r2).sqrt();
    Ok((8.0 * a * a + b * b) / 384.0)
}

/// Phase flip one-tangles, absolute-value factors included as printed.
pub fn pf_one_tangles(pt: &AnalyticPoint) -> Result<[f64; 3]> {
    pt.expect_kind(ChannelKind::PhaseFlip)?;
    let r = pt.r.radians();
    let g = flip_product(pt.p);
    let (c4, s8, s2r2) = trig(r);
    let c2 = r.cos().powi(2);
    let s4 = r.sin().powi(4);

    let na = 0.25
        * (-2.0 + 2.0 * c2 * (g.abs() + c2) + 2.0 * (g * g * c4 + s8).sqrt() + s2r2);
    let nb = 0.125
        * (-4.0
            + 4.0 * g.abs() * c2
            + 4.0 * c4
            + 4.0 * s4
            + s2r2
            + (16.0 * g * g * c4 + s2r2 * s2r2).sqrt());
    Ok([na, nb, nb])
}

/// Phase flip pi-tangle.
pub fn pf_pi_tangle(pt: &AnalyticPoint) -> Result<f64> {
    pt.expect_kind(ChannelKind::PhaseFlip)?;
    let r = pt.r.radians();
    let g = flip_product(pt.p);
    let (c4, s8, s2r2) = trig(r);
    let c2 = r.cos().powi(2);
    let s4 = r.sin().powi(4);

    let a = -2.0 + 2.0 * c2 * (g.abs() + c2) + 2.0 * (g * g * c4 + s8).sqrt() + s2r2;
    let b = -4.0
        + 4.0 * (1.0 - 2.0 * pt.p[0]).abs()
            * (1.0 - 2.0 * pt.p[1]).abs()
            * (1.0 - 2.0 * pt.p[2]).abs()
            * c2
        + 4.0 * c4
        + 4.0 * s4
        + s2r2
        + (16.0 * g * g * c4 + s2r2 * s2r2).sqrt();
    Ok((2.0 * a * a + b * b) / 96.0)
}

/// Bit flip special-case one-tangles.
///
/// Covered points: r = 0 with at most one qubit coupled, or r = 0 with all
/// three coupled at equal strength. Anything else is `OracleUncovered`.
pub fn bf_special_cases(pt: &AnalyticPoint) -> Result<[f64; 3]> {
    pt.expect_kind(ChannelKind::BitFlip)?;
    if pt.r.radians() != 0.0 {
        return Err(Error::OracleUncovered);
    }
    let [p0, p1, p2] = pt.p;
    if p0 == p1 && p1 == p2 {
        let p = p0;
        let v = -1.0
            + 2.0 * 2.0f64.sqrt() * ((p - 1.0) * (p - 1.0) * p * p).sqrt()
            + 2.0 * (1.0 - 6.0 * p + 16.0 * p * p - 20.0 * p * p * p + 10.0 * p * p * p * p)
                .sqrt();
        return Ok([v, v, v]);
    }
    let coupled: Vec<usize> = (0..3).filter(|&i| pt.p[i] != 0.0).collect();
    if coupled.len() != 1 {
        return Err(Error::OracleUncovered);
    }
    let i = coupled[0];
    let p = pt.p[i];
    let mut out = [1.0, 1.0, 1.0];
    out[i] = -1.0 + 2.0 * (1.0 - 2.0 * p + 2.0 * p * p).sqrt();
    Ok(out)
}

fn flip_product(p: [f64; 3]) -> f64 {
    (1.0 - 2.0 * p[0]) * (1.0 - 2.0 * p[1]) * (1.0 - 2.0 * p[2])
}

/// (cos^4 r, sin^8 r, sin^2 2r).
fn trig(r: f64) -> (f64, f64, f64) {
    let c4 = r.cos().powi(4);
    let s8 = r.sin().powi(8);
    let s2r = (2.0 * r).sin();
    (c4, s8, s2r * s2r)
}
