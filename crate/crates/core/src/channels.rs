//! Single-qubit Kraus channels and their action on the three-qubit state.
//!
//! Available channels (decoherence parameter p in [0, 1]):
//!
//! | channel       | E0                  | E1                  |
//! |---------------|---------------------|---------------------|
//! | phase damping | diag(1, sqrt(1-p))  | diag(0, sqrt(p))    |
//! | phase flip    | sqrt(1-p) I         | sqrt(p) Z           |
//! | bit flip      | sqrt(1-p) I         | sqrt(p) X           |
//!
//! A coupling assigns one such channel per qubit (or leaves a qubit
//! untouched); the state evolves as rho -> sum_K K rho K† over all products
//! of lifted elements.

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    PhaseDamping,
    PhaseFlip,
    BitFlip,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [
        ChannelKind::PhaseDamping,
        ChannelKind::PhaseFlip,
        ChannelKind::BitFlip,
    ];

    /// Stable CLI/CSV token.
    pub fn label(self) -> &'static str {
        match self {
            ChannelKind::PhaseDamping => "phase-damping",
            ChannelKind::PhaseFlip => "phase-flip",
            ChannelKind::BitFlip => "bit-flip",
        }
    }

    pub fn parse(token: &str) -> Option<ChannelKind> {
        match token {
            "phase-damping" => Some(ChannelKind::PhaseDamping),
            "phase-flip" => Some(ChannelKind::PhaseFlip),
            "bit-flip" => Some(ChannelKind::BitFlip),
            _ => None,
        }
    }
}

/// Single-qubit Kraus elements of one channel at strength p.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    pub kind: ChannelKind,
    pub p: f64,
    pub elements: Vec<ComplexMatrix>,
}

impl KrausSet {
    /// Max-abs deviation of sum E†E from the identity; 0 for an exact set.
    pub fn completeness_deviation(&self) -> f64 {
        let mut acc = ComplexMatrix::zeros(2);
        for e in &self.elements {
            acc.add_assign(&e.dagger().matmul(e).expect("2x2"));
        }
        acc.max_abs_diff(&ComplexMatrix::identity(2))
    }
}

/// The two Kraus elements of `kind` at decoherence strength `p`.
pub fn kraus_single(kind: ChannelKind, p: f64) -> Result<KrausSet> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange {
            name: "p",
            value: p,
            min: 0.0,
            max: 1.0,
        });
    }
    let keep = C64::new((1.0 - p).sqrt(), 0.0);
    let act = C64::new(p.sqrt(), 0.0);
    let elements = match kind {
        ChannelKind::PhaseDamping => vec![
            ComplexMatrix::two_by_two(ONE, ZERO, ZERO, keep),
            ComplexMatrix::two_by_two(ZERO, ZERO, ZERO, act),
        ],
        ChannelKind::PhaseFlip => vec![
            ComplexMatrix::identity(2).scale(keep),
            ComplexMatrix::two_by_two(act, ZERO, ZERO, -act),
        ],
        ChannelKind::BitFlip => vec![
            ComplexMatrix::identity(2).scale(keep),
            ComplexMatrix::two_by_two(ZERO, act, act, ZERO),
        ],
    };
    Ok(KrausSet { kind, p, elements })
}

/// Embed a 2x2 operator on one slot of the three-qubit register
/// (identity on the others, Alice = slot 0).
pub fn lift(e: &ComplexMatrix, qubit: usize) -> Result<ComplexMatrix> {
    if e.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: e.dim(),
            right: 2,
        });
    }
    if qubit > 2 {
        return Err(Error::QubitOutOfRange { index: qubit, qubits: 3 });
    }
    let id = ComplexMatrix::identity(2);
    let slot = |q: usize| if q == qubit { e } else { &id };
    Ok(slot(0).kron(slot(1)).kron(slot(2)))
}

/// Per-qubit channel assignment: `None` leaves that qubit uncoupled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingSpec {
    kind: ChannelKind,
    per_qubit: [Option<f64>; 3],
}

impl CouplingSpec {
    /// Couple a single qubit at strength p.
    pub fn single(kind: ChannelKind, qubit: usize, p: f64) -> Result<Self> {
        if qubit > 2 {
            return Err(Error::QubitOutOfRange { index: qubit, qubits: 3 });
        }
        let mut per_qubit = [None; 3];
        per_qubit[qubit] = Some(p);
        Self::checked(kind, per_qubit)
    }

    /// All three qubits coupled at the same strength.
    pub fn collective(kind: ChannelKind, p: f64) -> Result<Self> {
        Self::checked(kind, [Some(p); 3])
    }

    /// All three qubits coupled at individually chosen strengths.
    pub fn explicit(kind: ChannelKind, params: [f64; 3]) -> Result<Self> {
        Self::checked(kind, params.map(Some))
    }

    fn checked(kind: ChannelKind, per_qubit: [Option<f64>; 3]) -> Result<Self> {
        if per_qubit.iter().all(Option::is_none) {
            return Err(Error::ParamOutOfRange {
                name: "coupling",
                value: 0.0,
                min: 1.0,
                max: 3.0,
            });
        }
        for p in per_qubit.into_iter().flatten() {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::ParamOutOfRange {
                    name: "p",
                    value: p,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        Ok(Self { kind, per_qubit })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn per_qubit(&self) -> [Option<f64>; 3] {
        self.per_qubit
    }
}

/// Evolve a three-qubit state: rho_f = sum_{i,j,k} (Ki Kj Kk) rho (Kk† Kj† Ki†)
/// over the Cartesian product of each coupled qubit's Kraus elements.
pub fn apply_channel(rho: &DensityMatrix, coupling: &CouplingSpec) -> Result<DensityMatrix> {
    if rho.qubits() != 3 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 8,
        });
    }
    let sets: Vec<Vec<ComplexMatrix>> = coupling
        .per_qubit()
        .into_iter()
        .map(|slot| match slot {
            Some(p) => kraus_single(coupling.kind(), p).map(|k| k.elements),
            None => Ok(vec![ComplexMatrix::identity(2)]),
        })
        .collect::<Result<_>>()?;

    let mut out = ComplexMatrix::zeros(8);
    for e0 in &sets[0] {
        for e1 in &sets[1] {
            for e2 in &sets[2] {
                // Lifted operators on distinct slots multiply to the triple
                // Kronecker product.
                let k = e0.kron(e1).kron(e2);
                let term = k.matmul(rho.matrix())?.matmul(&k.dagger())?;
                out.add_assign(&term);
            }
        }
    }
    DensityMatrix::new(3, out)
}
