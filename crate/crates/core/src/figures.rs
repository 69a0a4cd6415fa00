//! Plot-ready CSV bundles for the standard figure set.
//!
//! Each figure is a fixed (channel, coupling, r) curve family swept over a
//! p grid; the emitted files share the sweep CSV format so any plotter can
//! join on (channel, coupling, r).

use std::path::{Path, PathBuf};

use crate::channels::ChannelKind;
use crate::error::Result;
use crate::sweep::{default_p_grid, emit_csv, run_sweep, Coupling, SweepConfig, SweepRow};
use crate::tolerances;

/// One named figure and the curves it contains.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    /// File stem, e.g. "fig1a".
    pub name: &'static str,
    /// (channel, coupling, r) per curve family.
    pub curves: Vec<(ChannelKind, Coupling, f64)>,
}

/// The standard bundle: one-tangle and pi-tangle curves for each channel
/// under single and collective coupling at the reference accelerations.
pub fn figure_bundle() -> Vec<FigureSpec> {
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
    use ChannelKind::{BitFlip, PhaseDamping, PhaseFlip};
    let single = Coupling::Single(0);
    let coll = Coupling::Collective;

    vec![
        FigureSpec {
            name: "fig1a",
            curves: vec![(PhaseDamping, single, FRAC_PI_6)],
        },
        FigureSpec {
            name: "fig1b",
            curves: vec![(PhaseDamping, coll, FRAC_PI_6)],
        },
        FigureSpec {
            name: "fig2",
            curves: vec![
                (PhaseDamping, single, FRAC_PI_6),
                (PhaseDamping, single, FRAC_PI_4),
                (PhaseDamping, coll, FRAC_PI_6),
                (PhaseDamping, coll, FRAC_PI_4),
            ],
        },
        FigureSpec {
            name: "fig3a",
            curves: vec![(PhaseFlip, single, FRAC_PI_6)],
        },
        FigureSpec {
            name: "fig3b",
            curves: vec![(PhaseFlip, coll, FRAC_PI_6), (PhaseFlip, coll, FRAC_PI_4)],
        },
        FigureSpec {
            name: "fig4",
            curves: vec![
                (PhaseFlip, single, FRAC_PI_6),
                (PhaseFlip, single, FRAC_PI_4),
                (PhaseFlip, coll, FRAC_PI_6),
                (PhaseFlip, coll, FRAC_PI_4),
            ],
        },
        FigureSpec {
            name: "fig5a",
            curves: vec![(BitFlip, single, 0.0), (BitFlip, single, FRAC_PI_4)],
        },
        FigureSpec {
            name: "fig5b",
            curves: vec![(BitFlip, coll, 0.0), (BitFlip, coll, FRAC_PI_4)],
        },
        FigureSpec {
            name: "fig6",
            curves: vec![(BitFlip, single, FRAC_PI_6)],
        },
        FigureSpec {
            name: "fig7",
            curves: vec![
                (BitFlip, single, FRAC_PI_6),
                (BitFlip, single, FRAC_PI_4),
                (BitFlip, coll, FRAC_PI_6),
                (BitFlip, coll, FRAC_PI_4),
            ],
        },
    ]
}

/// Rows of one figure over `p_grid`, curve by curve in bundle order.
pub fn figure_rows(fig: &FigureSpec, p_grid: &[f64]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for &(kind, coupling, r) in &fig.curves {
        let cfg = SweepConfig {
            kind,
            coupling,
            r_grid: vec![r],
            p_grid: p_grid.to_vec(),
            output_path: PathBuf::new(),
            check_analytic: false,
            zero_threshold: tolerances::ZERO_THRESHOLD,
        };
        rows.extend(run_sweep(&cfg)?);
    }
    Ok(rows)
}

/// Write the whole bundle into `dir` as fig*.csv; returns the file paths.
pub fn emit_figures(dir: &Path) -> Result<Vec<PathBuf>> {
    let p_grid = default_p_grid();
    let mut written = Vec::new();
    for fig in figure_bundle() {
        let rows = figure_rows(&fig, &p_grid)?;
        let path = dir.join(format!("{}.csv", fig.name));
        emit_csv(&rows, &path)?;
        written.push(path);
    }
    Ok(written)
}
