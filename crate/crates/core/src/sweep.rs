//! Deterministic parameter sweeps over (r, p) grids.
//!
//! Grid points are independent work items; with the `parallel` feature they
//! are evaluated on the rayon pool and merged back in grid order, so output
//! is byte-identical across runs and worker counts.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::analytic::{self, AnalyticPoint};
use crate::channels::{apply_channel, ChannelKind, CouplingSpec};
use crate::error::{Error, Result};
use crate::measures::pi_tangle;
use crate::rindler::{rindler_ghz, AccelerationParam};
use crate::tolerances;

/// Which qubits couple to the channel, and how the swept p maps onto them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    /// One qubit coupled at the swept strength (0 = Alice, 1 = Bob, 2 = Charlie).
    Single(usize),
    /// All three qubits coupled at the swept strength.
    Collective,
    /// All three qubits coupled at fixed strengths; the p grid must then be
    /// a single point.
    Explicit([f64; 3]),
}

impl Coupling {
    /// Stable CSV label: "A", "B", "C", "collective" or "explicit".
    pub fn label(&self) -> &'static str {
        match self {
            Coupling::Single(0) => "A",
            Coupling::Single(1) => "B",
            Coupling::Single(2) => "C",
            Coupling::Single(_) => "?",
            Coupling::Collective => "collective",
            Coupling::Explicit(_) => "explicit",
        }
    }

    /// Per-qubit decoherence parameters when the sweep variable is `p`.
    pub fn params_at(&self, p: f64) -> [f64; 3] {
        match *self {
            Coupling::Single(q) => {
                let mut out = [0.0; 3];
                out[q] = p;
                out
            }
            Coupling::Collective => [p; 3],
            Coupling::Explicit(fixed) => fixed,
        }
    }

    fn spec_at(&self, kind: ChannelKind, p: f64) -> Result<CouplingSpec> {
        match *self {
            Coupling::Single(q) => CouplingSpec::single(kind, q, p),
            Coupling::Collective => CouplingSpec::collective(kind, p),
            Coupling::Explicit(fixed) => CouplingSpec::explicit(kind, fixed),
        }
    }
}

/// Everything one sweep needs.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub kind: ChannelKind,
    pub coupling: Coupling,
    pub r_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub output_path: PathBuf,
    pub check_analytic: bool,
    pub zero_threshold: f64,
}

impl SweepConfig {
    pub fn new(kind: ChannelKind, coupling: Coupling) -> Self {
        Self {
            kind,
            coupling,
            r_grid: default_r_grid(),
            p_grid: default_p_grid(),
            output_path: PathBuf::from("sweep.csv"),
            check_analytic: false,
            zero_threshold: tolerances::ZERO_THRESHOLD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let sorted_in = |grid: &[f64], lo: f64, hi: f64, field: &'static str| -> Result<()> {
            if grid.is_empty() {
                return Err(Error::Config {
                    field,
                    reason: "grid is empty".into(),
                });
            }
            if grid.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Config {
                    field,
                    reason: "grid is not sorted strictly ascending".into(),
                });
            }
            if grid.iter().any(|v| !v.is_finite() || *v < lo || *v > hi) {
                return Err(Error::Config {
                    field,
                    reason: format!("values must lie in [{lo}, {hi}]"),
                });
            }
            Ok(())
        };
        sorted_in(&self.r_grid, 0.0, std::f64::consts::FRAC_PI_4, "r_grid")?;
        sorted_in(&self.p_grid, 0.0, 1.0, "p_grid")?;
        if let Coupling::Single(q) = self.coupling {
            if q > 2 {
                return Err(Error::Config {
                    field: "coupling",
                    reason: format!("qubit index {q} out of range"),
                });
            }
        }
        if let Coupling::Explicit(fixed) = self.coupling {
            if fixed.iter().any(|p| !p.is_finite() || !(0.0..=1.0).contains(p)) {
                return Err(Error::Config {
                    field: "coupling",
                    reason: "explicit parameters must lie in [0, 1]".into(),
                });
            }
            if self.p_grid.len() != 1 {
                return Err(Error::Config {
                    field: "p_grid",
                    reason: "explicit coupling fixes p0,p1,p2; use a single-point p grid".into(),
                });
            }
        }
        if !self.zero_threshold.is_finite() || self.zero_threshold < 0.0 {
            return Err(Error::Config {
                field: "zero_threshold",
                reason: "must be a nonnegative finite number".into(),
            });
        }
        Ok(())
    }
}

/// r in {0, pi/12, pi/6, pi/4}.
pub fn default_r_grid() -> Vec<f64> {
    use std::f64::consts::PI;
    vec![0.0, PI / 12.0, PI / 6.0, PI / 4.0]
}

/// p from 0 to 1 in steps of 0.01.
pub fn default_p_grid() -> Vec<f64> {
    (0..=100).map(|i| i as f64 / 100.0).collect()
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub kind: ChannelKind,
    pub coupling_label: &'static str,
    pub r: f64,
    pub p: [f64; 3],
    /// (N_A(BC), N_B(AC), N_C(AB)), clamped.
    pub one_tangles: [f64; 3],
    /// (N_AB, N_AC, N_BC), clamped.
    pub two_tangles: [f64; 3],
    pub pi_tangle: f64,
    pub ckw_slack: f64,
    /// Max |numeric - analytic| over the covered quantities at this point;
    /// `None` when the comparison was not requested or nothing is covered.
    pub analytic_delta: Option<f64>,
}

/// Run the sweep; one row per (r, p) grid point, r-major order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let points = grid_points(cfg);
    #[cfg(feature = "parallel")]
    {
        points
            .par_iter()
            .map(|&(r, p)| evaluate_point(cfg, r, p))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        points
            .iter()
            .map(|&(r, p)| evaluate_point(cfg, r, p))
            .collect()
    }
}

/// Same result as [`run_sweep`], always on the current thread. Kept public
/// as the determinism cross-check and benchmark baseline.
pub fn run_sweep_serial(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    grid_points(cfg)
        .iter()
        .map(|&(r, p)| evaluate_point(cfg, r, p))
        .collect()
}

fn grid_points(cfg: &SweepConfig) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(cfg.r_grid.len() * cfg.p_grid.len());
    for &r in &cfg.r_grid {
        for &p in &cfg.p_grid {
            out.push((r, p));
        }
    }
    out
}

fn evaluate_point(cfg: &SweepConfig, r: f64, p: f64) -> Result<SweepRow> {
    let accel = AccelerationParam::new(r)?;
    let coupling = cfg.coupling.spec_at(cfg.kind, p)?;
    let rho = apply_channel(&rindler_ghz(accel, accel), &coupling)?;
    let report = pi_tangle(&rho)?;
    let params = cfg.coupling.params_at(p);

    let analytic_delta = if cfg.check_analytic {
        analytic_deviation(cfg.kind, accel, params, &report.one_tangles, report.pi_tangle)
            .map(|per_quantity| per_quantity.into_iter().fold(0.0f64, f64::max))
    } else {
        None
    };

    Ok(SweepRow {
        kind: cfg.kind,
        coupling_label: cfg.coupling.label(),
        r,
        p: params,
        one_tangles: report.one_tangles,
        two_tangles: report.two_tangles,
        pi_tangle: report.pi_tangle,
        ckw_slack: report.ckw_slack,
        analytic_delta,
    })
}

/// |numeric - analytic| per covered quantity, in the order
/// (N_A(BC), N_B(AC), N_C(AB), pi). `None` when no closed form covers the point.
fn analytic_deviation(
    kind: ChannelKind,
    r: AccelerationParam,
    p: [f64; 3],
    numeric_one: &[f64; 3],
    numeric_pi: f64,
) -> Option<Vec<f64>> {
    let pt = AnalyticPoint::new(kind, r, p).ok()?;
    let (one, pi) = match kind {
        ChannelKind::PhaseDamping => (
            analytic::pd_one_tangles(&pt).ok()?,
            Some(analytic::pd_pi_tangle(&pt).ok()?),
        ),
        ChannelKind::PhaseFlip => (
            analytic::pf_one_tangles(&pt).ok()?,
            Some(analytic::pf_pi_tangle(&pt).ok()?),
        ),
        ChannelKind::BitFlip => (analytic::bf_special_cases(&pt).ok()?, None),
    };
    let mut out: Vec<f64> = numeric_one
        .iter()
        .zip(one)
        .map(|(n, a)| (n - a).abs())
        .collect();
    if let Some(a) = pi {
        out.push((numeric_pi - a).abs());
    }
    Some(out)
}

/// Smallest p where a series that started alive drops to or below the
/// threshold, linearly interpolated between the bracketing grid points.
pub fn detect_sudden_death(series: &[(f64, f64)], zero_threshold: f64) -> Option<f64> {
    let first = series.first()?;
    if first.1 <= zero_threshold {
        return None;
    }
    for (i, &(p, v)) in series.iter().enumerate() {
        if v <= zero_threshold {
            let (p0, v0) = series[i - 1];
            return Some(p0 + (v0 - zero_threshold) * (p - p0) / (v0 - v));
        }
    }
    None
}

/// Smallest grid p after a detected death where the series is alive again.
pub fn detect_rebirth(series: &[(f64, f64)], zero_threshold: f64) -> Option<f64> {
    let death = detect_sudden_death(series, zero_threshold)?;
    series
        .iter()
        .find(|&&(p, v)| p > death && v > zero_threshold)
        .map(|&(p, _)| p)
}

/// Exact column header of every emitted CSV.
pub const CSV_HEADER: &str =
    "channel,coupling,r,p0,p1,p2,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC,pi,ckw_slack,analytic_delta";

/// Plain decimal rendering with `sig` significant digits; zero prints "0".
pub fn format_significant(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn push_row(out: &mut String, row: &SweepRow) {
    let f = |x: f64| format_significant(x, 12);
    out.push_str(row.kind.label());
    out.push(',');
    out.push_str(row.coupling_label);
    for v in [row.r, row.p[0], row.p[1], row.p[2]] {
        out.push(',');
        out.push_str(&f(v));
    }
    for v in row.one_tangles.iter().chain(row.two_tangles.iter()) {
        out.push(',');
        out.push_str(&f(*v));
    }
    out.push(',');
    out.push_str(&f(row.pi_tangle));
    out.push(',');
    out.push_str(&f(row.ckw_slack));
    out.push(',');
    if let Some(d) = row.analytic_delta {
        out.push_str(&f(d));
    }
    out.push('\n');
}

/// Render rows to the full CSV text, header included.
pub fn csv_string(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        push_row(&mut out, row);
    }
    out
}

/// Write rows as UTF-8 CSV at `path`.
pub fn emit_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    let wrap = |source: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut file = fs::File::create(path).map_err(wrap)?;
    file.write_all(csv_string(rows).as_bytes()).map_err(wrap)?;
    Ok(())
}

/// Worst numeric-vs-analytic deviation of one quantity over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantityDeviation {
    pub quantity: &'static str,
    pub max_abs: f64,
    /// (r, p) of the worst point.
    pub at: (f64, f64),
}

/// Outcome of [`compare_numeric_analytic`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub kind: ChannelKind,
    pub coupling_label: &'static str,
    pub deviations: Vec<QuantityDeviation>,
    /// Grid points with no closed-form coverage.
    pub uncovered: Vec<(f64, f64)>,
    pub tolerance: f64,
}

impl ComparisonReport {
    pub fn within_tolerance(&self) -> bool {
        self.deviations.iter().all(|d| d.max_abs <= self.tolerance)
    }

    /// Human-readable multi-line summary.
    pub fn render(&self) -> String {
        let mut out = format!(
            "analytic comparison: channel={} coupling={} tolerance={:.1e}\n",
            self.kind.label(),
            self.coupling_label,
            self.tolerance
        );
        if self.deviations.is_empty() {
            out.push_str("  no covered grid points\n");
        }
        for d in &self.deviations {
            out.push_str(&format!(
                "  {:6}  max |numeric - analytic| = {:.6e} at (r={:.6}, p={:.4}){}\n",
                d.quantity,
                d.max_abs,
                d.at.0,
                d.at.1,
                if d.max_abs <= self.tolerance { "" } else { "  EXCEEDS" }
            ));
        }
        if !self.uncovered.is_empty() {
            out.push_str(&format!(
                "  {} grid points have no oracle coverage (first at r={:.6}, p={:.4})\n",
                self.uncovered.len(),
                self.uncovered[0].0,
                self.uncovered[0].1
            ));
        }
        out
    }
}

const QUANTITY_NAMES: [&str; 4] = ["N_A_BC", "N_B_AC", "N_C_AB", "pi"];

/// Diff the matrix pipeline against the closed forms over the config's grid.
pub fn compare_numeric_analytic(cfg: &SweepConfig) -> Result<ComparisonReport> {
    cfg.validate()?;
    let mut maxima: Vec<Option<QuantityDeviation>> = vec![None; 4];
    let mut uncovered = Vec::new();

    for &r in &cfg.r_grid {
        for &p in &cfg.p_grid {
            let accel = AccelerationParam::new(r)?;
            let coupling = cfg.coupling.spec_at(cfg.kind, p)?;
            let rho = apply_channel(&rindler_ghz(accel, accel), &coupling)?;
            let report = pi_tangle(&rho)?;
            let params = cfg.coupling.params_at(p);
            match analytic_deviation(cfg.kind, accel, params, &report.one_tangles, report.pi_tangle)
            {
                None => uncovered.push((r, p)),
                Some(devs) => {
                    for (slot, dev) in devs.into_iter().enumerate() {
                        let current = maxima[slot].as_ref().map_or(-1.0, |d| d.max_abs);
                        if dev > current {
                            maxima[slot] = Some(QuantityDeviation {
                                quantity: QUANTITY_NAMES[slot],
                                max_abs: dev,
                                at: (r, p),
                            });
                        }
                    }
                }
            }
        }
    }

    Ok(ComparisonReport {
        kind: cfg.kind,
        coupling_label: cfg.coupling.label(),
        deviations: maxima.into_iter().flatten().collect(),
        uncovered,
        tolerance: tolerances::ORACLE_AGREEMENT,
    })
}

/// Pull one (p, value) series out of sweep rows at fixed r.
pub fn series_at_r(rows: &[SweepRow], r: f64, pick: impl Fn(&SweepRow) -> f64) -> Vec<(f64, f64)> {
    rows.iter()
        .filter(|row| row.r == r)
        .map(|row| (sweep_p(row), pick(row)))
        .collect()
}

/// The swept scalar p of a row (max of the per-qubit parameters).
fn sweep_p(row: &SweepRow) -> f64 {
    row.p.iter().copied().fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    fn config(kind: ChannelKind, coupling: Coupling) -> SweepConfig {
        SweepConfig::new(kind, coupling)
    }

    #[test]
    fn default_grids_have_expected_shape() {
        assert_eq!(default_r_grid().len(), 4);
        assert_eq!(default_p_grid().len(), 101);
        assert_eq!(default_p_grid()[50], 0.5);
        assert_eq!(*default_r_grid().last().unwrap(), FRAC_PI_4);
    }

    #[test]
    fn single_point_sweep_matches_frozen_value() {
        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        cfg.p_grid = vec![0.0];
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 1);
        // Independent-pipeline value; the closed forms quote 0.7200498 here,
        // see compare_numeric_analytic.
        assert!((rows[0].one_tangles[0] - 0.719_400_759_341_519).abs() < 1e-12);
        assert_eq!(rows[0].coupling_label, "A");
        assert_eq!(rows[0].p, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn phase_flip_half_point_is_all_zero() {
        let mut cfg = config(ChannelKind::PhaseFlip, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        cfg.p_grid = vec![0.5];
        let row = &run_sweep(&cfg).unwrap()[0];
        for t in row.one_tangles.iter().chain(row.two_tangles.iter()) {
            assert_eq!(*t, 0.0);
        }
        assert_eq!(row.pi_tangle, 0.0);
    }

    #[test]
    fn bit_flip_endpoints_match() {
        let mut cfg = config(ChannelKind::BitFlip, Coupling::Single(0));
        cfg.r_grid = vec![0.0];
        cfg.p_grid = vec![0.0, 1.0];
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        for q in 0..3 {
            assert!((rows[0].one_tangles[q] - rows[1].one_tangles[q]).abs() < 1e-12);
        }
    }

    #[test]
    fn rows_in_grid_order_and_deterministic() {
        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Collective);
        cfg.r_grid = vec![0.0, FRAC_PI_6];
        cfg.p_grid = (0..=10).map(|i| i as f64 / 10.0).collect();
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        let serial = run_sweep_serial(&cfg).unwrap();
        assert_eq!(csv_string(&a), csv_string(&b));
        assert_eq!(csv_string(&a), csv_string(&serial));
        let mut expect = Vec::new();
        for &r in &cfg.r_grid {
            for &p in &cfg.p_grid {
                expect.push((r, p));
            }
        }
        let got: Vec<(f64, f64)> = a.iter().map(|row| (row.r, row.p[0])).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn explicit_coupling_requires_singleton_p_grid() {
        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Explicit([0.3, 0.1, 0.6]));
        assert!(matches!(
            cfg.validate(),
            Err(Error::Config { field: "p_grid", .. })
        ));
        cfg.p_grid = vec![0.0];
        cfg.validate().unwrap();
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), cfg.r_grid.len());
        assert_eq!(rows[0].p, [0.3, 0.1, 0.6]);
        assert_eq!(rows[0].coupling_label, "explicit");
    }

    #[test]
    fn config_rejects_bad_grids() {
        let mut cfg = config(ChannelKind::PhaseFlip, Coupling::Single(1));
        cfg.r_grid = vec![];
        assert!(matches!(cfg.validate(), Err(Error::Config { field: "r_grid", .. })));
        cfg.r_grid = vec![0.2, 0.1];
        assert!(matches!(cfg.validate(), Err(Error::Config { field: "r_grid", .. })));
        cfg.r_grid = vec![0.0, 1.0];
        assert!(matches!(cfg.validate(), Err(Error::Config { field: "r_grid", .. })));
        cfg.r_grid = default_r_grid();
        cfg.p_grid = vec![0.0, 2.0];
        assert!(matches!(cfg.validate(), Err(Error::Config { field: "p_grid", .. })));
    }

    #[test]
    fn death_detection_examples() {
        // Phase flip, single coupling: death at 0.5 within grid resolution,
        // rebirth at the next grid point, for any acceleration.
        for r in [0.0, FRAC_PI_6, FRAC_PI_4] {
            let mut cfg = config(ChannelKind::PhaseFlip, Coupling::Single(0));
            cfg.r_grid = vec![r];
            let rows = run_sweep(&cfg).unwrap();
            let series = series_at_r(&rows, r, |row| row.one_tangles[0]);
            let death = detect_sudden_death(&series, cfg.zero_threshold).unwrap();
            assert!((death - 0.5).abs() < 0.005, "death at {death}");
            let rebirth = detect_rebirth(&series, cfg.zero_threshold).unwrap();
            assert_eq!(rebirth, 0.51);
        }

        // Phase damping, single coupling: alive until full decoherence.
        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        let rows = run_sweep(&cfg).unwrap();
        let series = series_at_r(&rows, FRAC_PI_6, |row| row.one_tangles[0]);
        let death = detect_sudden_death(&series, cfg.zero_threshold).unwrap();
        assert!((death - 1.0).abs() < 0.01);
        assert!(detect_rebirth(&series, cfg.zero_threshold).is_none());

        // Bit flip, single coupling: the pi-tangle never dies, even at the
        // acceleration limit.
        let mut cfg = config(ChannelKind::BitFlip, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_4];
        let rows = run_sweep(&cfg).unwrap();
        let series = series_at_r(&rows, FRAC_PI_4, |row| row.pi_tangle);
        assert!(detect_sudden_death(&series, cfg.zero_threshold).is_none());
        assert!(detect_rebirth(&series, cfg.zero_threshold).is_none());
    }

    #[test]
    fn death_detection_edge_cases() {
        // Starts dead: no death event.
        assert_eq!(detect_sudden_death(&[(0.0, 0.0), (0.1, 0.5)], 1e-9), None);
        // Exact linear crossing interpolates onto the threshold.
        let series = [(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)];
        let death = detect_sudden_death(&series, 1e-9).unwrap();
        assert!((death - 1.0).abs() < 1e-8);
        // Empty series.
        assert_eq!(detect_sudden_death(&[], 1e-9), None);
    }

    #[test]
    fn format_significant_cases() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(0.5, 12), "0.500000000000");
        assert_eq!(format_significant(1.0, 12), "1.00000000000");
        assert_eq!(
            format_significant(0.719_400_759_341_519_5, 12),
            "0.719400759342"
        );
        assert_eq!(format_significant(0.1, 12), "0.100000000000");
        assert_eq!(format_significant(-0.25, 12), "-0.250000000000");
    }

    #[test]
    fn csv_shape_and_header() {
        assert_eq!(csv_string(&[]), format!("{CSV_HEADER}\n"));

        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        cfg.p_grid = vec![0.0];
        let rows = run_sweep(&cfg).unwrap();
        let text = csv_string(&rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        let fields: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(fields.len(), 15);
        assert_eq!(fields[0], "phase-damping");
        assert_eq!(fields[1], "A");
        assert_eq!(fields[6], "0.719400759342");
        assert_eq!(fields[14], "");
    }

    #[test]
    fn emit_csv_reports_path_on_failure() {
        let rows: Vec<SweepRow> = Vec::new();
        let bad = Path::new("/nonexistent-dir/out.csv");
        match emit_csv(&rows, bad) {
            Err(Error::Io { path, .. }) => assert_eq!(path, bad),
            other => panic!("expected io error, got {other:?}"),
        }
    }

    #[test]
    fn comparison_exact_at_inertial_grid() {
        for kind in [ChannelKind::PhaseDamping, ChannelKind::PhaseFlip] {
            let mut cfg = config(kind, Coupling::Single(0));
            cfg.r_grid = vec![0.0];
            cfg.p_grid = (0..=20).map(|i| i as f64 / 20.0).collect();
            let report = compare_numeric_analytic(&cfg).unwrap();
            assert!(report.uncovered.is_empty());
            assert!(
                report.within_tolerance(),
                "{kind:?}: {}",
                report.render()
            );
        }
    }

    #[test]
    fn comparison_flags_accelerated_deviation() {
        let mut cfg = config(ChannelKind::PhaseDamping, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        cfg.p_grid = vec![0.0];
        let report = compare_numeric_analytic(&cfg).unwrap();
        assert!(!report.within_tolerance());
        let na = &report.deviations[0];
        assert_eq!(na.quantity, "N_A_BC");
        // Frozen: |(sqrt(577)-1)/32 - closed form| at (pi/6, p=0).
        assert!((na.max_abs - (0.720_049_830_587_259 - 0.719_400_759_341_519)).abs() < 1e-9);
        assert!(report.render().contains("EXCEEDS"));
    }

    #[test]
    fn comparison_lists_uncovered_bit_flip_points() {
        let mut cfg = config(ChannelKind::BitFlip, Coupling::Single(0));
        cfg.r_grid = vec![FRAC_PI_6];
        cfg.p_grid = vec![0.0, 0.5, 1.0];
        let report = compare_numeric_analytic(&cfg).unwrap();
        assert_eq!(report.uncovered.len(), 3);
        assert!(report.deviations.is_empty());
        assert!(report.render().contains("no oracle coverage"));
    }
}
