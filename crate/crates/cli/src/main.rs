//! `sweep` — grid sweeps of tripartite tangles under noisy channels.
//!
//! Exit codes: 0 success, 2 config error, 3 closed-form deviation above
//! tolerance with --check-analytic, 4 i/o error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use tritangle::channels::ChannelKind;
use tritangle::error::Error;
use tritangle::figures::emit_figures;
use tritangle::sweep::{
    compare_numeric_analytic, default_r_grid, detect_rebirth, detect_sudden_death, emit_csv,
    run_sweep, series_at_r, Coupling, SweepConfig, SweepRow,
};
use tritangle::tolerances;

const EXIT_CONFIG: u8 = 2;
const EXIT_ORACLE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "sweep",
    about = "Sweep tripartite GHZ tangles over acceleration and decoherence grids",
    after_help = "Examples:\n  \
        sweep --channel phase-flip --coupling a --r-grid default --p-grid 0:1:0.01 --out pf.csv\n  \
        sweep --channel phase-damping --coupling collective --r-grid 0,0.5235987755982988 \\\n        \
              --p-grid 0,0.5,1 --out pd.csv --check-analytic\n  \
        sweep --channel bit-flip --coupling explicit:0.3,0.1,0.6 --r-grid default --p-grid 0 \\\n        \
              --out bf.csv --figures figs/"
)]
struct Args {
    /// Noise channel: phase-damping | phase-flip | bit-flip
    #[arg(long)]
    channel: String,

    /// Coupling: a | b | c | collective | explicit:p0,p1,p2
    #[arg(long)]
    coupling: String,

    /// Acceleration grid: comma list of radians in [0, pi/4], or "default"
    #[arg(long = "r-grid")]
    r_grid: String,

    /// Decoherence grid: start:stop:step or comma list, values in [0, 1]
    #[arg(long = "p-grid")]
    p_grid: String,

    /// Output CSV path
    #[arg(long)]
    out: PathBuf,

    /// Diff the sweep against the closed-form expressions
    #[arg(long = "check-analytic")]
    check_analytic: bool,

    /// Also emit the fig*.csv bundle into this directory
    #[arg(long)]
    figures: Option<PathBuf>,

    /// Tangles at or below this value count as dead
    #[arg(long = "zero-threshold", default_value_t = tolerances::ZERO_THRESHOLD)]
    zero_threshold: f64,
}

fn config_error(field: &'static str, reason: String) -> Error {
    Error::Config { field, reason }
}

fn parse_channel(token: &str) -> Result<ChannelKind, Error> {
    ChannelKind::parse(token).ok_or_else(|| {
        config_error(
            "channel",
            format!("unknown channel `{token}`; expected phase-damping, phase-flip or bit-flip"),
        )
    })
}

fn parse_coupling(token: &str) -> Result<Coupling, Error> {
    match token {
        "a" => Ok(Coupling::Single(0)),
        "b" => Ok(Coupling::Single(1)),
        "c" => Ok(Coupling::Single(2)),
        "collective" => Ok(Coupling::Collective),
        other => {
            let rest = other.strip_prefix("explicit:").ok_or_else(|| {
                config_error(
                    "coupling",
                    format!("unknown coupling `{other}`; expected a, b, c, collective or explicit:p0,p1,p2"),
                )
            })?;
            let parts: Vec<f64> = rest
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| config_error("coupling", format!("bad explicit parameter: {e}")))?;
            if parts.len() != 3 {
                return Err(config_error(
                    "coupling",
                    format!("explicit coupling needs exactly 3 parameters, got {}", parts.len()),
                ));
            }
            Ok(Coupling::Explicit([parts[0], parts[1], parts[2]]))
        }
    }
}

fn parse_float_list(token: &str, field: &'static str) -> Result<Vec<f64>, Error> {
    token
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| config_error(field, format!("bad number: {e}")))
}

fn parse_r_grid(token: &str) -> Result<Vec<f64>, Error> {
    if token == "default" {
        return Ok(default_r_grid());
    }
    parse_float_list(token, "r_grid")
}

fn parse_p_grid(token: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = token.split(':').collect();
    match parts.len() {
        1 => parse_float_list(token, "p_grid"),
        3 => {
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| config_error("p_grid", format!("bad number in range: {e}")))
            };
            let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
            if !(step.is_finite() && step > 0.0) || stop < start {
                return Err(config_error(
                    "p_grid",
                    format!("range {start}:{stop}:{step} is not ascending with positive step"),
                ));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize;
            // Rounding can push the last point one ulp past stop; pin it.
            Ok((0..=count)
                .map(|i| (start + i as f64 * step).min(stop))
                .collect())
        }
        _ => Err(config_error(
            "p_grid",
            "expected start:stop:step or a comma list".into(),
        )),
    }
}

fn build_config(args: &Args) -> Result<SweepConfig, Error> {
    let cfg = SweepConfig {
        kind: parse_channel(&args.channel)?,
        coupling: parse_coupling(&args.coupling)?,
        r_grid: parse_r_grid(&args.r_grid)?,
        p_grid: parse_p_grid(&args.p_grid)?,
        output_path: args.out.clone(),
        check_analytic: args.check_analytic,
        zero_threshold: args.zero_threshold,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn print_summary(cfg: &SweepConfig, rows: &[SweepRow]) {
    println!(
        "sweep: channel={} coupling={} ({} r-values x {} p-values)",
        cfg.kind.label(),
        cfg.coupling.label(),
        cfg.r_grid.len(),
        cfg.p_grid.len()
    );
    let mut worst_two_tangle = 0.0f64;
    let mut min_slack = f64::INFINITY;
    for row in rows {
        for t in row.two_tangles {
            worst_two_tangle = worst_two_tangle.max(t.abs());
        }
        min_slack = min_slack.min(row.ckw_slack);
    }
    println!("  max |two-tangle| = {worst_two_tangle:.3e}, min ckw slack = {min_slack:.3e}");

    if cfg.p_grid.len() < 2 {
        return;
    }
    for &r in &cfg.r_grid {
        for (label, series) in [
            ("N_A(BC)", series_at_r(rows, r, |row| row.one_tangles[0])),
            ("pi", series_at_r(rows, r, |row| row.pi_tangle)),
        ] {
            let death = detect_sudden_death(&series, cfg.zero_threshold);
            let rebirth = detect_rebirth(&series, cfg.zero_threshold);
            match (death, rebirth) {
                (None, _) => println!("  r={r:.6} {label}: no sudden death"),
                (Some(d), None) => println!("  r={r:.6} {label}: sudden death at p*={d:.4}"),
                (Some(d), Some(b)) => {
                    println!("  r={r:.6} {label}: sudden death at p*={d:.4}, rebirth at p={b:.2}")
                }
            }
        }
    }
}

fn run(args: &Args) -> Result<u8, Error> {
    let cfg = build_config(args)?;
    let rows = run_sweep(&cfg)?;
    emit_csv(&rows, &cfg.output_path)?;
    print_summary(&cfg, &rows);
    println!("  wrote {}", cfg.output_path.display());

    if let Some(dir) = &args.figures {
        std::fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.clone(),
            source,
        })?;
        let files = emit_figures(dir)?;
        println!("  wrote {} figure files under {}", files.len(), dir.display());
    }

    if cfg.check_analytic {
        let report = compare_numeric_analytic(&cfg)?;
        print!("{}", report.render());
        if !report.within_tolerance() {
            eprintln!("closed-form deviation above tolerance; matrix pipeline is ground truth");
            return Ok(EXIT_ORACLE);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(err @ Error::Io { .. }) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_IO)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
