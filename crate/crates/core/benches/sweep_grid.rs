//! Grid-evaluation throughput: rayon pool vs single thread.
//!
//! Run with `cargo bench -p tritangle`. The parallel case needs the default
//! `parallel` feature; without it both benches measure the sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use tritangle::sweep::{run_sweep, run_sweep_serial, SweepConfig};
use tritangle::{ChannelKind, Coupling};

fn bench_config() -> SweepConfig {
    let mut cfg = SweepConfig::new(ChannelKind::PhaseFlip, Coupling::Collective);
    cfg.p_grid = (0..=25).map(|i| i as f64 / 25.0).collect();
    cfg
}

fn sweep_benches(c: &mut Criterion) {
    let cfg = bench_config();
    let mut group = c.benchmark_group("sweep_grid_104_points");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| run_sweep(&cfg).unwrap()));
    group.bench_function("serial", |b| b.iter(|| run_sweep_serial(&cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, sweep_benches);
criterion_main!(benches);
