use std::hint::black_box;

use bt_core::grid::Point;
use bt_core::registry::{verify, RunContext, Selection};
use bt_core::sequences::catalog;
use bt_core::transform::compose_transform;
use bt_core::{check_identity_on_grid, ExecMode, GridConfig, VarReq};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn modes() -> [ExecMode; 2] {
    [ExecMode::Sequential, ExecMode::Parallel]
}

/// One composition-law case on its full (x, q) grid.
fn grid_check(c: &mut Criterion) {
    let spec = catalog()[1].clone();
    let n = 8;
    let grid = GridConfig::default()
        .build(&[VarReq::new("x", n), VarReq::new("q", n)])
        .unwrap();
    let s2 = spec.clone();
    let lhs = move |p: &Point| Ok(compose_transform(&spec, n, &p["x"], &p["q"])?.lhs);
    let rhs = move |p: &Point| Ok(compose_transform(&s2, n, &p["x"], &p["q"])?.rhs);
    let mut g = c.benchmark_group("grid_check");
    for mode in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(mode.name()), &mode, |b, &m| {
            b.iter(|| black_box(check_identity_on_grid(&lhs, &rhs, &grid, m).unwrap()))
        });
    }
    g.finish();
}

/// A handful of registry entries end to end.
fn registry_subset(c: &mut Criterion) {
    let sel = Selection::Ids(
        ["BT.a", "C.e", "P1.c", "P2.d1bis", "AP.k1"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    let mut g = c.benchmark_group("verify_subset");
    g.sample_size(10);
    for mode in modes() {
        let ctx = RunContext {
            mode,
            ..RunContext::default()
        };
        g.bench_with_input(BenchmarkId::from_parameter(mode.name()), &ctx, |b, ctx| {
            b.iter(|| black_box(verify(ctx, &sel).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, grid_check, registry_subset);
criterion_main!(benches);
