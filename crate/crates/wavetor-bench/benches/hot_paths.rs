//! Benchmarks of the hot paths: dealiased products, the layer operators of
//! the Dirichlet-Neumann expansion, the energy functionals, one RK4 step
//! and the dispersive kernel sweep.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use wavetor::dispersive::kprime_kernel;
use wavetor::dn::{self, DNConfig};
use wavetor::grid::{SpectralField, TorusGrid};
use wavetor::sim::{energies, initial_data, rk4_step, SimConfig};

fn fields(n: usize, band: i64) -> (SpectralField, SpectralField) {
    let grid = TorusGrid::new(1.5, n);
    let h = SpectralField::random_real(&grid, band, 1, 0.05);
    let f = SpectralField::random_real(&grid, band, 2, 1.0);
    (h, f)
}

fn bench_products(c: &mut Criterion) {
    let (h, f) = fields(128, 12);
    c.bench_function("product_128", |b| b.iter(|| black_box(&h).product(black_box(&f))));
    c.bench_function("bilinear_128", |b| {
        b.iter(|| SpectralField::bilinear(black_box(&h), black_box(&f), |x, y| x * y + x.abs()))
    });
}

fn bench_layer_operators(c: &mut Criterion) {
    let (h, f) = fields(256, 12);
    c.bench_function("r0_fast_256", |b| b.iter(|| dn::r0_fast(black_box(&h), black_box(&f))));
    c.bench_function("r1_fast_256", |b| b.iter(|| dn::r1_fast(black_box(&h), black_box(&f))));
    c.bench_function("r1_quadrature_256", |b| {
        b.iter(|| dn::rn_apply(black_box(&h), black_box(&f), 1))
    });
    let cfg = DNConfig::default();
    c.bench_function("dn_series_256", |b| {
        b.iter(|| dn::dn_series(black_box(&h), black_box(&f), &cfg).unwrap())
    });
}

fn bench_energies_and_stepping(c: &mut Criterion) {
    let cfg = SimConfig {
        modes: 128,
        ..SimConfig::default()
    };
    let state = initial_data(&cfg);
    c.bench_function("energies_128", |b| {
        b.iter(|| energies(black_box(&state), &cfg.dn).unwrap())
    });
    c.bench_function("rk4_step_128", |b| {
        b.iter(|| rk4_step(black_box(&state), 0.01, &cfg).unwrap())
    });
}

fn bench_dispersive(c: &mut Criterion) {
    c.bench_function("kprime_kernel_k4_r8", |b| {
        b.iter(|| kprime_kernel(4, black_box(3.0), 8.0).unwrap())
    });
}

fn configured() -> Criterion {
    Criterion::default()
        .sample_size(10)
        .measurement_time(std::time::Duration::from_millis(500))
        .warm_up_time(std::time::Duration::from_millis(200))
}

criterion_group! {
    name = benches;
    config = configured();
    targets = bench_products, bench_layer_operators, bench_energies_and_stepping, bench_dispersive
}
criterion_main!(benches);
