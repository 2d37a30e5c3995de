//! Benchmarks for the hot paths: the scaled kernel in both regimes, the
//! extended-Beta quadrature, the Whittaker routes and a transform pair.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use extwhit::extended::{self, ExtParams, Route};
use extwhit::transforms::{self, MellinQuery, TransformControls};
use extwhit::whittaker::{self, WhittakerArgs, WhittakerRoute};
use extwhit::{bessel, Accuracy, ComplexScalar};

fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

const ACC: Accuracy = Accuracy { rel_tol: 1e-12, max_level: 12 };

fn bench_kernel(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("kernel");
    g.bench_function("k_scaled series x=1.3", |b| {
        b.iter(|| bessel::k_scaled_general(black_box(0.8), black_box(1.3)).unwrap())
    });
    g.bench_function("k_scaled cf x=25", |b| {
        b.iter(|| bessel::k_scaled_general(black_box(3.3), black_box(25.0)).unwrap())
    });
    g.bench_function("k_half_integer n=3", |b| {
        b.iter(|| bessel::k_half_integer_sum(black_box(3), black_box(2.0)).unwrap())
    });
    g.finish();
}

fn bench_extended(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("extended");
    let params = ExtParams::real(1.0, 0.5).unwrap();
    g.bench_function("ext_beta_pnu", |b| {
        b.iter(|| extended::ext_beta_pnu(black_box(c(1.5)), c(2.5), &params, ACC).unwrap())
    });
    g.bench_function("ext_chf_pnu integral", |b| {
        b.iter(|| {
            extended::ext_chf_pnu(black_box(c(1.5)), c(3.2), c(2.0), &params, Route::Integral, ACC)
                .unwrap()
        })
    });
    g.finish();
}

fn bench_whittaker(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("whittaker");
    let args = WhittakerArgs::real(0.5, 1.0, 2.0).unwrap();
    let params = ExtParams::real(1.0, 0.5).unwrap();
    for (label, route) in [
        ("definition", WhittakerRoute::Definition),
        ("semi_infinite", WhittakerRoute::IntegralSemiInfinite),
        ("symmetric", WhittakerRoute::IntegralSymmetric),
    ] {
        g.bench_function(label, |b| {
            b.iter(|| whittaker::whittaker_ext(&args, &params, route, ACC).unwrap())
        });
    }
    g.bench_function("large-argument scaled", |b| {
        let big = WhittakerArgs::real(0.0, 1.0, 6400.0).unwrap();
        let p0 = ExtParams::real(1.0, 0.0).unwrap();
        b.iter(|| {
            whittaker::whittaker_ext_scaled(&big, &p0, WhittakerRoute::Definition, ACC).unwrap()
        })
    });
    g.finish();
}

fn bench_transforms(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("transforms");
    g.sample_size(10);
    let args = WhittakerArgs::real(0.0, 1.0, 1.0).unwrap();
    let q = MellinQuery::new(c(2.0), args, 0.0).unwrap();
    let ctl = TransformControls::default();
    g.bench_function("mellin pair", |b| {
        b.iter(|| transforms::mellin_residual(black_box(&q), &ctl).unwrap())
    });
    g.finish();
}

criterion_group!(benches, bench_kernel, bench_extended, bench_whittaker, bench_transforms);
criterion_main!(benches);
