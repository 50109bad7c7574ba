use criterion::{black_box, criterion_group, criterion_main, Criterion};

use covosc::{
    build_generators, density_grid, normalization, squeeze_expansion, verify_algebra, GridSpec,
    QuadratureRule, Rapidity, TruncatedFockSpace,
};

fn bench_quadrature_construction(c: &mut Criterion) {
    c.bench_function("gauss_hermite_order_64", |b| {
        b.iter(|| QuadratureRule::gauss_hermite(black_box(64)).unwrap())
    });
    c.bench_function("gauss_hermite_order_256", |b| {
        b.iter(|| QuadratureRule::gauss_hermite(black_box(256)).unwrap())
    });
}

fn bench_normalization(c: &mut Criterion) {
    let quad = QuadratureRule::gauss_hermite(64).unwrap();
    let eta = Rapidity::new(2.0).unwrap();
    c.bench_function("normalization_eta2_order64", |b| {
        b.iter(|| normalization(black_box(eta), &quad).unwrap())
    });
}

fn bench_density_grid(c: &mut Criterion) {
    let eta = Rapidity::new(1.0).unwrap();
    let spec = GridSpec::square(8.0, 161);
    c.bench_function("density_grid_161", |b| {
        b.iter(|| density_grid(black_box(eta), &spec).unwrap())
    });
}

fn bench_expansion(c: &mut Criterion) {
    let quad = QuadratureRule::gauss_hermite(64).unwrap();
    let eta = Rapidity::new(1.0).unwrap();
    c.bench_function("squeeze_expansion_n16_order64", |b| {
        b.iter(|| squeeze_expansion(black_box(eta), 16, &quad).unwrap())
    });
}

fn bench_algebra(c: &mut Criterion) {
    let space = TruncatedFockSpace::new(8).unwrap();
    c.bench_function("build_generators_n8", |b| {
        b.iter(|| build_generators(black_box(&space)).unwrap())
    });
    let gens = build_generators(&space).unwrap();
    c.bench_function("verify_algebra_n8", |b| {
        b.iter(|| verify_algebra(black_box(&gens)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_quadrature_construction,
    bench_normalization,
    bench_density_grid,
    bench_expansion,
    bench_algebra
);
criterion_main!(benches);
