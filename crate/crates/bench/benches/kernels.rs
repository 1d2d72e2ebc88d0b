use criterion::{criterion_group, criterion_main, Criterion};
use fusioncat::lie::{Family, LieData};
use fusioncat::linalg::eigen_symmetric;
use fusioncat::moddim::{closed_global_dim, FusionCategory};
use fusioncat::qnum::QContext;
use fusioncat::quiver::{essential_table, weyl_denominator_quiver, weyl_denominator_roots};
use rug::Float;

const PREC: u32 = 128;

fn denominator_routes(c: &mut Criterion) {
    let data = LieData::new(Family::E8, 8).unwrap();
    let ctx = QContext::for_level(Family::E8, 8, 2, PREC);
    let mut group = c.benchmark_group("denominator_e8");
    group.bench_function("roots", |b| b.iter(|| weyl_denominator_roots(&data, &ctx)));
    group.bench_function("quiver", |b| b.iter(|| weyl_denominator_quiver(&data, &ctx)));
    group.finish();
}

fn table_construction(c: &mut Criterion) {
    let data = LieData::new(Family::E8, 8).unwrap();
    let rho = data.rho();
    c.bench_function("essential_table_e8_full", |b| {
        b.iter(|| essential_table(&data, &rho, false).unwrap())
    });
}

fn global_dimension(c: &mut Criterion) {
    let cat = FusionCategory::new(Family::A, 2, 8, PREC).unwrap();
    let mut group = c.benchmark_group("global_dim_a2_level8");
    group.bench_function("brute", |b| {
        b.iter(|| cat.brute_force_global_dim(1_000_000).unwrap())
    });
    group.bench_function("closed", |b| {
        b.iter(|| closed_global_dim(Family::A, 2, 8, PREC).unwrap())
    });
    group.finish();
}

fn adjacency_spectrum(c: &mut Criterion) {
    let data = LieData::new(Family::E8, 8).unwrap();
    let matrix: Vec<Vec<Float>> = data
        .adjacency
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| Float::with_val(PREC, v))
                .collect()
        })
        .collect();
    c.bench_function("eigen_e8_adjacency", |b| {
        b.iter(|| eigen_symmetric(&matrix, PREC))
    });
}

criterion_group!(
    kernels,
    denominator_routes,
    table_construction,
    global_dimension,
    adjacency_spectrum
);
criterion_main!(kernels);
