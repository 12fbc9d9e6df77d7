use blockforest::oracle::{count_labeled_by_distribution, Census, OracleConfig};
use blockforest::virial::{block_multiplicativity_check, verify_density_fixed_point, Alpha};
use blockforest::Species;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn sweeps(c: &mut Criterion) {
    let cfg = OracleConfig::default();
    let mut g = c.benchmark_group("labelled sweep");
    g.sample_size(10);
    for n in [5, 6] {
        g.bench_with_input(BenchmarkId::new("husimi", n), &n, |b, &n| {
            b.iter(|| count_labeled_by_distribution(Species::Husimi, n, &cfg).unwrap())
        });
    }
    g.finish();
}

fn census(c: &mut Criterion) {
    let cfg = OracleConfig::default();
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("husimi n=6", |b| b.iter(|| Census::compute(Species::Husimi, 6, &cfg).unwrap()));
    g.bench_function("oriented n=5", |b| b.iter(|| Census::compute(Species::Oriented, 5, &cfg).unwrap()));
    g.finish();
}

fn virial(c: &mut Criterion) {
    let cfg = OracleConfig::default();
    let mut g = c.benchmark_group("virial");
    g.sample_size(10);
    g.bench_function("dual route n=4", |b| b.iter(|| verify_density_fixed_point(4, &Alpha::default(), 30, &cfg).unwrap()));
    g.bench_function("multiplicativity n=5", |b| b.iter(|| block_multiplicativity_check(5, &cfg).unwrap()));
    g.finish();
}

criterion_group!(benches, sweeps, census, virial);
criterion_main!(benches);
