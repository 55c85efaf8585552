use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linksig_bench::grown;
use linksig_core::{alexander_poly, check_theorem, fixtures, signature_at, signature_profile};
use linksig_core::{GaussianRational, Rational};
use std::hint::black_box;

fn point() -> GaussianRational {
    GaussianRational::new(
        "4/5".parse::<Rational>().unwrap(),
        "3/5".parse::<Rational>().unwrap(),
    )
}

fn fixtures_bench(c: &mut Criterion) {
    let z = point();
    for f in fixtures::all() {
        c.bench_function(&format!("alexander/{}", f.name), |b| {
            b.iter(|| alexander_poly(black_box(&f.seifert)))
        });
        c.bench_function(&format!("signature/{}", f.name), |b| {
            b.iter(|| signature_at(black_box(&f.seifert), &z).unwrap())
        });
        c.bench_function(&format!("profile/{}", f.name), |b| {
            b.iter(|| signature_profile(black_box(&f.seifert)))
        });
        c.bench_function(&format!("check/{}", f.name), |b| {
            b.iter(|| check_theorem(black_box(&f.seifert), f.linking.as_ref()).unwrap())
        });
    }
}

fn scaling(c: &mut Criterion) {
    let base = fixtures::l7a2().seifert;
    let mut group = c.benchmark_group("grown_l7a2");
    group.sample_size(10);
    for steps in [0usize, 2, 4, 8] {
        let s = grown(&base, steps);
        group.bench_with_input(BenchmarkId::new("alexander", s.dim()), &s, |b, s| {
            b.iter(|| alexander_poly(s))
        });
        group.bench_with_input(BenchmarkId::new("profile", s.dim()), &s, |b, s| {
            b.iter(|| signature_profile(s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fixtures_bench, scaling);
criterion_main!(benches);
