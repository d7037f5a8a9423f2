use std::hint::black_box;
use std::sync::Arc;

use binomideal_core::{
    buchberger, classify_lattice, monoid_closure, vanishing_ideal, Ambient, Method, PointSet, PolyRing,
    Polynomial, PrimeField, TermOrder, DEFAULT_ENUM_LIMIT,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn points(p: u64, s: usize, raw: &[Vec<i64>]) -> PointSet {
    let field = Arc::new(PrimeField::new(p).unwrap());
    PointSet::from_integers(field, s, Ambient::Projective, raw).unwrap()
}

// every other point of P^{s-1}(GF(p)), a set with no structure to exploit
fn scattered(p: u64, s: usize) -> PointSet {
    let field = Arc::new(PrimeField::new(p).unwrap());
    let all = PointSet::full_space(field, s, Ambient::Projective, DEFAULT_ENUM_LIMIT).unwrap();
    all.subset((0..all.len()).step_by(2))
}

fn bench_buchberger(c: &mut Criterion) {
    let field = Arc::new(PrimeField::new(32003).unwrap());
    let ring = PolyRing::new(field, 4, TermOrder::DegRevLex);
    // cyclic-4
    let gens: Vec<Polynomial> = [
        "t1 + t2 + t3 + t4",
        "t1*t2 + t2*t3 + t3*t4 + t4*t1",
        "t1*t2*t3 + t2*t3*t4 + t3*t4*t1 + t4*t1*t2",
        "t1*t2*t3*t4 - 1",
    ]
    .iter()
    .map(|s| Polynomial::parse(&ring, s).unwrap())
    .collect();
    c.bench_function("buchberger/cyclic4", |b| b.iter(|| buchberger(black_box(&gens))));
}

fn bench_vanishing(c: &mut Criterion) {
    let mut group = c.benchmark_group("vanishing_ideal");
    for (p, s) in [(5, 3), (7, 3), (3, 4)] {
        let y = scattered(p, s);
        let label = format!("p{p}_s{s}_n{}", y.len());
        for (name, method) in [
            ("bm", Method::BuchbergerMoller),
            ("intersection", Method::Intersection),
        ] {
            group.bench_with_input(BenchmarkId::new(name, &label), &y, |b, y| {
                b.iter(|| vanishing_ideal(black_box(y), TermOrder::DegRevLex, method).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let gens = points(7, 3, &[vec![1, 3, 2], vec![1, 6, 6]]);
    let subgroup = monoid_closure(&gens, DEFAULT_ENUM_LIMIT).unwrap().points;
    let generic = scattered(5, 3);
    let mut group = c.benchmark_group("classify_lattice");
    group.bench_function("torus_subgroup_p7", |b| {
        b.iter(|| classify_lattice(black_box(&subgroup)).unwrap())
    });
    group.bench_function("scattered_p5", |b| {
        b.iter(|| classify_lattice(black_box(&generic)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_buchberger, bench_vanishing, bench_classify);
criterion_main!(benches);
