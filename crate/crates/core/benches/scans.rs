//! Parallel versus sequential timings for the batch scans. Without the
//! `parallel` feature both variants run on one thread.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qlogic::cstar::basis_algebra;
use qlogic::exec;
use qlogic::groupoid::{
    brute_force_subgroupoids, enumerate_copyables, enumerate_subgroupoids, fixtures, EnumLimits,
};
use qlogic::projorder::{
    build_poset, commute_glb_equivalence, inclusion_poset, lattice_report, zero_one_family,
};
use qlogic::Tolerance;

fn both<T>(c: &mut Criterion, group: &str, input: &str, f: impl Fn() -> T) {
    let mut g = c.benchmark_group(group);
    g.bench_function(BenchmarkId::new("parallel", input), |b| {
        b.iter(|| black_box(f()))
    });
    g.bench_function(BenchmarkId::new("sequential", input), |b| {
        b.iter(|| exec::sequential(|| black_box(f())))
    });
    g.finish();
}

fn scans(c: &mut Criterion) {
    let tol = Tolerance::default();

    let d4 = fixtures::dihedral(4);
    both(c, "brute_force_subgroupoids", "dihedral4", || {
        brute_force_subgroupoids(&d4).unwrap()
    });

    let q8z2 = fixtures::quaternion8().product(&fixtures::cyclic(2));
    let subs = enumerate_subgroupoids(&q8z2, EnumLimits::default()).unwrap();
    let poset = inclusion_poset(&q8z2, &subs);
    both(c, "lattice_report", "q8xz2", || lattice_report(&poset));

    let alg = basis_algebra(4).unwrap();
    let family = zero_one_family(&alg, tol).unwrap();
    both(c, "build_poset", "basis4", || {
        build_poset(&alg, family.clone(), tol).unwrap()
    });
    let pp = build_poset(&alg, family.clone(), tol).unwrap();
    both(c, "commute_glb", "basis4", || {
        commute_glb_equivalence(&alg, &pp, tol).unwrap()
    });

    let inter = fixtures::interval()
        .product(&fixtures::klein4())
        .to_algebra();
    both(c, "enumerate_copyables", "interval_x_klein4", || {
        enumerate_copyables(&inter, EnumLimits::default()).unwrap()
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = scans
}
criterion_main!(benches);
