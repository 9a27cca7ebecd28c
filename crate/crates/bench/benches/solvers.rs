use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superdom::invariants::{domination_number, independence_number, maximum_matching};
use superdom::superdom::{gamma_sp_bnb, gamma_sp_bruteforce};
use superdom::SolverConfig;
use superdom_bench::fixtures;

fn gamma_sp(c: &mut Criterion) {
    let config = SolverConfig::default();
    let mut group = c.benchmark_group("gamma_sp_bnb");
    for (name, g) in fixtures() {
        group.bench_function(name, |b| b.iter(|| gamma_sp_bnb(black_box(&g), &config).unwrap()));
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let config = SolverConfig::default();
    let mut group = c.benchmark_group("gamma_sp_bruteforce");
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.order() <= 16) {
        group.bench_function(name, |b| b.iter(|| gamma_sp_bruteforce(black_box(&g), &config).unwrap()));
    }
    group.finish();
}

fn companions(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    for (name, g) in fixtures() {
        group.bench_function(format!("domination/{name}"), |b| {
            b.iter(|| domination_number(black_box(&g)).unwrap())
        });
        group.bench_function(format!("independence/{name}"), |b| {
            b.iter(|| independence_number(black_box(&g)).unwrap())
        });
        group.bench_function(format!("matching/{name}"), |b| b.iter(|| maximum_matching(black_box(&g))));
    }
    group.finish();
}

criterion_group!(benches, gamma_sp, oracle, companions);
criterion_main!(benches);
