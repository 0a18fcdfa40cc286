use std::hint::black_box;

use cardcodes_core::{
    builtin_fixture, check_min_informative, check_safe, find_coloring, tabulate, Constraints, Informativeness,
    Protocol, Safety, Signature, WitnessMode,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn tabulation(c: &mut Criterion) {
    let sig = Signature::new(5, 5, 1, 0).unwrap();
    c.bench_function("tabulate modn 5,5,1,0", |b| b.iter(|| tabulate(&Protocol::ModN, black_box(&sig)).unwrap()));
    c.bench_function("tabulate parity 5,5,1,0", |b| b.iter(|| tabulate(&Protocol::Parity, black_box(&sig)).unwrap()));
}

fn verification(c: &mut Criterion) {
    let sig = Signature::new(5, 5, 1, 0).unwrap();
    let col = tabulate(&Protocol::ModN, &sig).unwrap();
    c.bench_function("check_safe modn 5,5,1,0", |b| {
        b.iter(|| check_safe(black_box(&col), &sig, WitnessMode::First).unwrap())
    });
    let (two, s) = builtin_fixture("two_msg_331").unwrap();
    c.bench_function("check_min_informative two_msg_331", |b| {
        b.iter(|| check_min_informative(black_box(&two), &s, WitnessMode::First).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let sig = Signature::new(3, 3, 1, 0).unwrap();
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let proper = Constraints::new(Informativeness::Proper, Safety::None, 5);
    group.bench_function("J(7,3) k=5 unsat", |b| b.iter(|| find_coloring(&sig, black_box(&proper)).unwrap()));
    let two = Constraints::new(Informativeness::MinInformative, Safety::Safe, 2);
    group.bench_function("3,3,1,0 two messages", |b| b.iter(|| find_coloring(&sig, black_box(&two)).unwrap()));
    group.finish();
}

criterion_group!(benches, tabulation, verification, search);
criterion_main!(benches);
