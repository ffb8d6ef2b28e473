use criterion::{criterion_group, criterion_main, Criterion};
use klbasis_core::cob::discover_conventions;
use klbasis_core::heckemod::{kl_basis, KLSide, ParabolicContext};
use klbasis_core::shapes::{all_partitions, Composition};
use klbasis_core::specht::c_matrix;
use klbasis_core::weyl::{Family, GroupTable};

fn bench_group_table(c: &mut Criterion) {
    c.bench_function("group_table B d=4", |b| {
        b.iter(|| GroupTable::build(Family::B, 4, 10_000).unwrap())
    });
}

fn bench_kl_basis(c: &mut Criterion) {
    let ctx = ParabolicContext::new(Family::B, 3, &[]).unwrap();
    c.bench_function("kl_basis+p B d=3 J={}", |b| {
        b.iter(|| kl_basis(&ctx, KLSide::Negative).with_p())
    });
}

fn bench_c_matrix(c: &mut Criterion) {
    let shape = Composition::new(Family::B, vec![2, 3, 2]).unwrap();
    c.bench_function("c_matrix B (2,3,2)", |b| b.iter(|| c_matrix(&shape).unwrap()));
}

fn bench_discovery(c: &mut Criterion) {
    let mut shapes = Vec::new();
    for d in 1..=3 {
        shapes.extend(all_partitions(Family::A, d));
    }
    c.bench_function("discover_conventions A d<=3", |b| {
        b.iter(|| discover_conventions(&shapes).unwrap())
    });
}

criterion_group!(
    benches,
    bench_group_table,
    bench_kl_basis,
    bench_c_matrix,
    bench_discovery
);
criterion_main!(benches);
