use criterion::{criterion_group, criterion_main, Criterion};

use lielat::distributive::enumerate_distributive_up_to;
use lielat::families::{FamilySpec, SimpleKind};
use lielat::ideals::enumerate_ideals;
use lielat::lattice::FiniteLattice;
use lielat::matrix::Matrix;
use lielat::rat::rat;

fn bench_rref(c: &mut Criterion) {
    // a dense rational matrix with awkward denominators
    let n = 24;
    let rows: Vec<Vec<_>> = (0..n)
        .map(|i| (0..n).map(|j| rat((i * j + 1) as i64, (i + j + 1) as i64)).collect())
        .collect();
    let m = Matrix::from_rows(rows).unwrap();
    c.bench_function("rref 24x24 rational", |b| b.iter(|| std::hint::black_box(&m).rref()));
}

fn bench_enumerate_ideals(c: &mut Criterion) {
    let spec = FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2], vec![4]]);
    let alg = spec.build().unwrap();
    c.bench_function("enumerate_ideals sl2 on V(2)+V(4)", |b| {
        b.iter(|| enumerate_ideals(std::hint::black_box(&alg), 512).unwrap())
    });

    let c_spec = FamilySpec::c(vec![
        lielat::poly::Poly::from_i64(&[1, 0, 1]),
        lielat::poly::Poly::from_i64(&[-1, 1]),
    ]);
    let c_alg = c_spec.build().unwrap();
    c.bench_function("enumerate_ideals solvable C-type", |b| {
        b.iter(|| enumerate_ideals(std::hint::black_box(&c_alg), 512).unwrap())
    });
}

fn bench_distributive_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate distributive lattices to 8 nodes", |b| {
        b.iter(|| enumerate_distributive_up_to(std::hint::black_box(8)).unwrap())
    });
}

fn bench_lattice_classification(c: &mut Criterion) {
    let q5 = FiniteLattice::cube(5).unwrap();
    c.bench_function("distributivity of the 5-cube (32 nodes)", |b| {
        b.iter(|| std::hint::black_box(&q5).distributivity())
    });
}

criterion_group!(
    benches,
    bench_rref,
    bench_enumerate_ideals,
    bench_distributive_enumeration,
    bench_lattice_classification
);
criterion_main!(benches);
