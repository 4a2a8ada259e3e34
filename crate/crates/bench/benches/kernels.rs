use criterion::{black_box, criterion_group, criterion_main, Criterion};

use quotcoh_core::curve::{BundleClass, CohPolicy, CurveModel};
use quotcoh_core::formulas::{consistency_sweep, SweepRanges};
use quotcoh_core::geometry::poincare_flag;
use quotcoh_core::graded::GradedDim;
use quotcoh_core::oracle::{equivalence_sweep, GradedBasis};

fn graded_powers(c: &mut Criterion) {
    let mixed = GradedDim::from_pairs([(-1, 3), (0, 4), (1, 3), (2, 2)]);
    c.bench_function("sym_power/dim12_k12", |b| {
        b.iter(|| black_box(&mixed).sym_power(12))
    });
    c.bench_function("ext_power/dim12_k12", |b| {
        b.iter(|| black_box(&mixed).ext_power(12))
    });

    let left = GradedDim::from_pairs((-6i64..=6).map(|d| (d, d.unsigned_abs() + 1)));
    let right = left.dual();
    c.bench_function("tensor/13x13", |b| {
        b.iter(|| black_box(&left).tensor(black_box(&right)))
    });
}

fn oracle_enumeration(c: &mut Criterion) {
    let basis = GradedBasis::new((0..10).map(|i| (format!("e{i}"), i64::from(i % 4) - 1)))
        .expect("distinct labels");
    c.bench_function("oracle/enumerate_sym_10_8", |b| {
        b.iter(|| basis.enumerate_sym(8).expect("within bounds"))
    });
    c.bench_function("oracle/equivalence_sweep_dim4_k4", |b| {
        b.iter(|| equivalence_sweep(4, -2, 2, 4).expect("within bounds"))
    });
}

fn geometry_and_sweeps(c: &mut Criterion) {
    let curve = CurveModel::new(2);
    let e = BundleClass::new("E", 3, 0).expect("rank >= 1");
    c.bench_function("geometry/poincare_flag_g2_r3_d6", |b| {
        b.iter(|| poincare_flag(curve, &e, 6))
    });

    let ranges = SweepRanges {
        genera: vec![0, 1],
        e_ranks: vec![2],
        e_degrees: vec![0],
        max_d: 2,
        degree_lo: -1,
        degree_hi: 2,
        policy: CohPolicy::Generic,
    };
    c.bench_function("formulas/consistency_sweep_small", |b| {
        b.iter(|| consistency_sweep(&ranges))
    });
}

criterion_group!(
    benches,
    graded_powers,
    oracle_enumeration,
    geometry_and_sweeps
);
criterion_main!(benches);
