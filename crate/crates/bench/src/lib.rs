use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use legendre_ladder::electrostatics::{
    direct_coulomb, loop_reference, ChargeSystem, CurrentLoop, Expansion, FieldPoint, PointCharge,
    Units, DEFAULT_QUAD_POINTS,
};
use legendre_ladder::{build, node_count, rodrigues_alf};

pub fn benchmarks(c: &mut Criterion) {
    construction(c);
    potentials(c);
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for ell in [5u32, 10, 20, 30] {
        group.bench_with_input(BenchmarkId::new("ladder", ell), &ell, |b, &ell| {
            b.iter(|| build(black_box(ell), i64::from(ell)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rodrigues", ell), &ell, |b, &ell| {
            b.iter(|| rodrigues_alf(black_box(ell), 0).unwrap())
        });
    }
    let f = build(20, 20).unwrap();
    group.bench_function("node_count/20", |b| b.iter(|| node_count(black_box(&f))));
    group.finish();
}

fn potentials(c: &mut Criterion) {
    let mut group = c.benchmark_group("potentials");
    let sys = ChargeSystem::new(
        (0..5)
            .map(|i| {
                let t = f64::from(i);
                PointCharge::new(1.0 + 0.1 * t, [0.1 * t.cos(), 0.1 * t.sin(), 0.05 * t - 0.1])
                    .unwrap()
            })
            .collect(),
    )
    .unwrap();
    let p = FieldPoint::new(1.0, 0.8, 0.3).unwrap();
    let expansion = Expansion::new(40, Units::Si).unwrap();
    group.bench_function("multipole_scalar/20", |b| {
        b.iter(|| expansion.scalar(black_box(&sys), &p, 20).unwrap())
    });
    group.bench_function("direct_coulomb", |b| {
        b.iter(|| direct_coulomb(black_box(&sys), &p, Units::Si).unwrap())
    });
    let lp = CurrentLoop::new(0.1, 2.0).unwrap();
    group.bench_function("multipole_vector_loop/25", |b| {
        b.iter(|| expansion.vector_loop(black_box(&lp), &p, 25, DEFAULT_QUAD_POINTS).unwrap())
    });
    group.bench_function("loop_reference", |b| {
        b.iter(|| loop_reference(black_box(&lp), &p, DEFAULT_QUAD_POINTS, Units::Si).unwrap())
    });
    group.bench_function("expansion_table/40", |b| {
        b.iter(|| Expansion::new(black_box(40), Units::Si).unwrap())
    });
    group.finish();
}
