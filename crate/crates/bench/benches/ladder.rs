use criterion::{criterion_group, criterion_main};

criterion_group!(benches, legendre_ladder_bench::benchmarks);
criterion_main!(benches);
