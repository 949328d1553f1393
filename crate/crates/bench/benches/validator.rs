use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gcdmorph::{certify, check_c1, check_gcd_morphic};
use gcdmorph_bench::{fibonacci, generated_code, generated_sequence};
use std::hint::black_box;

fn validator(c: &mut Criterion) {
    let mut group = c.benchmark_group("validator");
    group.sample_size(20);
    for len in [128, 512] {
        let code = generated_code(len);
        group.bench_with_input(BenchmarkId::new("check_c1", len), &code, |b, c| b.iter(|| check_c1(black_box(c))));
        let seq = generated_sequence(len);
        group.bench_with_input(BenchmarkId::new("check_gcd_morphic/generated", len), &seq, |b, f| {
            b.iter(|| check_gcd_morphic(black_box(f)))
        });
        let fib = fibonacci(len);
        group.bench_with_input(BenchmarkId::new("certify/fibonacci", len), &fib, |b, f| {
            b.iter(|| certify(black_box(f)))
        });
    }
    group.finish();
}

criterion_group!(benches, validator);
criterion_main!(benches);
