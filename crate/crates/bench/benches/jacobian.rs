use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hecc_bench::{demo64, wide_curve};
use num_bigint::RandBigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group_ops(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let dp = demo64();
    let curves = [("p64", dp.curve().clone()), ("p127", wide_curve())];

    let mut g = c.benchmark_group("jac_add");
    for (name, curve) in &curves {
        let a = curve.random_divisor(&mut rng);
        let b = curve.random_divisor(&mut rng);
        g.bench_function(BenchmarkId::new("add", name), |bench| {
            bench.iter(|| curve.add(black_box(&a), black_box(&b)))
        });
        g.bench_function(BenchmarkId::new("double", name), |bench| {
            bench.iter(|| curve.double(black_box(&a)))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("scalar_mul");
    g.sample_size(20);
    for (name, curve) in &curves {
        let a = curve.random_divisor(&mut rng);
        let n = rng.gen_biguint(128);
        g.bench_function(BenchmarkId::new("128-bit", name), |bench| {
            bench.iter(|| curve.scalar_mul(black_box(&n), black_box(&a)))
        });
    }
    let n = rng.gen_biguint_below(dp.order());
    g.bench_function("fixed_base/p64", |bench| {
        bench.iter(|| dp.mul_base(black_box(&n)))
    });
    g.finish();
}

criterion_group!(benches, group_ops);
criterion_main!(benches);
