use criterion::{black_box, criterion_group, criterion_main, Criterion};
use enumerlab_core::pairing::{row_label, zigzag_decode, zigzag_encode};
use enumerlab_core::{GridPair, ZigzagIndex};
use num_bigint::BigUint;

fn zigzag(c: &mut Criterion) {
    c.bench_function("roundtrip 10k small indices", |b| {
        b.iter(|| {
            for i in 0..10_000u64 {
                let p = zigzag_decode(&ZigzagIndex::from(black_box(i)));
                black_box(zigzag_encode(&p));
            }
        })
    });
    let big = GridPair::new(BigUint::from(3u32).pow(90), BigUint::from(7u32).pow(60));
    c.bench_function("roundtrip one 150-bit pair", |b| {
        b.iter(|| zigzag_decode(&zigzag_encode(black_box(&big))))
    });
    c.bench_function("row labels 0..10k", |b| {
        b.iter(|| (0..10_000u64).for_each(|i| drop(black_box(row_label(black_box(i))))))
    });
}

criterion_group!(benches, zigzag);
criterion_main!(benches);
