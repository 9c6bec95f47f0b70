use criterion::{black_box, criterion_group, criterion_main, Criterion};

use vactab::counting::{all_sequences, verify_identity};
use vactab::di_map::{di_forward, limiting_vt};
use vactab::vacillating::enumerate_counts;

fn bench_di_sweep(c: &mut Criterion) {
    let sequences = all_sequences(7, 3);
    c.bench_function("di_forward sweep [7]^3", |b| {
        b.iter(|| {
            for seq in &sequences {
                black_box(di_forward(seq, 7).unwrap());
            }
        })
    });
}

fn bench_limiting_vt(c: &mut Criterion) {
    let sequences = all_sequences(6, 4);
    c.bench_function("limiting_vt [6]^4", |b| {
        b.iter(|| {
            for seq in &sequences {
                black_box(limiting_vt(seq));
            }
        })
    });
}

fn bench_enumerate_counts(c: &mut Criterion) {
    c.bench_function("enumerate_counts limiting k=10", |b| {
        b.iter(|| black_box(enumerate_counts(10, true, 10).unwrap()))
    });
}

fn bench_verify_identity(c: &mut Criterion) {
    c.bench_function("verify_identity n=6 k=3 sweep", |b| {
        b.iter(|| black_box(verify_identity(6, 3, true).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_di_sweep,
    bench_limiting_vt,
    bench_enumerate_counts,
    bench_verify_identity
);
criterion_main!(benches);
