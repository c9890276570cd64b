use criterion::{criterion_group, criterion_main, Criterion};

use perfcode::{hamming_code, mollard, sts_of_code};

fn pasch_census(c: &mut Criterion) {
    let sts15 = sts_of_code(&hamming_code(4).unwrap()).unwrap();
    c.bench_function("pasch_total_sts15", |b| b.iter(|| sts15.pasch_total()));
}

fn mollard_rank(c: &mut Criterion) {
    let h7 = hamming_code(3).unwrap();
    let rep = hamming_code(2).unwrap();
    let mc = mollard(&h7, &rep).unwrap();
    c.bench_function("mollard_rank_n31", |b| b.iter(|| mc.rank()));
}

fn fano_automorphisms(c: &mut Criterion) {
    let fano = sts_of_code(&hamming_code(3).unwrap()).unwrap();
    c.bench_function("fano_automorphisms", |b| {
        b.iter(|| fano.automorphism_elements(None, 1 << 24).unwrap().len())
    });
}

criterion_group!(benches, pasch_census, mollard_rank, fano_automorphisms);
criterion_main!(benches);
