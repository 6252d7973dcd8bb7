use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hwglue::derived::{complex_of_module, graded_hom};
use hwglue::exceptional::{left_dual_sequence, ExceptionalSequence};
use hwglue::homology::minimal_resolution;
use hwglue::hweight::{heart_presentation, verify_hw_axioms};
use hwglue::modrep::{decompose, direct_sum};
use hwglue_bench::{a3_simples, kalck_sigma, linear_simples, pair};

fn homs(c: &mut Criterion) {
    let (_, xs) = kalck_sigma();
    c.bench_function("graded_hom S3 P2 on Kalck", |b| b.iter(|| graded_hom(black_box(&xs[0]), black_box(&xs[1])).unwrap()));
    c.bench_function("left dual of sigma", |b| b.iter(|| pair(black_box(xs.clone()))));
}

fn resolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolve top simple of linear quiver");
    for n in [4usize, 8, 12] {
        let s = linear_simples(n).remove(0);
        g.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| b.iter(|| minimal_resolution(s, 2 * n).unwrap()));
    }
    g.finish();
}

fn duals(c: &mut Criterion) {
    let mut g = c.benchmark_group("left dual of linear simples");
    for n in [3usize, 5, 7] {
        let ss = linear_simples(n);
        let xs: Vec<_> = ss.iter().map(|m| complex_of_module(m).unwrap()).collect();
        g.bench_with_input(BenchmarkId::from_parameter(n), &xs, |b, xs| {
            b.iter(|| left_dual_sequence(&ExceptionalSequence::new(xs.clone()).unwrap()).unwrap())
        });
    }
    g.finish();
}

fn hearts(c: &mut Criterion) {
    let ss = a3_simples();
    let p = left_dual_sequence(&ExceptionalSequence::from_modules(&ss).unwrap()).unwrap();
    c.bench_function("heart of A3 simples with axioms", |b| {
        b.iter(|| {
            let mut r = heart_presentation(black_box(&p)).unwrap();
            verify_hw_axioms(&mut r).unwrap()
        })
    });
    let a = ss[0].algebra().clone();
    let sum = direct_sum(&a, &ss).unwrap().module;
    c.bench_function("decompose semisimple A3 module", |b| b.iter(|| decompose(black_box(&sum)).unwrap()));
}

criterion_group!(benches, homs, resolutions, duals, hearts);
criterion_main!(benches);
