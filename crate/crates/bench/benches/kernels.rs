use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use ncforms::asd::{asd_basis, required_precision, verify_congruences};
use ncforms::frobchar::frobenius_record;
use ncforms::qmstruct::isogeny_sample_check;
use ncforms::qseries::{cuspform_basis, eta_quotient};
use ncforms::surface::trace_sum;
use ncforms::EtaQuotientSpec;

fn point_counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("trace_sum");
    g.sample_size(10);
    for (p, degree) in [(13, 1), (59, 1), (13, 2), (31, 2)] {
        g.bench_with_input(BenchmarkId::new(format!("deg{degree}"), p), &(p, degree), |b, &(p, d)| {
            b.iter(|| trace_sum(black_box(p), 2, d).unwrap())
        });
    }
    g.finish();
}

fn eta_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("eta");
    for n in [100, 600] {
        g.bench_with_input(BenchmarkId::new("h1_cube", n), &n, |b, &n| {
            b.iter(|| eta_quotient(&EtaQuotientSpec::h1_cube(), black_box(n)).unwrap())
        });
    }
    g.sample_size(10);
    g.bench_function("cuspform_basis/600", |b| b.iter(|| cuspform_basis(black_box(600)).unwrap()));
    g.finish();
}

fn asd(c: &mut Criterion) {
    let nmax = 600;
    let (h1, h2) = cuspform_basis(nmax).unwrap();
    let mut g = c.benchmark_group("asd");
    g.sample_size(10);
    for p in [5, 7, 11] {
        let rec = frobenius_record(p, 2).unwrap();
        let spec = asd_basis(&rec, required_precision(p, nmax), false).unwrap();
        g.bench_with_input(BenchmarkId::new("verify", p), &spec, |b, s| {
            b.iter(|| verify_congruences(s, &h1, &h2, nmax).unwrap())
        });
    }
    g.finish();
}

fn isogeny(c: &mut Criterion) {
    c.bench_function("isogeny/p=29/20 trials", |b| b.iter(|| isogeny_sample_check(29, 20, black_box(1)).unwrap()));
}

criterion_group!(benches, point_counts, eta_series, asd, isogeny);
criterion_main!(benches);
