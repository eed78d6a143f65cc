use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ddrs_bench::numeral_pair;
use ddrs_core::catalog::get_system;
use ddrs_core::verify::{bfs_normal_forms, deterministic_path, enumerate_ground_terms};
use ddrs_core::weights::DEFAULT_BIT_CAP;
use ddrs_core::{find_redexes, normal_form, parse_term, term_weight, Limits, Signature, Strategy};

fn normalization(c: &mut Criterion) {
    let mut g = c.benchmark_group("normalize");
    for (id, a, b) in [("d2", 25, 25), ("n1", 12, 12), ("z3", -12, 12), ("z2p", 9, -9)] {
        let (sys, t) = numeral_pair(id, a, b, true);
        for s in Strategy::ALL {
            g.bench_with_input(BenchmarkId::new(format!("{id}/{s}"), format!("{a}*{b}")), &t, |bench, t| {
                bench.iter(|| normal_form(sys, black_box(t), s, Limits::default()).unwrap())
            });
        }
    }
    g.finish();
}

fn determinism(c: &mut Criterion) {
    let (sys, t) = numeral_pair("d2", 25, 25, false);
    c.bench_function("deterministic_path/d2 25+25", |b| {
        b.iter(|| deterministic_path(sys, black_box(&t), 10_000))
    });
}

fn search(c: &mut Criterion) {
    let d1 = get_system("d1").unwrap();
    let t = parse_term("(1+1)*((1+1)+(-1))", d1.signature()).unwrap();
    c.bench_function("bfs_normal_forms/d1 distributive", |b| {
        b.iter(|| bfs_normal_forms(d1, black_box(&t), 1_000_000))
    });
}

fn matching(c: &mut Criterion) {
    let d0 = get_system("d0").unwrap();
    let terms: Vec<_> = enumerate_ground_terms(d0.signature(), 6).collect();
    c.bench_function("find_redexes/d0 size<=6", |b| {
        b.iter(|| terms.iter().map(|t| find_redexes(d0, t).len()).sum::<usize>())
    });
}

fn weights(c: &mut Criterion) {
    let z1 = get_system("z1").unwrap();
    let t = parse_term("(011*0111)*(01*011)", &Signature::UNARY).unwrap();
    c.bench_function("term_weight/z1 nested products", |b| {
        b.iter(|| term_weight(black_box(&t), z1.scheme(), DEFAULT_BIT_CAP).unwrap())
    });
}

criterion_group!(benches, normalization, determinism, search, matching, weights);
criterion_main!(benches);
