use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use periodic_colouring::families;
use periodic_colouring::oriented::CircularStructure;
use periodic_colouring::periodic;
use periodic_colouring::survey::{self, CorpusSpec, RandomCorpus};
use periodic_colouring::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn path_relation(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_relation");
    let graphs = [
        ("mickey:3 t=9", families::mickey_mouse(3).unwrap(), 9),
        (
            "random:16,30 t=8",
            families::random_connected(16, 30, 7).unwrap(),
            8,
        ),
        ("petal:4x5 t=5", families::petal(4, 5).unwrap(), 5),
    ];
    for (label, g, t) in &graphs {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, label), g, |b, g| {
                b.iter(|| periodic::path_relation_with(black_box(g), *t, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn feasible_k_set(c: &mut Criterion) {
    let mut group = c.benchmark_group("feasible_k_set");
    let graphs = [
        ("path:200", families::path(200).unwrap()),
        ("cycle:300", families::cycle(300).unwrap()),
        ("petal:6x12", families::petal(6, 12).unwrap()),
    ];
    for (label, g) in &graphs {
        let cs = CircularStructure::new(g);
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, label), &cs, |b, cs| {
                b.iter(|| black_box(cs).feasible_k_set(exec))
            });
        }
    }
    group.finish();
}

fn survey_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey");
    group.sample_size(10);
    let corpus = CorpusSpec {
        families: vec![],
        random: Some(RandomCorpus {
            count: 64,
            min_n: 4,
            max_n: 10,
            max_m: Some(20),
            seed: 1,
        }),
    };
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new(mode, "64 random, n <= 10"), |b| {
            b.iter(|| survey::survey(black_box(&corpus), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, path_relation, feasible_k_set, survey_sweep);
criterion_main!(benches);
