use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use planar_euler::audit::audit_many;
use planar_euler::enumerate::enumerate_small_with;
use planar_euler::generators::fuzz_many;
use planar_euler::{Execution, FuzzConfig, FuzzFamily};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn configs(per_family: u64) -> Vec<FuzzConfig> {
    FuzzFamily::ALL
        .iter()
        .flat_map(|&f| (0..per_family).map(move |s| FuzzConfig::new(f, s, (s % 51) as usize)))
        .collect()
}

fn fuzz_batch(c: &mut Criterion) {
    let configs = configs(50);
    let mut group = c.benchmark_group("fuzz_many");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| fuzz_many(&configs, exec).unwrap())
        });
    }
    group.finish();
}

fn audit_batch(c: &mut Criterion) {
    let graphs = fuzz_many(&configs(50), Execution::Sequential).unwrap();
    let mut group = c.benchmark_group("audit_many");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| audit_many(&graphs, exec))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_small_7");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let e = enumerate_small_with(7, None, exec).unwrap();
                e.collect_plane_graphs(exec).len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, fuzz_batch, audit_batch, enumeration);
criterion_main!(benches);
