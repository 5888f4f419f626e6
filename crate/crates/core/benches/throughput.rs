use artin_core::batch::{certify, ClaimKind};
use artin_core::corpus::{Family, LabelRule, NamedFamily};
use artin_core::coxeter::{class_profile, cosine_signature};
use artin_core::engine::RuleConfig;
use artin_core::graph::PresentationGraph;
use artin_core::par::{map, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn corpus() -> Vec<PresentationGraph> {
    let labels: LabelRule = "2,3,4,5,inf".parse().unwrap();
    let mut graphs: Vec<PresentationGraph> = (0..96u64)
        .map(|seed| {
            NamedFamily::new(Family::Random(6 + (seed % 4) as usize), labels.clone())
                .seed(seed)
                .generate()
                .unwrap()
        })
        .collect();
    for n in 6..=14 {
        graphs.push(NamedFamily::wheel(n, 3, 3).generate().unwrap());
        graphs.push(NamedFamily::wheel(n, 2, 3).generate().unwrap());
    }
    graphs
}

fn bench(c: &mut Criterion) {
    let graphs = corpus();
    let config = RuleConfig::default();
    let modes = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

    let mut group = c.benchmark_group("certify_ah");
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| map(&graphs, exec, |g| certify(g, ClaimKind::Ah, &config).unwrap().verdict))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("oracle_sweep");
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| map(&graphs, exec, |g| (class_profile(g), cosine_signature(g, 1e-9))))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
