use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use khds_bench::{arcs, cactus, tree, unicyclic, K, SIZES};
use khds_core::{normalize_arcs, pierce_arcs, solve_cactus, solve_tree, solve_unicyclic};

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for n in SIZES {
        group.throughput(Throughput::Elements(n as u64));

        let g = tree(n);
        group.bench_with_input(BenchmarkId::new("tree", n), &g, |b, g| {
            b.iter(|| solve_tree(g, 0, K).unwrap())
        });

        let g = unicyclic(n);
        group.bench_with_input(BenchmarkId::new("unicyclic", n), &g, |b, g| {
            b.iter(|| solve_unicyclic(g, K).unwrap())
        });

        let g = cactus(n);
        group.bench_with_input(BenchmarkId::new("cactus", n), &g, |b, g| {
            b.iter(|| solve_cactus(g, K).unwrap())
        });

        let (dom, raw) = arcs(n);
        group.bench_with_input(BenchmarkId::new("arcs", n), &raw, |b, raw| {
            b.iter(|| pierce_arcs(&normalize_arcs(dom, raw).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, graphs);
criterion_main!(benches);
