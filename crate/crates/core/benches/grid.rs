//! Sequential against data-parallel evaluation of the verification grid.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pointed_hopf::catalog::{sweep_family, FamilyId, Tag};
use pointed_hopf::charp::lemma_suite;
use pointed_hopf::par::Parallelism;
use pointed_hopf::report::{report_all, ReportConfig};
use pointed_hopf::scalars::DEFAULT_ENUM_CAP;

const MODES: [(&str, Parallelism); 2] = [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Parallel)];

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    for (tag, p) in [(Tag::A1a, 3), (Tag::A1a, 5), (Tag::Ca, 5)] {
        let id = FamilyId::new(tag, p, 0).unwrap();
        for (name, par) in MODES {
            g.bench_with_input(BenchmarkId::new(name, id), &id, |b, id| b.iter(|| sweep_family(id, DEFAULT_ENUM_CAP, 1, par).unwrap()));
        }
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    for (name, par) in MODES {
        g.bench_function(BenchmarkId::new("lemmas", name), |b| b.iter(|| lemma_suite(&[2, 3, 5], par).unwrap()));
        g.bench_function(BenchmarkId::new("report-all", name), |b| {
            b.iter(|| report_all(&[2, 3, 5], &ReportConfig::default(), par).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps, suites);
criterion_main!(benches);
