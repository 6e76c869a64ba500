use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use msort_core::listspec::elms;
use msort_core::quicksort_array::iqsort_on;
use msort_core::quicksort_list::qsort;
use msort_core::refinement::{self, RunOptions};
use msort_core::{ArrayState, DenseArray};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_keys(n: usize) -> Vec<i64> {
    let mut rng = StdRng::seed_from_u64(7);
    (0..n).map(|_| rng.gen_range(0..n as i64)).collect()
}

fn sorts(c: &mut Criterion) {
    let mut group = c.benchmark_group("sort");
    for n in [100, 1_000, 10_000] {
        let xs = elms(&random_keys(n));
        group.bench_with_input(BenchmarkId::new("qsort", n), &xs, |b, xs| {
            b.iter(|| qsort(black_box(xs)))
        });
        group.bench_with_input(BenchmarkId::new("iqsort-dense", n), &xs, |b, xs| {
            b.iter(|| {
                let mut arr = DenseArray::from_list(0, xs);
                iqsort_on(&mut arr, 0, xs.len()).unwrap();
                arr
            })
        });
        group.bench_with_input(BenchmarkId::new("iqsort-state", n), &xs, |b, xs| {
            b.iter(|| {
                let mut arr = ArrayState::from_list(0, xs);
                iqsort_on(&mut arr, 0, xs.len()).unwrap();
                arr
            })
        });
    }
    group.finish();
}

fn obligations(c: &mut Criterion) {
    let mut group = c.benchmark_group("obligation");
    group.sample_size(10);
    for name in ["ipartl-refines-spec", "iqsort-refines-spec"] {
        let ob = refinement::find(name).unwrap();
        let opts = RunOptions {
            max_len: Some(4),
            ..RunOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| ob.run(&opts)));
    }
    group.finish();
}

criterion_group!(benches, sorts, obligations);
criterion_main!(benches);
