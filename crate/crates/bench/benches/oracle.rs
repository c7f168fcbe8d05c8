use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ramlocus_core::berkovich::{multiplicity_at, trace_locus, Disk};
use ramlocus_core::classifier::{cross_check, from_pq, Analysis, DEFAULT_PRECISION};
use ramlocus_core::instances::leaf_instances;
use ramlocus_core::ratfunc::RationalMap;
use ramlocus_core::series::{parse_series, Exponent};

fn deep_five() -> Analysis {
    let c = from_pq(&parse_series("t").unwrap(), &parse_series("-4*t + t^3").unwrap()).unwrap();
    Analysis::new(&c).unwrap()
}

fn oracle(c: &mut Criterion) {
    let a = deep_five();
    let map = RationalMap::from_cubic(&a.coefficients);
    let x = Disk::new(&parse_series("1").unwrap(), Exponent::ONE).unwrap();
    c.bench_function("multiplicity_at deep subcase 5", |b| b.iter(|| multiplicity_at(black_box(&map), black_box(&x))));
    c.bench_function("trace_locus grid 3", |b| b.iter(|| trace_locus(black_box(&map), black_box(&a.hull), 3)));
}

fn analysis(c: &mut Criterion) {
    let coefficients = deep_five().coefficients;
    c.bench_function("Analysis::new deep subcase 5", |b| b.iter(|| Analysis::new(black_box(&coefficients))));
    let instances = leaf_instances();
    let mut group = c.benchmark_group("cross_check");
    group.sample_size(10);
    group.bench_function("every hand-built instance", |b| {
        b.iter(|| {
            for inst in &instances {
                black_box(cross_check(&inst.coefficients, Exponent::integer(DEFAULT_PRECISION)));
            }
        })
    });
    group.finish();
}

criterion_group!(benches, oracle, analysis);
criterion_main!(benches);
