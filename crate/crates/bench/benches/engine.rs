//! Benchmarks for the four hot paths: Smith normal form on dense integer
//! matrices, homology from a periodic resolution, building a generic
//! resolution from scratch, and a full two-column extension computation.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use herbert_bench::{bench_engine, random_matrix};
use herbert_core::gmodule::GModule;
use herbert_core::group::BuiltGroup;
use herbert_core::homology::homology;
use herbert_core::resolution::{generic_resolution, periodic_resolution};
use herbert_core::snf::smith_normal_form;

fn snf_dense(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    for (n, bound) in [(8usize, 9i64), (16, 9), (24, 99)] {
        let a = random_matrix(n, n, bound, 0xBEEF + n as u64);
        group.bench_function(format!("{n}x{n}_entries_{bound}"), |b| {
            b.iter_batched(|| a.clone(), |m| smith_normal_form(&m), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn periodic_homology(c: &mut Criterion) {
    let engine = bench_engine();
    let BuiltGroup::Finite(z4) = engine.build("Z4").unwrap() else { unreachable!() };
    let trivial = GModule::trivial(&z4);
    c.bench_function("homology/Z4_periodic_degrees_0..8", |b| {
        b.iter(|| {
            let res = periodic_resolution(&z4, 8).unwrap();
            for q in 0..=7 {
                homology(&res, &trivial, q, 0).unwrap();
            }
        })
    });
}

fn generic_resolution_q8(c: &mut Criterion) {
    let engine = bench_engine();
    let BuiltGroup::Finite(q8) = engine.build("Q8").unwrap() else { unreachable!() };
    let mut group = c.benchmark_group("resolution");
    group.sample_size(10);
    group.bench_function("Q8_generic_length_8", |b| {
        b.iter(|| generic_resolution(&q8, 8, 0).unwrap())
    });
    group.finish();
}

fn extension_computation(c: &mut Criterion) {
    let mut group = c.benchmark_group("extension");
    group.sample_size(10);
    group.bench_function("Z4_sd_Z_twisted_H5_cold", |b| {
        b.iter(|| {
            // A fresh engine each pass: measures resolution building, the
            // monodromy lift, and both Wang columns with nothing cached.
            let engine = bench_engine();
            engine.compute("Z4_sd_Z", "Ztw", 5, false).unwrap()
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    snf_dense,
    periodic_homology,
    generic_resolution_q8,
    extension_computation
);
criterion_main!(benches);
