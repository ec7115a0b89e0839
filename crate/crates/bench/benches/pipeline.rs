use criterion::{black_box, criterion_group, criterion_main, Criterion};
use icosa_core::huckel::{build_c240, build_c60, decompose, BasisChoice};
use icosa_core::sab::{b12h12_space, independent_sets_report};
use icosa_core::{Arrangement, Context, IcosahedralGroup, IrrepSet, QuantaState, SymmetryMode};

fn construction(c: &mut Criterion) {
    c.bench_function("group table", |b| b.iter(|| IcosahedralGroup::new().unwrap()));
    let g = IcosahedralGroup::new().unwrap();
    c.bench_function("irrep matrices", |b| b.iter(|| IrrepSet::new(black_box(&g))));
    c.bench_function("regular reduction", |b| b.iter(|| Context::new().unwrap()));
}

fn applications(c: &mut Criterion) {
    let ctx = Context::new().unwrap();
    let seed = QuantaState([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
    c.bench_function("b12h12 regular orbit", |b| {
        b.iter(|| {
            let space = b12h12_space(&ctx.group, seed, SymmetryMode::Rotations).unwrap();
            independent_sets_report(&ctx.bases, &space, 0, SymmetryMode::Rotations).unwrap()
        })
    });
    let c60 = build_c60(&ctx.group, 1.0).unwrap();
    c.bench_function("c60 blocks", |b| b.iter(|| decompose(&ctx, &c60, BasisChoice::Reference).unwrap()));
    let c240 = build_c240(&ctx.group, Arrangement::A, 2.5).unwrap();
    let mut group = c.benchmark_group("c240");
    group.sample_size(10);
    group.bench_function("blocks", |b| b.iter(|| decompose(&ctx, &c240, BasisChoice::Reference).unwrap()));
    group.bench_function("dense spectrum", |b| b.iter(|| c240.dense_spectrum()));
    group.finish();
}

criterion_group!(benches, construction, applications);
criterion_main!(benches);
