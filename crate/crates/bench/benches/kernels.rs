use criterion::{black_box, criterion_group, criterion_main, Criterion};
use jordan_strata::poisson::{ClassicalAlgebra, LiePoisson};
use jordan_strata::reduction::{self as red, DualPairCase};
use jordan_strata::sampling;
use jordan_strata::strata::rank_k_sample;
use jordan_strata::tkk::{self, TkkCase};
use jordan_strata::{DivisionAlgebra, Gaussian, JordanElement, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn octonions(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = sampling::cd::<Rational, _>(&mut rng, 3, 9);
    let y = sampling::cd::<Rational, _>(&mut rng, 3, 9);
    c.bench_function("octonion mul", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
    c.bench_function("octonion mul recursive", |b| b.iter(|| black_box(&x).mul_recursive(black_box(&y))));
}

fn albert(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let x = JordanElement::<Rational>::random(DivisionAlgebra::O, &mut rng, 5);
    let y = JordanElement::<Rational>::random(DivisionAlgebra::O, &mut rng, 5);
    let z = JordanElement::<Gaussian>::random(DivisionAlgebra::O, &mut rng, 5);
    c.bench_function("albert det", |b| b.iter(|| black_box(&x).det()));
    c.bench_function("albert sharp", |b| b.iter(|| black_box(&x).sharp()));
    c.bench_function("albert jordan product", |b| b.iter(|| black_box(&x).jordan_mul(black_box(&y))));
    c.bench_function("albert quadratic rep", |b| b.iter(|| black_box(&y).quadratic_rep(black_box(&x))));
    c.bench_function("complex albert det", |b| b.iter(|| black_box(&z).det()));
    c.bench_function("albert rank", |b| b.iter(|| black_box(&x).jordan_rank()));
}

fn tkk_brackets(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in [TkkCase::Sp3, TkkCase::E7] {
        let alg = tkk::algebra(case);
        let a = alg.random(&mut rng, 3);
        let b = alg.random(&mut rng, 3);
        c.bench_function(&format!("tkk bracket {case}"), |bch| bch.iter(|| alg.bracket(black_box(&a), black_box(&b))));
    }
}

fn reduction(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut group = c.benchmark_group("reduction");
    group.sample_size(20);
    for case in DualPairCase::ALL {
        let a = red::zero_level_sample(case, 3, 3, &mut rng).unwrap();
        group.bench_function(format!("reduced point {case}"), |b| b.iter(|| red::reduced_point(black_box(&a))));
        group.bench_function(format!("zero-level sample {case}"), |b| {
            b.iter(|| red::zero_level_sample(case, 3, 2, &mut rng))
        });
    }
    group.finish();
}

fn poisson(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut group = c.benchmark_group("poisson");
    group.sample_size(10);
    for case in DualPairCase::ALL {
        let alg = ClassicalAlgebra::new(case);
        let lp = LiePoisson::new(&alg).unwrap();
        let a = red::zero_level_sample(case, 3, 2, &mut rng).unwrap();
        let x = alg.coords(&red::mu_g(&a)).unwrap();
        group.bench_function(format!("rank at {case}"), |b| b.iter(|| lp.rank_at(black_box(&x))));
    }
    let sp3 = tkk::algebra(TkkCase::Sp3);
    let lp = LiePoisson::new(sp3).unwrap();
    let x = sp3.coords(&sp3.plus_element(&rank_k_sample(DivisionAlgebra::R, 2, &mut rng)));
    group.bench_function("rank at sp3", |b| b.iter(|| lp.rank_at(black_box(&x))));
    group.finish();
}

criterion_group!(benches, octonions, albert, tkk_brackets, reduction, poisson);
criterion_main!(benches);
