use std::hint::black_box;

use cliffalg_core::involutions::dagger;
use cliffalg_core::random::{random_multivector, rng_from_seed};
use cliffalg_core::{hodge_star, standard_ideal_basis, Representation, Signature};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const SIGNATURES: [(usize, usize); 4] = [(2, 1), (1, 3), (3, 3), (4, 4)];

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("clifford_product");
    for (p, q) in SIGNATURES {
        let s = Signature::complex(p, q).unwrap();
        let mut rng = rng_from_seed(1);
        let u = random_multivector(s, &mut rng);
        let v = random_multivector(s, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(s), &(u, v), |b, (u, v)| {
            b.iter(|| black_box(u) * black_box(v))
        });
    }
    group.finish();
}

fn involutions(c: &mut Criterion) {
    let s = Signature::complex(3, 3).unwrap();
    let u = random_multivector(s, &mut rng_from_seed(2));
    c.bench_function("dagger (3,3)", |b| b.iter(|| dagger(black_box(&u))));
    c.bench_function("hodge (3,3)", |b| b.iter(|| hodge_star(black_box(&u))));
}

fn representations(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma");
    for (p, q) in SIGNATURES {
        let s = Signature::complex(p, q).unwrap();
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let u = random_multivector(s, &mut rng_from_seed(3));
        group.bench_with_input(BenchmarkId::from_parameter(s), &u, |b, u| {
            b.iter(|| rep.gamma(black_box(u)).unwrap())
        });
    }
    group.finish();

    let s = Signature::complex(1, 3).unwrap();
    let rep = Representation::new(standard_ideal_basis(&s).unwrap());
    let u = random_multivector(s, &mut rng_from_seed(4));
    c.bench_function("spectrum (1,3)", |b| {
        b.iter(|| rep.spectrum(black_box(&u), 1e-9).unwrap())
    });
    c.bench_function("ideal basis (4,4)", |b| {
        let s = Signature::complex(4, 4).unwrap();
        b.iter(|| standard_ideal_basis(black_box(&s)).unwrap())
    });
}

criterion_group!(benches, products, involutions, representations);
criterion_main!(benches);
