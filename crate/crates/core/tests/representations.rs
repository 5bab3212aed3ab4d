mod common;

use cliffalg_core::golden::{golden_cases, golden_matrices};
use cliffalg_core::ideals::{idempotent_factors, q_basis};
use cliffalg_core::involutions::dagger;
use cliffalg_core::random::{random_multivector, rng_from_seed};
use cliffalg_core::{
    is_hermitian_idempotent, preset_ideal_basis, standard_ideal_basis, standard_idempotent,
    ComplexMatrix, Multivector, Preset, Representation, Signature,
};
use common::*;
use num_complex::Complex64;

const EPS: f64 = 1e-9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::complex(p, q).unwrap()
}

fn mv(s: Signature, terms: &[(&[usize], Complex64)]) -> Multivector {
    terms.iter().fold(Multivector::zero(s), |acc, (idx, k)| {
        &acc + &Multivector::blade(s, idx).unwrap().scale(*k)
    })
}

#[test]
fn every_tabulated_representation_is_reproduced() {
    let cases = golden_cases();
    assert_eq!(cases.len(), 21);
    for (s, preset) in cases {
        let rep = Representation::new(preset_ideal_basis(&s, preset).unwrap());
        let want = golden_matrices(&s, preset).unwrap();
        assert_eq!(rep.generators().len(), s.n());
        for (a, (g, w)) in rep.generators().iter().zip(&want).enumerate() {
            assert!(g.approx_eq(w, EPS), "{s} {preset} e^{}", a + 1);
        }
    }
}

#[test]
fn selected_table_entries() {
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let gen = |p, q, preset, a: usize| {
        let rep = Representation::new(preset_ideal_basis(&sig(p, q), preset).unwrap());
        rep.generators()[a - 1].clone()
    };
    let diag = |d: &[Complex64]| ComplexMatrix::diagonal(d);
    assert!(gen(2, 0, Preset::Standard, 1).approx_eq(&diag(&[one, -one]), EPS));
    assert!(gen(0, 2, Preset::Standard, 1).approx_eq(&diag(&[-i, i]), EPS));
    let e2 = ComplexMatrix::from_rows(&[vec![zero, -one], vec![one, zero]]).unwrap();
    assert!(gen(1, 1, Preset::Paper, 2).approx_eq(&e2, EPS));
    assert!(gen(0, 5, Preset::Paper, 1).approx_eq(&diag(&[-i, i, i, -i, -i, i, i, -i]), EPS));
    let dirac = gen(1, 3, Preset::Dirac, 2);
    let want = golden_matrices(&sig(1, 3), Preset::Dirac).unwrap();
    assert!(dirac.approx_eq(&want[1], EPS));
}

#[test]
fn tabulated_bases_from_their_formulas() {
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let s = sig(3, 0);
    let t = mv(s, &[(&[], c(0.5, 0.0)), (&[1], c(0.5, 0.0))]);
    let want = [
        mv(s, &[(&[], one), (&[2, 3], -i)]),
        mv(s, &[(&[2], one), (&[3], -i)]),
        mv(s, &[(&[2], one), (&[3], i)]),
        mv(s, &[(&[], one), (&[2, 3], i)]),
    ];
    let basis = preset_ideal_basis(&s, Preset::Paper).unwrap();
    assert!(basis.t.approx_eq(&t, EPS));
    for (tau, w) in basis.taus.iter().zip(&want) {
        assert!(tau.approx_eq(&(w * &t), EPS));
    }

    let s = sig(5, 0);
    let basis = preset_ideal_basis(&s, Preset::Paper).unwrap();
    let first = mv(s, &[(&[], one), (&[4, 5], -i)]).scale(2f64.sqrt());
    assert!(basis.taus[0].approx_eq(&(&first * &basis.t), EPS));

    let s = sig(1, 3);
    let basis = preset_ideal_basis(&s, Preset::Dirac).unwrap();
    let t = &basis.t;
    let want: [(&[usize], f64); 4] = [(&[], -2.0), (&[2, 4], 2.0), (&[4], 2.0), (&[2], 2.0)];
    for (tau, (idx, k)) in basis.taus.iter().zip(want) {
        let b = Multivector::blade(s, idx).unwrap().scale(k);
        assert!(tau.approx_eq(&(&b * t), EPS));
    }
}

#[test]
fn idempotent_factors_commute_and_are_projections() {
    for s in signatures_up_to(8) {
        let fs = idempotent_factors(&s).unwrap();
        for f in &fs {
            assert!(is_hermitian_idempotent(f, EPS), "{s}");
        }
        for a in &fs {
            for b in &fs {
                assert!((a * b).approx_eq(&(b * a), EPS));
            }
        }
        let t = standard_idempotent(&s).unwrap();
        let want = 0.5f64.powi((s.n() / 2) as i32);
        assert!((t.trace() - want).norm() < EPS, "{s}");
    }
}

#[test]
fn standard_bases_span_the_ideal() {
    let mut rng = rng_from_seed(10);
    for s in signatures_up_to(6) {
        let basis = standard_ideal_basis(&s).unwrap();
        assert_eq!(basis.dim(), q_basis(s.n()).len());
        assert_eq!(basis.dim(), 1 << s.n().div_ceil(2));
        // oracle Gram matrix
        for (k, a) in basis.taus.iter().enumerate() {
            for (l, b) in basis.taus.iter().enumerate() {
                let g = oracle_scalar_product(a, b);
                let want = if k == l { 1.0 } else { 0.0 };
                assert!((g - want).norm() < EPS, "{s} ({k},{l})");
            }
        }
        // V U stays in the ideal and decomposes in the basis
        let u = &random_multivector(s, &mut rng) * &basis.t;
        let vu = &random_multivector(s, &mut rng) * &u;
        let (_, residual) = basis.coordinates(&vu).unwrap();
        assert!(residual < EPS, "{s}");
    }
}

#[test]
fn gamma_is_a_normal_homomorphism_up_to_n6() {
    let mut rng = rng_from_seed(11);
    for s in signatures_up_to(6) {
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let d = rep.dim();
        assert!(rep.gamma(&Multivector::one(s)).unwrap().approx_eq(&ComplexMatrix::identity(d), EPS));
        for _ in 0..10 {
            let u = random_multivector(s, &mut rng);
            let v = random_multivector(s, &mut rng);
            let guv = rep.gamma(&(&u * &v)).unwrap();
            let gu = rep.gamma(&u).unwrap();
            let gv = rep.gamma(&v).unwrap();
            assert!(guv.approx_eq(&(&gu * &gv), 1e-9), "{s}");
            assert!(rep.gamma(&dagger(&u)).unwrap().approx_eq(&gu.adjoint(), 1e-9));
            let tr = u.trace() - gu.trace() / d as f64;
            assert!(tr.norm() < EPS);
        }
        assert!(rep.is_normal(EPS).normal, "{s}");
    }
}

#[test]
fn gamma_agrees_with_inner_product_oracle() {
    let mut rng = rng_from_seed(12);
    for s in signatures_up_to(4) {
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let taus = &rep.basis().taus;
        let u = random_multivector(s, &mut rng);
        let g = rep.gamma(&u).unwrap();
        for k in 0..rep.dim() {
            for i in 0..rep.dim() {
                let want = oracle_scalar_product(&taus[k], &oracle_product(&u, &taus[i]));
                assert!((g.get(k, i) - want).norm() < EPS);
            }
        }
    }
}

#[test]
fn coordinates_and_corner_maps() {
    let mut rng = rng_from_seed(13);
    for s in signatures_up_to(5) {
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let t = rep.basis().t.clone();
        let omega = &random_multivector(s, &mut rng) * &t;
        let u = random_multivector(s, &mut rng);
        let lhs = rep.rho(&(&u * &omega), EPS).unwrap();
        let rhs = rep.gamma(&u).unwrap().apply(&rep.rho(&omega, EPS).unwrap());
        for (a, b) in lhs.iter().zip(&rhs) {
            assert!((a - b).norm() < 1e-9);
        }

        let corner = |rng: &mut _| &(&t * &random_multivector(s, rng)) * &t;
        let v = corner(&mut rng);
        let w = corner(&mut rng);
        let tv = rep.theta(&v, EPS).unwrap();
        let tw = rep.theta(&w, EPS).unwrap();
        assert!(rep.theta(&(&v * &w), EPS).unwrap().approx_eq(&(&tw * &tv), 1e-9), "{s}");
        let gu = rep.gamma(&u).unwrap();
        assert!(gu.commutator(&tv).max_abs() < 1e-9);
        let lhs = rep.rho(&(&omega * &v), EPS).unwrap();
        let rhs = tv.apply(&rep.rho(&omega, EPS).unwrap());
        for (a, b) in lhs.iter().zip(&rhs) {
            assert!((a - b).norm() < 1e-9);
        }
        assert!(rep.rho(&Multivector::one(s), EPS).is_err() || s.n() == 1);
    }
}

#[test]
fn odd_tabulated_representations_have_two_blocks() {
    for (s, preset) in golden_cases() {
        if s.n() % 2 == 1 {
            let rep = Representation::new(preset_ideal_basis(&s, preset).unwrap());
            for g in rep.generators() {
                assert!(g.is_two_block_diagonal(EPS), "{s}");
            }
        }
    }
    for (p, q) in [(7, 0), (3, 4), (0, 7)] {
        let s = sig(p, q);
        let rep = Representation::new(preset_ideal_basis(&s, Preset::Block).unwrap());
        for g in rep.generators() {
            assert!(g.is_two_block_diagonal(EPS), "{s}");
        }
    }
}

#[test]
fn spectra_and_determinants() {
    let mut rng = rng_from_seed(14);
    let s = sig(1, 3);
    let rep = Representation::new(standard_ideal_basis(&s).unwrap());
    for lambda in rep.spectrum(&Multivector::volume_element(s), EPS).unwrap() {
        assert!((lambda * lambda + 1.0).norm() < EPS);
    }
    let x = c(0.3, -1.2);
    let d = rep.determinant(&Multivector::one(s).scale(x)).unwrap();
    assert!((d - x.powu(4)).norm() < 1e-12);
    for s in signatures_up_to(5) {
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let u = random_multivector(s, &mut rng);
        let spec = rep.spectrum(&u, EPS).unwrap();
        assert_eq!(spec.len(), rep.dim());
        let prod: Complex64 = spec.iter().product();
        let det = rep.determinant(&u).unwrap();
        assert!((prod - det).norm() <= 1e-6 * det.norm().max(1.0), "{s}");
        // U - lambda e is singular
        let shifted = &u - &Multivector::one(s).scale(spec[0]);
        assert!(rep.determinant(&shifted).unwrap().norm() < 1e-6 * det.norm().max(1.0));
    }
}
