mod common;

use common::rational;
use latquot_core::complex::{
    gaussian_lattice, is_complex_linear, is_unitary, realify, ComplexMatrix, ComplexStructure,
};
use latquot_core::exactnum::{int, rat, Rational};
use latquot_core::flat::{gram, is_orthogonal};
use latquot_core::{sample, Lattice};
use num_complex::Complex;
use num_traits::Signed;
use proptest::prelude::*;

fn complex_matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec((rational(5), rational(5)), n * n).prop_map(move |e| {
        ComplexMatrix::new(n, e.into_iter().map(|(a, b)| Complex::new(a, b)).collect()).unwrap()
    })
}

fn pair() -> impl Strategy<Value = (ComplexMatrix, ComplexMatrix)> {
    (1usize..=3).prop_flat_map(|n| (complex_matrix(n), complex_matrix(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn realify_is_a_ring_homomorphism((a, b) in pair()) {
        prop_assert_eq!(realify(&a.mul(&b)), &realify(&a) * &realify(&b));
        prop_assert_eq!(realify(&a.add(&b)), &realify(&a) + &realify(&b));
        prop_assert!(is_complex_linear(&realify(&a), a.dim()).unwrap());
    }

    #[test]
    fn realified_det_is_squared_modulus((a, _) in pair()) {
        let d = a.det();
        let modulus: Rational = &d.re * &d.re + &d.im * &d.im;
        let real = realify(&a).det();
        prop_assert_eq!(&real, &modulus);
        prop_assert!(!real.is_negative());
    }

    #[test]
    fn unitary_maps_preserve_gram_forms(seed in any::<u64>(), b in (2usize..=2).prop_flat_map(|n| common::invertible(n, 4))) {
        use rand::seq::SliceRandom;
        let mut rng = common::rng(seed);
        let (x, y, z) = *sample::PYTHAGOREAN_TRIPLES.choose(&mut rng).unwrap();
        let u = realify(&ComplexMatrix::scalar(1, Complex::new(rat(x, z), rat(y, z))));
        prop_assert!(is_unitary(&u, 1).unwrap());
        let l = Lattice::from_basis(b.clone()).unwrap();
        let moved = Lattice::from_basis(&u * &b).unwrap();
        prop_assert_eq!(gram(&moved), gram(&l));
    }
}

#[test]
fn structures_square_to_minus_identity() {
    for n in 1..=5 {
        assert!(ComplexStructure::new(n).squares_to_minus_identity());
    }
}

#[test]
fn unitary_is_complex_linear_and_orthogonal() {
    let mut rng = common::rng(3);
    for _ in 0..50 {
        let t = sample::rational_orthogonal(&mut rng, 2);
        let expected = is_complex_linear(&t, 1).unwrap() && is_orthogonal(&t);
        assert_eq!(is_unitary(&t, 1).unwrap(), expected);
    }
    let rot = realify(&ComplexMatrix::scalar(
        1,
        Complex::new(rat(3, 5), rat(4, 5)),
    ));
    assert!(is_unitary(&rot, 1).unwrap());
    let two = realify(&ComplexMatrix::scalar(1, Complex::new(int(2), int(0))));
    assert!(is_complex_linear(&two, 1).unwrap() && !is_unitary(&two, 1).unwrap());
}

#[test]
fn gaussian_ideal_index() {
    let ideal = Lattice::from_basis(realify(&ComplexMatrix::scalar(
        1,
        Complex::new(int(1), int(1)),
    )))
    .unwrap();
    assert_eq!(
        ideal.sublattice_index(&gaussian_lattice(1)).unwrap(),
        2.into()
    );
}
