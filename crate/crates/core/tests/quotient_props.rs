mod common;

use common::{lattice, rational};
use latquot_core::exactnum::{int, MatQ, Rational};
use latquot_core::quotient::{circle_map, parallelepiped_volume};
use latquot_core::{sample, InducedMap, Lattice, TorusPoint};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(12), n)
}

fn lattice_with_vectors() -> impl Strategy<Value = (Lattice, Vec<Rational>, Vec<Rational>)> {
    (1usize..=4).prop_flat_map(|n| (lattice(n, 5), vector(n), vector(n)))
}

/// A valid induced map `A: L₁ → L₂` with `L₂ = A·B₁·U·Zⁿ` presented in a
/// scrambled basis.
fn induced_map(seed: u64) -> InducedMap {
    let mut rng = common::rng(seed);
    let n = rng.gen_range(1..=4);
    let l1 = sample::rational_lattice(&mut rng, n, 5);
    let a = sample::invertible(&mut rng, n, 5);
    let u = sample::unimodular(&mut rng, n, 6).to_matq();
    let l2 = Lattice::from_basis(&(&a * l1.basis()) * &u).unwrap();
    InducedMap::new(a, &l1, &l2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_map_is_well_defined((l, x, _) in lattice_with_vectors(), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c: Vec<BigInt> = (0..l.dim()).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect();
        let shift = l.ambient(&c).unwrap();
        let moved: Vec<Rational> = x.iter().zip(&shift).map(|(a, b)| a + b).collect();
        let p = TorusPoint::reduce(&l, &x).unwrap();
        let q = TorusPoint::reduce(&l, &moved).unwrap();
        prop_assert_eq!(p.coords(), q.coords());
    }

    #[test]
    fn reduce_identifies_exactly_lattice_differences((l, x, y) in lattice_with_vectors()) {
        let diff: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        let same = TorusPoint::reduce(&l, &x).unwrap() == TorusPoint::reduce(&l, &y).unwrap();
        prop_assert_eq!(same, l.contains(&diff).unwrap());
    }

    #[test]
    fn quotient_map_is_a_homomorphism((l, x, y) in lattice_with_vectors()) {
        let sum: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let lhs = TorusPoint::reduce(&l, &sum).unwrap();
        let rhs = TorusPoint::reduce(&l, &x).unwrap().add(&TorusPoint::reduce(&l, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs.coords(), rhs.coords());
        let p = TorusPoint::reduce(&l, &x).unwrap();
        prop_assert_eq!(p.add(&p.neg()).unwrap(), TorusPoint::zero(&l));
    }

    #[test]
    fn compatibility_square(seed in any::<u64>(), xs in proptest::collection::vec(rational(12), 4)) {
        let f = induced_map(seed);
        let x = &xs[..f.source().dim()];
        let lhs = f.apply(&TorusPoint::reduce(f.source(), x).unwrap()).unwrap();
        let rhs = TorusPoint::reduce(f.target(), &f.matrix().mul_vec(x)).unwrap();
        prop_assert_eq!(lhs.coords(), rhs.coords());
    }

    #[test]
    fn induced_map_is_a_group_isomorphism(seed in any::<u64>(), xs in proptest::collection::vec(rational(12), 8)) {
        let f = induced_map(seed);
        let n = f.source().dim();
        let p = TorusPoint::reduce(f.source(), &xs[..n]).unwrap();
        let q = TorusPoint::reduce(f.source(), &xs[4..4 + n]).unwrap();
        let lhs = f.apply(&p.add(&q).unwrap()).unwrap();
        let rhs = f.apply(&p).unwrap().add(&f.apply(&q).unwrap()).unwrap();
        prop_assert_eq!(lhs.coords(), rhs.coords());
        // bijective: the inverse matrix induces the inverse map
        let back = InducedMap::new(f.matrix().inverse().unwrap(), f.target(), f.source()).unwrap();
        prop_assert_eq!(back.apply(&f.apply(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn volumes_scale_by_det(seed in any::<u64>()) {
        let f = induced_map(seed);
        prop_assert_eq!(f.target().covolume(), f.volume_scale() * f.source().covolume());
        let n = f.source().dim();
        let mut rng = common::rng(seed ^ 0x5eed);
        let edges = loop {
            let e = MatQ::from_fn(n, |_, _| latquot_core::exactnum::rat(rng.gen_range(0..7), 7));
            if e.det() != int(0) { break e; }
        };
        let src = parallelepiped_volume(f.source(), &edges).unwrap();
        prop_assert_eq!(f.parallelepiped_image_volume(&edges).unwrap(), f.volume_scale() * src);
    }

    #[test]
    fn circle_map_is_a_homomorphism(s in -100.0f64..100.0, t in -100.0f64..100.0) {
        let (a, b) = circle_map(s).unwrap();
        let (c, d) = circle_map(t).unwrap();
        let (e, f) = circle_map(s + t).unwrap();
        prop_assert!((e - (a * c - b * d)).abs() <= 1e-12);
        prop_assert!((f - (a * d + b * c)).abs() <= 1e-12);
        let (g, h) = circle_map(s + 2.0 * std::f64::consts::PI).unwrap();
        prop_assert!((g - a).abs() <= 1e-12 && (h - b).abs() <= 1e-12);
    }
}

#[test]
fn composition_is_functorial() {
    let mut rng = common::rng(11);
    for _ in 0..20 {
        let n = rng.gen_range(1..=3);
        let l0 = sample::rational_lattice(&mut rng, n, 4);
        let a = sample::invertible(&mut rng, n, 4);
        let b = sample::invertible(&mut rng, n, 4);
        let l1 = Lattice::from_basis(&a * l0.basis()).unwrap();
        let l2 = Lattice::from_basis(&b * l1.basis()).unwrap();
        let g = InducedMap::new(a, &l0, &l1).unwrap();
        let f = InducedMap::new(b, &l1, &l2).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg.volume_scale(), f.volume_scale() * g.volume_scale());
        for _ in 0..100 {
            let x: Vec<Rational> = (0..n)
                .map(|_| latquot_core::exactnum::rat(rng.gen_range(-50..50), rng.gen_range(1..9)))
                .collect();
            let p = TorusPoint::reduce(&l0, &x).unwrap();
            assert_eq!(
                fg.apply(&p).unwrap(),
                f.apply(&g.apply(&p).unwrap()).unwrap()
            );
        }
    }
}
