mod common;

use latquot_core::exactnum::{int, MatQ};
use latquot_core::moduli::{
    double_coset_equivalent, gram_map, in_m, in_sigma, posdef_witness, same_coset_by_gram,
    same_coset_by_quotient, same_left_coset, witness_residual,
};
use latquot_core::{sample, Lattice};
use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gram_map_is_left_orthogonal_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=4);
        let t = sample::invertible(&mut rng, n, 5);
        let r = sample::rational_orthogonal(&mut rng, n);
        prop_assert_eq!(gram_map(&(&r * &t)).unwrap(), gram_map(&t).unwrap());
    }

    #[test]
    fn coset_characterizations_agree(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=3);
        let t1 = sample::invertible(&mut rng, n, 4);
        let t2 = if rng.gen_bool(0.5) {
            &sample::rational_orthogonal(&mut rng, n) * &t1
        } else {
            sample::invertible(&mut rng, n, 4)
        };
        prop_assert_eq!(same_coset_by_gram(&t1, &t2).unwrap(), same_coset_by_quotient(&t1, &t2).unwrap());
        same_left_coset(&t1, &t2).unwrap();
    }

    #[test]
    fn sigma_is_closed_under_inverse(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=4);
        let u = sample::special_unimodular(&mut rng, n, 10).to_matq();
        prop_assert!(in_sigma(&u));
        prop_assert!(in_sigma(&u.inverse().unwrap()));
    }

    #[test]
    fn unimodular_maps_land_in_m(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=4);
        let t = &sample::rational_orthogonal(&mut rng, n) * &sample::unimodular(&mut rng, n, 8).to_matq();
        prop_assert!(t.det().abs() == int(1));
        prop_assert!(in_m(gram_map(&t).unwrap().matrix()));
    }

    #[test]
    fn witness_reproduces_the_form(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=4);
        let t = sample::invertible_integer(&mut rng, n, 3);
        let s = gram_map(&t).unwrap().into_matrix();
        prop_assume!(s.max_abs() <= int(10));
        let w = posdef_witness(&s).unwrap();
        prop_assert!(witness_residual(&w, &s) <= 1e-10);
        for (i, row) in w.iter().enumerate() {
            prop_assert!(row[..i].iter().all(|&x| x == 0.0));
        }
    }

    #[test]
    fn double_coset_is_reflexive_and_symmetric(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=3);
        let l = sample::integer_lattice(&mut rng, n, 4);
        let other = Lattice::from_basis(
            &(&sample::rational_rotation(&mut rng, n) * l.basis())
                * &sample::special_unimodular(&mut rng, n, 8).to_matq(),
        )
        .unwrap();
        for oriented in [false, true] {
            prop_assert!(double_coset_equivalent(&l, &l, oriented).unwrap().is_some());
            let u = double_coset_equivalent(&l, &other, oriented).unwrap().unwrap();
            let v = double_coset_equivalent(&other, &l, oriented).unwrap().unwrap();
            prop_assert!(u.unimodular_inverse().is_ok() && v.unimodular_inverse().is_ok());
        }
    }
}

#[test]
fn sl_image_is_determinant_one_even_for_reflections() {
    let t = MatQ::from_i64(&[&[0, 1], &[1, 0]]);
    assert!(in_m(gram_map(&t).unwrap().matrix()));
}
