#![allow(dead_code)]

use std::collections::BTreeMap;

use latquot_core::exactnum::{rat, MatQ, Rational};
use latquot_core::Lattice;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rational(height: i64) -> impl Strategy<Value = Rational> {
    (-height..=height, 1..=height).prop_map(|(p, q)| rat(p, q))
}

pub fn matq(n: usize, height: i64) -> impl Strategy<Value = MatQ> {
    proptest::collection::vec(rational(height), n * n).prop_map(move |e| MatQ::new(n, e).unwrap())
}

pub fn int_matq(n: usize, height: i64) -> impl Strategy<Value = MatQ> {
    proptest::collection::vec(-height..=height, n * n).prop_map(move |e| {
        MatQ::from_fn(n, |i, j| Rational::from_integer(BigInt::from(e[i * n + j])))
    })
}

pub fn invertible(n: usize, height: i64) -> impl Strategy<Value = MatQ> {
    matq(n, height).prop_filter("singular", |m| m.det() != Rational::from_integer(0.into()))
}

pub fn lattice(n: usize, height: i64) -> impl Strategy<Value = Lattice> {
    invertible(n, height).prop_map(|b| Lattice::from_basis(b).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every coefficient vector in the box `|c_i| <= radius`, excluding zero,
/// with its squared length computed from the ambient vector.
pub fn box_vectors(l: &Lattice, radius: i64) -> Vec<(Vec<i64>, Rational)> {
    let n = l.dim();
    let mut out = Vec::new();
    let mut c = vec![-radius; n];
    loop {
        if c.iter().any(|&x| x != 0) {
            let coeffs: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
            let v = l.ambient(&coeffs).unwrap();
            out.push((c.clone(), v.iter().map(|x| x * x).sum()));
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if c[k] < radius {
                c[k] += 1;
                break;
            }
            c[k] = -radius;
            k += 1;
        }
    }
}

/// Last nonzero entry positive.
pub fn canonical_sign(c: &[i64]) -> bool {
    c.iter().rev().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

pub fn brute_shortest(l: &Lattice, radius: i64) -> (Rational, Vec<Vec<i64>>) {
    let all = box_vectors(l, radius);
    let min = all.iter().map(|(_, q)| q.clone()).min().unwrap();
    let mut v: Vec<Vec<i64>> = all
        .into_iter()
        .filter(|(c, q)| *q == min && canonical_sign(c))
        .map(|(c, _)| c)
        .collect();
    v.sort();
    (min, v)
}

pub fn brute_spectrum(l: &Lattice, radius: i64, bound: &Rational) -> Vec<(Rational, usize)> {
    let mut counts = BTreeMap::new();
    for (c, q) in box_vectors(l, radius) {
        if &q <= bound && canonical_sign(&c) {
            *counts.entry(q).or_insert(0usize) += 1;
        }
    }
    counts.into_iter().collect()
}
