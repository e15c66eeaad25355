//! Random generators for matrices and lattices, used by the test suites and
//! benchmarks.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactnum::{int, rat, MatQ, MatZ, Rational};
use crate::lattice::Lattice;

/// Primitive Pythagorean triples `(a, b, c)` with `a² + b² = c²`.
pub const PYTHAGOREAN_TRIPLES: [(i64, i64, i64); 5] = [
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
];

/// `p/q` with `|p| <= height`, `1 <= q <= height`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, height: i64) -> Rational {
    rat(
        rng.gen_range(-height..=height),
        rng.gen_range(1..=height.max(1)),
    )
}

pub fn rational_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> MatQ {
    MatQ::from_fn(n, |_, _| rational(rng, height))
}

pub fn integer_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> MatQ {
    MatQ::from_fn(n, |_, _| int(rng.gen_range(-height..=height)))
}

/// A rational matrix of nonzero determinant.
pub fn invertible<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> MatQ {
    loop {
        let m = rational_matrix(rng, n, height);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// An integer matrix of nonzero determinant.
pub fn invertible_integer<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> MatQ {
    loop {
        let m = integer_matrix(rng, n, height);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A lattice whose basis has integer entries of absolute value `<= height`.
pub fn integer_lattice<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> Lattice {
    Lattice::from_basis(invertible_integer(rng, n, height)).expect("nonsingular")
}

/// A lattice with a rational basis of height `<= height`.
pub fn rational_lattice<R: Rng + ?Sized>(rng: &mut R, n: usize, height: i64) -> Lattice {
    Lattice::from_basis(invertible(rng, n, height)).expect("nonsingular")
}

/// Product of `steps` random elementary integer column operations: adding a
/// small multiple of one column to another, swapping, or negating.
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> MatZ {
    elementary_product(rng, n, steps, false)
}

/// Like [`unimodular`] but with determinant `+1`.
pub fn special_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> MatZ {
    elementary_product(rng, n, steps, true)
}

fn elementary_product<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize, special: bool) -> MatZ {
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| BigInt::from((i == j) as i64)).collect())
        .collect();
    for _ in 0..steps {
        if n == 1 {
            if !special && rng.gen_bool(0.5) {
                cols[0][0] = -cols[0][0].clone();
            }
            continue;
        }
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                let k = BigInt::from(*[-2, -1, 1, 2].choose(rng).expect("nonempty"));
                let src = cols[b].clone();
                for (x, y) in cols[a].iter_mut().zip(&src) {
                    *x += &k * y;
                }
            }
            1 => {
                cols.swap(a, b);
                if special {
                    for x in cols[a].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
            }
            _ => {
                for x in cols[a].iter_mut() {
                    *x = -std::mem::take(x);
                }
                if special {
                    for x in cols[b].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
            }
        }
    }
    MatZ::from_columns(&cols).expect("square")
}

/// A rotation by a Pythagorean angle in the coordinate plane `(i, j)`.
pub fn plane_rotation(n: usize, i: usize, j: usize, triple: (i64, i64, i64)) -> MatQ {
    let (a, b, c) = triple;
    MatQ::from_fn(n, |r, s| {
        if (r, s) == (i, i) || (r, s) == (j, j) {
            rat(a, c)
        } else if (r, s) == (i, j) {
            rat(-b, c)
        } else if (r, s) == (j, i) {
            rat(b, c)
        } else if r == s {
            int(1)
        } else {
            int(0)
        }
    })
}

/// A random signed permutation matrix.
pub fn signed_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MatQ {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<i64> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    MatQ::from_fn(n, |r, c| if perm[c] == r { int(signs[c]) } else { int(0) })
}

/// A random rational orthogonal matrix: Pythagorean plane rotations
/// composed with a signed permutation.
pub fn rational_orthogonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MatQ {
    let mut q = signed_permutation(rng, n);
    if n >= 2 {
        for _ in 0..rng.gen_range(1..=3) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let t = *PYTHAGOREAN_TRIPLES.choose(rng).expect("nonempty");
            q = &plane_rotation(n, i, j, t) * &q;
        }
    }
    q
}

/// Like [`rational_orthogonal`] with determinant `+1`.
pub fn rational_rotation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MatQ {
    let q = rational_orthogonal(rng, n);
    if q.det() == int(1) {
        q
    } else {
        let flip = MatQ::from_fn(n, |r, c| {
            if r != c {
                int(0)
            } else if r == 0 {
                int(-1)
            } else {
                int(1)
            }
        });
        &flip * &q
    }
}
