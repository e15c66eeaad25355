//! Deterministic inputs for the benchmarks under `benches/`.

use latquot_core::{sample, Lattice, MatQ, MatZ};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x1a77 + n as u64)
}

/// A rational matrix of nonzero determinant, entries of height 9.
pub fn rational_matrix(n: usize) -> MatQ {
    sample::invertible(&mut rng(n), n, 9)
}

/// A nonsingular integer matrix, entries in `[-9, 9]`.
pub fn integer_matrix(n: usize) -> MatZ {
    sample::invertible_integer(&mut rng(n), n, 9)
        .to_matz()
        .expect("integer entries")
}

/// A lattice with an integer basis of height 5.
pub fn lattice(n: usize) -> Lattice {
    sample::integer_lattice(&mut rng(n), n, 5)
}

/// `(L, Q·L·U)` with rational orthogonal `Q` and unimodular `U`.
pub fn isometric_pair(n: usize) -> (Lattice, Lattice) {
    let mut rng = rng(n);
    let l = sample::integer_lattice(&mut rng, n, 4);
    let q = sample::rational_orthogonal(&mut rng, n);
    let u = sample::unimodular(&mut rng, n, 8).to_matq();
    let other = Lattice::from_basis(&(&q * l.basis()) * &u).expect("nonsingular");
    (l, other)
}
