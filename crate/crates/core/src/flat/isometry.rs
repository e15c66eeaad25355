//! Deciding whether two lattices differ by an ambient orthogonal map.
//!
//! `T(L₁) = L₂` for an orthogonal `T` exactly when some unimodular `U`
//! satisfies `Uᵀ·G₁·U = G₂`. Both forms are LLL-reduced first, then the
//! columns of a candidate `W` are matched one at a time against short
//! vectors of the first form with the right norms and inner products.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{enumerate_short, gram, lll_reduce};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{MatQ, MatZ, Rational};
use crate::lattice::Lattice;

/// Largest dimension accepted by [`isometric_mod_rotation`].
pub const MAX_ISOMETRY_DIM: usize = 4;

/// Finds a unimodular `U` with `Uᵀ·G₁·U = G₂`, or `None` when the lattices
/// are not isometric.
///
/// With `oriented` set, additionally requires `det U = +1` and that the
/// ambient map `T = B₂·U⁻¹·B₁⁻¹` preserves orientation.
pub fn isometric_mod_rotation(l1: &Lattice, l2: &Lattice, oriented: bool) -> Result<Option<MatZ>> {
    check_dim(l1.dim(), l2.dim())?;
    let n = l1.dim();
    if n > MAX_ISOMETRY_DIM {
        return Err(Error::DimensionTooLarge(n, MAX_ISOMETRY_DIM));
    }
    let g1 = gram(l1);
    let g2 = gram(l2);
    if g1.det() != g2.det() {
        return Ok(None);
    }
    let (r1, v1) = lll_reduce(g1.matrix());
    let (r2, v2) = lll_reduce(g2.matrix());
    let v2_inv = v2.unimodular_inverse()?;

    let bound = (0..n).map(|i| r2.get(i, i).clone()).max().expect("n >= 1");
    let mut by_norm: HashMap<Rational, Vec<Candidate>> = HashMap::new();
    enumerate_short(&r1, &bound, |x, q| {
        let xq: Vec<Rational> = x.iter().cloned().map(Rational::from_integer).collect();
        let image = r1.mul_vec(&xq);
        let neg_x: Vec<BigInt> = x.iter().map(|c| -c).collect();
        let neg_image: Vec<Rational> = image.iter().map(|c| -c).collect();
        let bucket = by_norm.entry(q.clone()).or_default();
        bucket.push(Candidate {
            coeffs: x.to_vec(),
            image,
        });
        bucket.push(Candidate {
            coeffs: neg_x,
            image: neg_image,
        });
    });

    let columns: Vec<&[Candidate]> = (0..n)
        .map(|j| by_norm.get(r2.get(j, j)).map(Vec::as_slice).unwrap_or(&[]))
        .collect();
    if columns.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }

    let accept = |w: &MatZ| -> Option<MatZ> {
        let u = &(&v1 * w) * &v2_inv;
        if oriented && !orientation_preserved(l1, l2, &u) {
            return None;
        }
        Some(u)
    };
    let mut chosen: Vec<&Candidate> = Vec::with_capacity(n);
    Ok(backtrack(&r2, &columns, &mut chosen, &accept))
}

struct Candidate {
    coeffs: Vec<BigInt>,
    /// `R₁·coeffs`, so inner products are one dot product away.
    image: Vec<Rational>,
}

fn backtrack<'a>(
    target: &MatQ,
    columns: &[&'a [Candidate]],
    chosen: &mut Vec<&'a Candidate>,
    accept: &dyn Fn(&MatZ) -> Option<MatZ>,
) -> Option<MatZ> {
    let j = chosen.len();
    if j == columns.len() {
        let cols: Vec<Vec<BigInt>> = chosen.iter().map(|c| c.coeffs.clone()).collect();
        let w = MatZ::from_columns(&cols).expect("square");
        return accept(&w);
    }
    for cand in columns[j] {
        let fits = chosen.iter().enumerate().all(|(i, prev)| {
            let ip: Rational = cand
                .coeffs
                .iter()
                .zip(&prev.image)
                .map(|(a, b)| Rational::from_integer(a.clone()) * b)
                .sum();
            &ip == target.get(i, j)
        });
        if !fits {
            continue;
        }
        chosen.push(cand);
        if let Some(u) = backtrack(target, columns, chosen, accept) {
            return Some(u);
        }
        chosen.pop();
    }
    None
}

fn orientation_preserved(l1: &Lattice, l2: &Lattice, u: &MatZ) -> bool {
    let det_u = u.det();
    if !det_u.is_positive() {
        return false;
    }
    // det T = det B₂ / (det U · det B₁)
    let det_t = l2.basis().det() / (l1.basis().det() * Rational::from_integer(det_u));
    det_t.is_positive()
}

/// The ambient map `T = B₂·U⁻¹·B₁⁻¹` carrying `L₁` onto `L₂` for a witness
/// `U`. It is orthogonal whenever `Uᵀ·G₁·U = G₂`.
pub fn ambient_isometry(l1: &Lattice, l2: &Lattice, u: &MatZ) -> Result<MatQ> {
    check_dim(l1.dim(), l2.dim())?;
    check_dim(l1.dim(), u.dim())?;
    let u_inv = u.to_matq().inverse()?;
    if u_inv.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(&(l2.basis() * &u_inv) * l1.basis_inverse())
}
