//! Flat metric geometry of `Rⁿ/L`.
//!
//! All metric information about the torus is carried by the Gram form
//! `G = BᵀB`. Each nonzero lattice vector `v` is the homotopy class of a
//! closed geodesic of length `|v|`; lengths are reported exactly as squared
//! lengths and as floats.

mod enumerate;
mod isometry;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use enumerate::{enumerate_short, lll_reduce, normalize_sign};
pub use isometry::{ambient_isometry, isometric_mod_rotation, MAX_ISOMETRY_DIM};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{to_f64, Ldl, MatQ, Rational};
use crate::lattice::Lattice;

/// A symmetric positive-definite rational form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramForm {
    matrix: MatQ,
}

impl GramForm {
    /// Validates symmetry and positive definiteness (all LDL pivots > 0).
    pub fn new(matrix: MatQ) -> Result<GramForm> {
        Ldl::positive_definite(&matrix)?;
        Ok(GramForm { matrix })
    }

    pub fn matrix(&self) -> &MatQ {
        &self.matrix
    }

    pub fn into_matrix(self) -> MatQ {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn det(&self) -> Rational {
        self.matrix.det()
    }

    pub fn ldl(&self) -> Ldl {
        Ldl::positive_definite(&self.matrix).expect("validated on construction")
    }
}

/// `BᵀB` for the lattice basis `B`.
pub fn gram(lattice: &Lattice) -> GramForm {
    let b = lattice.basis();
    GramForm {
        matrix: &b.transpose() * b,
    }
}

/// The lattice vector `B·coeffs`.
#[derive(Clone, Debug)]
pub struct LatticeVector {
    lattice: Lattice,
    coeffs: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(lattice: &Lattice, coeffs: Vec<BigInt>) -> Result<LatticeVector> {
        check_dim(lattice.dim(), coeffs.len())?;
        Ok(LatticeVector {
            lattice: lattice.clone(),
            coeffs,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn ambient(&self) -> Vec<Rational> {
        self.lattice
            .ambient(&self.coeffs)
            .expect("dimension checked")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `coeffsᵀ·G·coeffs`, the squared length of the closed geodesic.
    pub fn squared_length(&self) -> Rational {
        let x = self.ambient();
        x.iter().map(|a| a * a).sum()
    }

    pub fn length(&self) -> f64 {
        to_f64(&self.squared_length()).sqrt()
    }
}

/// The shortest nonzero vectors of a lattice and their common squared length.
#[derive(Clone, Debug)]
pub struct ShortestVectors {
    pub squared_length: Rational,
    /// One vector per `±` pair, last nonzero coefficient positive, sorted
    /// lexicographically by coefficients.
    pub vectors: Vec<LatticeVector>,
}

impl ShortestVectors {
    pub fn length(&self) -> f64 {
        to_f64(&self.squared_length).sqrt()
    }
}

/// Every nonzero lattice vector with squared length `<= bound`, one per `±`
/// pair, as coefficient vectors in the lattice's own basis.
pub fn short_vectors(lattice: &Lattice, bound: &Rational) -> Vec<(Vec<BigInt>, Rational)> {
    let (reduced, v) = lll_reduce(gram(lattice).matrix());
    let mut out = Vec::new();
    enumerate_short(&reduced, bound, |x, q| {
        let mut c = v.mul_vec(x);
        normalize_sign(&mut c);
        out.push((c, q.clone()));
    });
    out.sort();
    out
}

/// All minimal nonzero vectors, found by exact enumeration inside the
/// ellipsoid bounded by the shortest vector of an LLL-reduced basis.
pub fn shortest_vectors(lattice: &Lattice) -> ShortestVectors {
    let (reduced, _) = lll_reduce(gram(lattice).matrix());
    let bound = (0..reduced.dim())
        .map(|i| reduced.get(i, i).clone())
        .min()
        .expect("dimension >= 1");
    let found = short_vectors(lattice, &bound);
    let min = found
        .iter()
        .map(|(_, q)| q.clone())
        .min()
        .expect("the reduced basis vector itself is within the bound");
    let vectors = found
        .into_iter()
        .filter(|(_, q)| *q == min)
        .map(|(c, _)| LatticeVector {
            lattice: lattice.clone(),
            coeffs: c,
        })
        .collect();
    ShortestVectors {
        squared_length: min,
        vectors,
    }
}

/// Squared lengths `<= bound` of closed geodesics, ascending, each with the
/// number of `±` pairs of lattice vectors realizing it.
pub fn geodesic_spectrum(lattice: &Lattice, bound: &Rational) -> Result<Vec<(Rational, usize)>> {
    if !bound.is_positive() {
        return Err(Error::NonPositiveBound);
    }
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for (_, q) in short_vectors(lattice, bound) {
        *counts.entry(q).or_default() += 1;
    }
    Ok(counts.into_iter().collect())
}

/// Angle between two closed geodesics through the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct Angle {
    pub radians: f64,
    /// `sign(v·w) · (v·w)² / (|v|²|w|²)`, exact.
    pub signed_cos_squared: Rational,
}

pub fn angle(v: &LatticeVector, w: &LatticeVector) -> Result<Angle> {
    if !v.lattice.equals(&w.lattice)? {
        return Err(Error::LatticeMismatch);
    }
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (a, b) = (v.ambient(), w.ambient());
    let dot: Rational = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let vv = v.squared_length();
    let ww = w.squared_length();
    let norms = &vv * &ww;
    let signed_cos_squared = if dot.is_negative() {
        -(&dot * &dot) / &norms
    } else {
        &dot * &dot / &norms
    };
    // |v|²|w|² - (v·w)² is exact, so atan2 stays accurate near 0 and π
    let cross = to_f64(&(&norms - &dot * &dot)).max(0.0).sqrt();
    Ok(Angle {
        radians: cross.atan2(to_f64(&dot)),
        signed_cos_squared,
    })
}

/// `(λ₁²/4, λ₁/2)`: the largest radius at which the quotient map is
/// injective on open balls.
pub fn injectivity_radius(lattice: &Lattice) -> (Rational, f64) {
    let shortest = shortest_vectors(lattice);
    let r2 = shortest.squared_length / Rational::from_integer(4.into());
    let r = to_f64(&r2).sqrt();
    (r2, r)
}

/// `TᵀT = I`, exactly.
pub fn is_orthogonal(t: &MatQ) -> bool {
    (&t.transpose() * t).is_identity()
}
