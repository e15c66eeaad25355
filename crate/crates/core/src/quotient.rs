//! The quotient torus `Rⁿ/L`: the quotient map, its group law, maps induced
//! by lattice-preserving linear maps, and volumes.
//!
//! A point of `Rⁿ/L` is stored by its fractional coordinates relative to the
//! lattice basis, so each class has exactly one representative in the
//! half-open cell `B·[0,1)ⁿ`.

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{fract, to_f64, MatQ, MatZ, Rational};
use crate::lattice::Lattice;

/// A point of `Rⁿ/L`.
#[derive(Clone, Debug)]
pub struct TorusPoint {
    lattice: Lattice,
    coords: Vec<Rational>,
}

impl TorusPoint {
    /// The image of the ambient vector `x` under the quotient map.
    pub fn reduce(lattice: &Lattice, x: &[Rational]) -> Result<TorusPoint> {
        let c = lattice.coordinates(x)?;
        Ok(TorusPoint {
            lattice: lattice.clone(),
            coords: c.iter().map(fract).collect(),
        })
    }

    /// The point with the given basis coordinates, taken mod 1.
    pub fn from_coords(lattice: &Lattice, coords: &[Rational]) -> Result<TorusPoint> {
        check_dim(lattice.dim(), coords.len())?;
        Ok(TorusPoint {
            lattice: lattice.clone(),
            coords: coords.iter().map(fract).collect(),
        })
    }

    pub fn zero(lattice: &Lattice) -> TorusPoint {
        TorusPoint {
            lattice: lattice.clone(),
            coords: vec![Rational::zero(); lattice.dim()],
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The canonical ambient representative `B·coords`.
    pub fn representative(&self) -> Vec<Rational> {
        self.lattice.basis().mul_vec(&self.coords)
    }

    /// The same point written against another basis of the same lattice.
    pub fn rebase(&self, lattice: &Lattice) -> Result<TorusPoint> {
        if !self.lattice.equals(lattice)? {
            return Err(Error::LatticeMismatch);
        }
        TorusPoint::reduce(lattice, &self.representative())
    }

    pub fn add(&self, other: &TorusPoint) -> Result<TorusPoint> {
        let other = other.rebase(&self.lattice)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| fract(&(a + b)))
            .collect();
        Ok(TorusPoint {
            lattice: self.lattice.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> TorusPoint {
        TorusPoint {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| fract(&-c)).collect(),
        }
    }
}

/// Equal iff the lattices agree and the classes coincide, whatever bases the
/// two points were written against.
impl PartialEq for TorusPoint {
    fn eq(&self, other: &TorusPoint) -> bool {
        match other.rebase(&self.lattice) {
            Ok(q) => q.coords == self.coords,
            Err(_) => false,
        }
    }
}

impl Eq for TorusPoint {}

/// `p + q` on the torus; fails with `LatticeMismatch` for different lattices.
pub fn torus_add(p: &TorusPoint, q: &TorusPoint) -> Result<TorusPoint> {
    p.add(q)
}

/// The map `Rⁿ/L₁ → Rⁿ/L₂` induced by an invertible `A` with `A(L₁) = L₂`.
#[derive(Clone, Debug)]
pub struct InducedMap {
    matrix: MatQ,
    source: Lattice,
    target: Lattice,
    transfer: MatZ,
}

impl InducedMap {
    /// Validates that `B₂⁻¹·A·B₁` is an integer matrix of determinant ±1.
    pub fn new(matrix: MatQ, source: &Lattice, target: &Lattice) -> Result<InducedMap> {
        check_dim(source.dim(), matrix.dim())?;
        check_dim(source.dim(), target.dim())?;
        if matrix.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let t = &(target.basis_inverse() * &matrix) * source.basis();
        if !t.is_integral() || !t.det().abs().is_one() {
            return Err(Error::NotLatticePreserving);
        }
        Ok(InducedMap {
            matrix,
            source: source.clone(),
            target: target.clone(),
            transfer: t.to_matz()?,
        })
    }

    pub fn matrix(&self) -> &MatQ {
        &self.matrix
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    /// `B₂⁻¹·A·B₁`: the map in basis coordinates, a unimodular integer matrix.
    pub fn transfer(&self) -> &MatZ {
        &self.transfer
    }

    /// `Â(ρ₁(x)) = ρ₂(A·x)`. Works on coordinates: `frac(U·c)` with `U`
    /// the transfer matrix, which does not depend on the representative.
    pub fn apply(&self, p: &TorusPoint) -> Result<TorusPoint> {
        let p = p.rebase(&self.source)?;
        let u = self.transfer.to_matq();
        TorusPoint::from_coords(&self.target, &u.mul_vec(p.coords()))
    }

    /// `self ∘ inner`, defined when `inner` lands on this map's source.
    pub fn compose(&self, inner: &InducedMap) -> Result<InducedMap> {
        if !inner.target.equals(&self.source)? {
            return Err(Error::LatticeMismatch);
        }
        InducedMap::new(&self.matrix * &inner.matrix, &inner.source, &self.target)
    }

    /// `|det A|`, the factor by which `Â` multiplies volumes.
    pub fn volume_scale(&self) -> Rational {
        self.matrix.det().abs()
    }

    /// Volume of `Â(E)` where `E` is the parallelepiped spanned by
    /// `B₁·edge_coords` (edge columns in source basis coordinates, every
    /// entry in `[0, 1)` so that `E` sits inside one cell).
    pub fn parallelepiped_image_volume(&self, edge_coords: &MatQ) -> Result<Rational> {
        let source_edges = parallelepiped_edges(&self.source, edge_coords)?;
        Ok((&self.matrix * &source_edges).det().abs())
    }
}

fn parallelepiped_edges(lattice: &Lattice, edge_coords: &MatQ) -> Result<MatQ> {
    check_dim(lattice.dim(), edge_coords.dim())?;
    if let Some(bad) = edge_coords
        .entries()
        .iter()
        .find(|x| x.is_negative() || **x >= Rational::one())
    {
        return Err(Error::EdgeOutsideCell(bad.clone()));
    }
    if edge_coords.det().is_zero() {
        return Err(Error::DegenerateParallelepiped);
    }
    Ok(lattice.basis() * edge_coords)
}

/// Volume of the parallelepiped spanned by `B·edge_coords` inside `Rⁿ/L`.
pub fn parallelepiped_volume(lattice: &Lattice, edge_coords: &MatQ) -> Result<Rational> {
    Ok(parallelepiped_edges(lattice, edge_coords)?.det().abs())
}

/// `t ↦ exp(it)`, the identification `R/2πZ ≅ T`, as `(cos t, sin t)`.
pub fn circle_map(t: f64) -> Result<(f64, f64)> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let (s, c) = t.sin_cos();
    Ok((c, s))
}

/// `|c|ⁿ · covol(L)` for a real scale `c`, e.g. `c = 2π`.
pub fn volume_of_scaled(lattice: &Lattice, c: f64) -> Result<f64> {
    if !c.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    if c == 0.0 {
        return Err(Error::ZeroScale);
    }
    Ok(c.abs().powi(lattice.dim() as i32) * to_f64(&lattice.covolume()))
}
