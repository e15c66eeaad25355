//! Full-rank lattices `L = B·Zⁿ` given by a rational basis.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{MatQ, MatZ, Rational};

/// The lattice generated by the columns of an invertible rational matrix.
///
/// The basis is kept exactly as supplied; `==` compares the lattices as
/// subgroups of `Qⁿ`, not the bases.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: MatQ,
    inverse: MatQ,
}

impl Lattice {
    pub fn from_basis(basis: MatQ) -> Result<Lattice> {
        let inverse = basis.inverse().map_err(|_| Error::SingularBasis)?;
        Ok(Lattice { basis, inverse })
    }

    /// `Zⁿ` with the identity basis.
    pub fn standard(n: usize) -> Lattice {
        Lattice {
            basis: MatQ::identity(n),
            inverse: MatQ::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &MatQ {
        &self.basis
    }

    pub fn basis_inverse(&self) -> &MatQ {
        &self.inverse
    }

    /// The lattice `c·L`.
    pub fn scale(&self, c: &Rational) -> Result<Lattice> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Lattice {
            basis: self.basis.scale(c),
            inverse: self.inverse.scale(&c.recip()),
        })
    }

    /// Coordinates of `x` relative to the basis, `B⁻¹·x`.
    pub fn coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.dim(), x.len())?;
        Ok(self.inverse.mul_vec(x))
    }

    /// The ambient vector `B·c` for integer coefficients `c`.
    pub fn ambient(&self, coeffs: &[BigInt]) -> Result<Vec<Rational>> {
        check_dim(self.dim(), coeffs.len())?;
        let c: Vec<Rational> = coeffs.iter().cloned().map(Rational::from_integer).collect();
        Ok(self.basis.mul_vec(&c))
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(x)?.iter().all(|c| c.is_integer()))
    }

    /// `B_self⁻¹ · B_other`, the matrix expressing the other basis in this one.
    pub fn change_of_basis(&self, other: &Lattice) -> Result<MatQ> {
        check_dim(self.dim(), other.dim())?;
        Ok(&self.inverse * &other.basis)
    }

    /// True iff both bases generate the same subgroup, i.e. the change of
    /// basis is integral with determinant ±1.
    pub fn equals(&self, other: &Lattice) -> Result<bool> {
        let u = self.change_of_basis(other)?;
        Ok(u.is_integral() && u.det().abs().is_one())
    }

    /// The unique unimodular `U` with `B_self · U = B_other`.
    pub fn change_of_basis_witness(&self, other: &Lattice) -> Result<MatZ> {
        let u = self.change_of_basis(other)?;
        if !u.is_integral() || !u.det().abs().is_one() {
            return Err(Error::NotEqualLattices);
        }
        u.to_matz()
    }

    /// The index `[sup : self]`, failing unless `self ⊆ sup`.
    pub fn sublattice_index(&self, sup: &Lattice) -> Result<BigInt> {
        let u = sup.change_of_basis(self)?;
        if !u.is_integral() {
            return Err(Error::NotASublattice);
        }
        Ok(u.det().abs().to_integer())
    }

    /// `|det B|`, the volume of `Rⁿ/L`.
    pub fn covolume(&self) -> Rational {
        self.basis.det().abs()
    }

    /// Canonical basis: the column Hermite normal form of the integer lift,
    /// scaled back down. Two lattices are equal iff their Hermite bases are.
    pub fn hermite_basis(&self) -> MatQ {
        let d = self.basis.common_denominator();
        let lifted = self
            .basis
            .scale(&Rational::from_integer(d.clone()))
            .to_matz()
            .expect("lift clears denominators");
        let h = lifted.hnf().expect("basis is nonsingular");
        h.to_matq().scale(&Rational::new(BigInt::one(), d))
    }

    /// The sign of `det B`: the orientation carried by this basis.
    pub fn basis_orientation(&self) -> i8 {
        if self.basis.det().is_positive() {
            1
        } else {
            -1
        }
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Lattice) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for Lattice {}
