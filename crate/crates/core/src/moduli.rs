//! Coset spaces of linear groups and the spaces of lattices they model.
//!
//! `O\GL` is identified with positive-definite symmetric forms through
//! `T ↦ TᵀT`, and `SO\SL` with the determinant-one forms `M(Rⁿ)`. The
//! integer matrices of determinant one, `Σ(Rⁿ)`, act on the right as basis
//! changes; `SO\SL/Σ` is decided by searching for an isometry of Gram forms.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{to_f64, Ldl, MatQ, MatZ, Rational};
use crate::flat::{gram, is_orthogonal, isometric_mod_rotation, GramForm};
use crate::lattice::Lattice;

/// A symmetric positive-definite form; the same object as a Gram form.
pub type PosDefForm = GramForm;

/// `T ↦ TᵀT`.
pub fn gram_map(t: &MatQ) -> Result<PosDefForm> {
    if t.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    GramForm::new(&t.transpose() * t)
}

/// Left `O`-coset test through the Gram image: `T₁ᵀT₁ = T₂ᵀT₂`.
pub fn same_coset_by_gram(t1: &MatQ, t2: &MatQ) -> Result<bool> {
    Ok(gram_map(t1)? == gram_map(t2)?)
}

/// Left `O`-coset test through the quotient: `T₂·T₁⁻¹` is orthogonal.
pub fn same_coset_by_quotient(t1: &MatQ, t2: &MatQ) -> Result<bool> {
    let inv = t1.inverse()?;
    if t2.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(is_orthogonal(&(t2 * &inv)))
}

/// Whether `T₂ = R·T₁` for some orthogonal `R`. Both characterizations are
/// evaluated; they must agree.
pub fn same_left_coset(t1: &MatQ, t2: &MatQ) -> Result<bool> {
    let by_gram = same_coset_by_gram(t1, t2)?;
    let by_quotient = same_coset_by_quotient(t1, t2)?;
    assert_eq!(
        by_gram, by_quotient,
        "Gram and quotient coset tests disagree for {t1:?}, {t2:?}"
    );
    Ok(by_gram)
}

/// An upper-triangular real `T` with `TᵀT ≈ S`, namely `√D·Lᵀ` from the
/// exact factorization `S = L·D·Lᵀ`. Rows of the returned matrix are rows of `T`.
pub fn posdef_witness(s: &MatQ) -> Result<Vec<Vec<f64>>> {
    let ldl = Ldl::positive_definite(s)?;
    let n = s.dim();
    let roots: Vec<f64> = ldl.d.iter().map(|d| to_f64(d).sqrt()).collect();
    Ok((0..n)
        .map(|i| (0..n).map(|j| roots[i] * to_f64(ldl.l.get(j, i))).collect())
        .collect())
}

/// `max |(TᵀT - S)ᵢⱼ|` for a floating `T`.
pub fn witness_residual(t: &[Vec<f64>], s: &MatQ) -> f64 {
    let n = s.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let v: f64 = (0..n).map(|k| t[k][i] * t[k][j]).sum();
            worst = worst.max((v - to_f64(s.get(i, j))).abs());
        }
    }
    worst
}

/// Membership in `M(Rⁿ)`: symmetric, positive definite, determinant one.
pub fn in_m(s: &MatQ) -> bool {
    Ldl::positive_definite(s).is_ok() && s.det().is_one()
}

/// Membership in `Σ(Rⁿ)`: integer entries and determinant one.
pub fn in_sigma(u: &MatQ) -> bool {
    u.is_integral() && u.det().is_one()
}

/// The sign of `det A`.
pub fn orientation(a: &MatQ) -> Result<i8> {
    let d = a.det();
    if d.is_zero() {
        Err(Error::SingularMatrix)
    } else if d.is_positive() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// The Gram form of a lattice together with the factor `s = covol^(-2/n)`
/// that rescales it to the Gram form of the unit-covolume lattice.
#[derive(Clone, Debug)]
pub struct UnitCovolumeForm {
    pub gram: PosDefForm,
    pub scale: f64,
    /// `s` when it is rational, i.e. when the covolume is an `n`-th power.
    pub exact_scale: Option<Rational>,
}

impl UnitCovolumeForm {
    /// `s·G` exactly, when `s` is rational.
    pub fn normalized_exact(&self) -> Option<MatQ> {
        self.exact_scale
            .as_ref()
            .map(|s| self.gram.matrix().scale(s))
    }

    pub fn normalized_float(&self) -> Vec<Vec<f64>> {
        self.gram
            .matrix()
            .rows()
            .map(|r| r.iter().map(|x| self.scale * to_f64(x)).collect())
            .collect()
    }
}

pub fn unit_covolume_form(lattice: &Lattice) -> UnitCovolumeForm {
    let n = lattice.dim();
    let covol = lattice.covolume();
    let exact_scale = rational_root(&covol, n).map(|r| (&r * &r).recip());
    let scale = match &exact_scale {
        Some(s) => to_f64(s),
        None => to_f64(&covol).powf(-2.0 / n as f64),
    };
    UnitCovolumeForm {
        gram: gram(lattice),
        scale,
        exact_scale,
    }
}

/// The positive rational `r` with `rⁿ = x`, if one exists.
fn rational_root(x: &Rational, n: usize) -> Option<Rational> {
    let n32 = n.to_u32()?;
    let root = |m: &BigInt| -> Option<BigInt> {
        let r = m.nth_root(n32);
        (num_traits::pow(r.clone(), n) == *m).then_some(r)
    };
    if !x.is_positive() {
        return None;
    }
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

/// Decides `SO\SL/Σ` (or `O\GL/GL(Z)` without `oriented`) equivalence of
/// two equal-covolume lattices, returning the unimodular witness `U` with
/// `Uᵀ·G₁·U = G₂`.
pub fn double_coset_equivalent(l1: &Lattice, l2: &Lattice, oriented: bool) -> Result<Option<MatZ>> {
    let (c1, c2) = (l1.covolume(), l2.covolume());
    if l1.dim() == l2.dim() && c1 != c2 {
        return Err(Error::CovolumeMismatch(Box::new(c1), Box::new(c2)));
    }
    isometric_mod_rotation(l1, l2, oriented)
}
