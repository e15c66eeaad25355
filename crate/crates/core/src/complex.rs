//! Lattices in `Cⁿ` through the identification `Cⁿ ≅ R²ⁿ`.
//!
//! Coordinates are interleaved as `(re₁, im₁, re₂, im₂, ...)`, so a complex
//! entry `a + bi` realifies to the 2×2 block `[[a, -b], [b, a]]` and the
//! complex structure `J` is block diagonal.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{MatQ, MatZ, Rational};
use crate::flat::is_orthogonal;
use crate::lattice::Lattice;
use crate::quotient::InducedMap;

/// `a + bi` with rational `a`, `b`.
pub type ComplexRational = Complex<Rational>;

/// Multiplication by `i` on `R²ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructure {
    n: usize,
    j: MatZ,
}

impl ComplexStructure {
    pub fn new(n: usize) -> ComplexStructure {
        let j = MatZ::from_fn(2 * n, |r, c| {
            if r / 2 != c / 2 {
                BigInt::zero()
            } else {
                match (r % 2, c % 2) {
                    (0, 1) => -BigInt::one(),
                    (1, 0) => BigInt::one(),
                    _ => BigInt::zero(),
                }
            }
        });
        ComplexStructure { n, j }
    }

    pub fn complex_dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &MatZ {
        &self.j
    }

    pub fn squares_to_minus_identity(&self) -> bool {
        let sq = &self.j * &self.j;
        sq == MatZ::from_fn(2 * self.n, |r, c| {
            if r == c {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }
}

/// Dense `n×n` complex-rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<ComplexRational>,
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<ComplexRational>) -> Result<ComplexMatrix> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n.max(1) * n.max(1),
                found: entries.len(),
            });
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ComplexRational) -> ComplexMatrix {
        assert!(n > 0, "dimension must be positive");
        ComplexMatrix {
            n,
            entries: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn identity(n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, |i, j| {
            if i == j {
                ComplexRational::one()
            } else {
                ComplexRational::zero()
            }
        })
    }

    /// `z·I`.
    pub fn scalar(n: usize, z: ComplexRational) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, |i, j| {
            if i == j {
                z.clone()
            } else {
                ComplexRational::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexRational {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[ComplexRational] {
        &self.entries
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        let n = self.n;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).fold(ComplexRational::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        ComplexMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Complex determinant by exact Gaussian elimination over `Q(i)`.
    pub fn det(&self) -> ComplexRational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = ComplexRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return ComplexRational::zero();
            };
            if p != k {
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                det = -det;
            }
            let pivot = a[k * n + k].clone();
            det *= pivot.clone();
            for r in k + 1..n {
                let f = a[r * n + k].clone() / pivot.clone();
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let s = f.clone() * a[k * n + c].clone();
                    a[r * n + c] = a[r * n + c].clone() - s;
                }
            }
        }
        det
    }
}

/// The `2n×2n` real matrix of a complex-linear map, acting on interleaved
/// coordinates.
pub fn realify(m: &ComplexMatrix) -> MatQ {
    MatQ::from_fn(2 * m.n, |r, c| {
        let z = m.get(r / 2, c / 2);
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => z.re.clone(),
            (0, 1) => -z.im.clone(),
            _ => z.im.clone(),
        }
    })
}

fn complex_dim_of(t: &MatQ, n: usize) -> Result<()> {
    if t.dim() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: t.dim(),
        });
    }
    Ok(())
}

/// `T·J = J·T`.
pub fn is_complex_linear(t: &MatQ, n: usize) -> Result<bool> {
    complex_dim_of(t, n)?;
    let j = ComplexStructure::new(n).j.to_matq();
    Ok(t * &j == &j * t)
}

/// Complex-linear and orthogonal under `Cⁿ ≅ R²ⁿ`.
pub fn is_unitary(t: &MatQ, n: usize) -> Result<bool> {
    Ok(is_complex_linear(t, n)? && is_orthogonal(t))
}

/// `(Z[i])ⁿ`, which realifies to `Z²ⁿ`.
pub fn gaussian_lattice(n: usize) -> Lattice {
    Lattice::standard(2 * n)
}

/// Checks that the realified `A` carries `L₁` onto `L₂` and returns the
/// induced map of quotients. Complex-linearity holds by construction.
pub fn complex_map_check(a: &ComplexMatrix, l1: &Lattice, l2: &Lattice) -> Result<InducedMap> {
    let real = realify(a);
    if real.dim() != l1.dim() {
        return Err(Error::DimensionMismatch {
            expected: real.dim(),
            found: l1.dim(),
        });
    }
    InducedMap::new(real, l1, l2)
}
