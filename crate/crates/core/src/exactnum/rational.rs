use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{bareiss_det, common_denominator, format_rational, Ldl, MatZ, Rational};
use crate::error::{Error, Result};

/// Largest dimension for which [`MatQ::inverse`] uses the adjugate.
const ADJUGATE_MAX_DIM: usize = 6;

/// Dense square matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatQ {
    n: usize,
    entries: Vec<Rational>,
}

impl MatQ {
    /// Builds an `n×n` matrix from row-major entries.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(MatQ { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        MatQ::new(n, entries)
    }

    /// Convenience constructor from small integers. Panics if `rows` is not square.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        MatQ::from_rows(rows).expect("square integer matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n > 0, "dimension must be positive");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        MatQ { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        MatQ::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn zero(n: usize) -> Self {
        MatQ::from_fn(n, |_, _| Rational::zero())
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        MatQ::from_fn(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        MatQ::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MatQ {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.n, "vector length");
        self.rows()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, x)| {
            if k / self.n == k % self.n {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    /// The integer matrix with the same entries, or `NotIntegral`.
    pub fn to_matz(&self) -> Result<MatZ> {
        let entries = self
            .entries
            .iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::NotIntegral(x.clone()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        MatZ::new(self.n, entries)
    }

    /// Least common multiple of every entry's denominator.
    pub fn common_denominator(&self) -> BigInt {
        common_denominator(&self.entries)
    }

    /// Exact determinant. Each row is cleared of denominators separately and
    /// the resulting integer matrix goes through Bareiss elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut lifted = Vec::with_capacity(n * n);
        let mut scale = BigInt::one();
        for row in self.rows() {
            let d = common_denominator(row);
            lifted.extend(
                row.iter()
                    .map(|x| (x * Rational::from_integer(d.clone())).to_integer()),
            );
            scale *= d;
        }
        Rational::new(bareiss_det(lifted, n), scale)
    }

    /// Matrix with row `skip_row` and column `skip_col` removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Option<MatQ> {
        if self.n == 1 {
            return None;
        }
        let entries = (0..self.n)
            .filter(|&i| i != skip_row)
            .flat_map(|i| {
                (0..self.n)
                    .filter(move |&j| j != skip_col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        Some(MatQ {
            n: self.n - 1,
            entries,
        })
    }

    /// Transposed cofactor matrix, so that `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> MatQ {
        if self.n == 1 {
            return MatQ::identity(1);
        }
        MatQ::from_fn(self.n, |i, j| {
            let cofactor = self.minor(j, i).expect("n > 1").det();
            if (i + j) % 2 == 0 {
                cofactor
            } else {
                -cofactor
            }
        })
    }

    /// Exact inverse: `adj(M) / det(M)` (Cramer's rule) up to dimension 6,
    /// Gauss-Jordan elimination above.
    pub fn inverse(&self) -> Result<MatQ> {
        if self.n <= ADJUGATE_MAX_DIM {
            let det = self.det();
            if det.is_zero() {
                return Err(Error::SingularMatrix);
            }
            Ok(self.adjugate().scale(&det.recip()))
        } else {
            self.gauss_jordan_inverse()
        }
    }

    fn gauss_jordan_inverse(&self) -> Result<MatQ> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = MatQ::identity(n).entries;
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[r * n + k].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != k {
                for c in 0..n {
                    a.swap(k * n + c, pivot_row * n + c);
                    inv.swap(k * n + c, pivot_row * n + c);
                }
            }
            let p = a[k * n + k].recip();
            for c in 0..n {
                a[k * n + c] = &a[k * n + c] * &p;
                inv[k * n + c] = &inv[k * n + c] * &p;
            }
            for r in (0..n).filter(|&r| r != k) {
                let f = a[r * n + k].clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let da = &f * &a[k * n + c];
                    let di = &f * &inv[k * n + c];
                    a[r * n + c] -= da;
                    inv[r * n + c] -= di;
                }
            }
        }
        Ok(MatQ { n, entries: inv })
    }

    /// Exact `L·diag(D)·Lᵀ` factorization, see [`Ldl`].
    pub fn ldl(&self) -> Result<Ldl> {
        Ldl::factor(self)
    }

    /// `xᵀ · self · y`.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let my = self.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> Rational {
        self.entries
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Debug for MatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        write!(f, "MatQ{rows:?}")
    }
}

impl Mul for &MatQ {
    type Output = MatQ;

    fn mul(self, rhs: &MatQ) -> MatQ {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        let n = self.n;
        MatQ::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl Add for &MatQ {
    type Output = MatQ;

    fn add(self, rhs: &MatQ) -> MatQ {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        MatQ {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MatQ {
    type Output = MatQ;

    fn sub(self, rhs: &MatQ) -> MatQ {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        MatQ {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &MatQ {
    type Output = MatQ;

    fn neg(self) -> MatQ {
        MatQ {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn q(rows: &[&[Rational]]) -> MatQ {
        MatQ::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn det_examples() {
        assert_eq!(MatQ::identity(3).det(), int(1));
        assert_eq!(MatQ::from_i64(&[&[2, 0], &[0, 3]]).det(), int(6));
        assert_eq!(MatQ::from_i64(&[&[1, 1], &[0, 1]]).det(), int(1));
        assert_eq!(MatQ::from_i64(&[&[1, 2], &[2, 4]]).det(), int(0));
        let m = q(&[&[rat(1, 2), rat(1, 3)], &[rat(1, 4), rat(1, 5)]]);
        // 1/10 - 1/12
        assert_eq!(m.det(), rat(1, 60));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(MatQ::identity(2).inverse().unwrap(), MatQ::identity(2));
        assert_eq!(
            MatQ::from_i64(&[&[1, 1], &[0, 1]]).inverse().unwrap(),
            MatQ::from_i64(&[&[1, -1], &[0, 1]])
        );
        let d = q(&[&[int(2), int(0)], &[int(0), rat(1, 2)]]);
        let expected = q(&[&[rat(1, 2), int(0)], &[int(0), int(2)]]);
        assert_eq!(d.inverse().unwrap(), expected);
    }

    #[test]
    fn inverse_of_singular_fails() {
        let m = MatQ::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
        let mut big = MatQ::identity(8).entries().to_vec();
        big[63] = int(0);
        assert_eq!(
            MatQ::new(8, big).unwrap().inverse(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn gauss_jordan_agrees_with_adjugate() {
        let m = MatQ::from_fn(6, |i, j| {
            rat(((i * 7 + j * 3) % 5) as i64 - 2, (i + j + 1) as i64)
        });
        if !m.det().is_zero() {
            assert_eq!(m.gauss_jordan_inverse().unwrap(), m.inverse().unwrap());
        }
        let big = MatQ::from_fn(8, |i, j| {
            if i == j {
                int(2)
            } else if j == i + 1 {
                int(1)
            } else {
                int(0)
            }
        });
        assert!((&big * &big.inverse().unwrap()).is_identity());
    }

    #[test]
    fn new_rejects_bad_shapes() {
        assert!(MatQ::new(0, vec![]).is_err());
        assert!(MatQ::new(2, vec![int(1); 3]).is_err());
        assert!(MatQ::from_rows(vec![vec![int(1), int(2)], vec![int(3)]]).is_err());
    }

    #[test]
    fn to_matz_requires_integers() {
        let m = q(&[&[rat(1, 2), int(0)], &[int(0), int(1)]]);
        assert_eq!(m.to_matz(), Err(Error::NotIntegral(rat(1, 2))));
    }
}
