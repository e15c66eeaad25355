use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{bareiss_det, MatQ, Rational};
use crate::error::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatZ {
    n: usize,
    entries: Vec<BigInt>,
}

impl MatZ {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n.max(1) * n.max(1),
                found: entries.len(),
            });
        }
        Ok(MatZ { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
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
        MatZ::new(n, entries)
    }

    /// Panics if `rows` is not square.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        MatZ::from_rows(rows).expect("square integer matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n > 0, "dimension must be positive");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        MatZ { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        MatZ::from_fn(n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Result<Self> {
        let n = columns.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        MatZ::new(
            n,
            (0..n * n).map(|k| columns[k % n][k / n].clone()).collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        MatZ::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn to_matq(&self) -> MatQ {
        MatQ::from_fn(self.n, |i, j| {
            Rational::from_integer(self.get(i, j).clone())
        })
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n, "vector length");
        self.rows()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(self.entries.clone(), self.n)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Exact inverse of a unimodular matrix, again integral.
    pub fn unimodular_inverse(&self) -> Result<MatZ> {
        if !self.is_unimodular() {
            return Err(Error::SingularMatrix);
        }
        self.to_matq().inverse()?.to_matz()
    }

    /// Column-style Hermite normal form.
    ///
    /// Returns `H` lower triangular with positive diagonal and
    /// `0 <= H[i][j] < H[i][i]` for `j < i`, such that `M = H·U` for a
    /// unimodular `U`. The columns of `H` span the same lattice as those of `M`.
    pub fn hnf(&self) -> Result<MatZ> {
        self.hnf_with_transform().map(|(h, _)| h)
    }

    /// Like [`MatZ::hnf`], also returning the unimodular `V` with `M·V = H`.
    pub fn hnf_with_transform(&self) -> Result<(MatZ, MatZ)> {
        let n = self.n;
        let mut a = self.clone();
        let mut v = MatZ::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let x = a.get(i, i).clone();
                let y = a.get(i, j).clone();
                let e = x.extended_gcd(&y);
                let (p, q) = (&x / &e.gcd, &y / &e.gcd);
                // [col_i, col_j] <- [col_i, col_j] · [[e.x, -q], [e.y, p]], det = 1
                a.combine_columns(i, j, &e.x, &e.y, &-&q, &p);
                v.combine_columns(i, j, &e.x, &e.y, &-&q, &p);
            }
            if a.get(i, i).is_zero() {
                return Err(Error::SingularMatrix);
            }
            if a.get(i, i).is_negative() {
                a.negate_column(i);
                v.negate_column(i);
            }
            let d = a.get(i, i).clone();
            for j in 0..i {
                let f = a.get(i, j).div_floor(&d);
                if !f.is_zero() {
                    a.sub_column_multiple(j, i, &f);
                    v.sub_column_multiple(j, i, &f);
                }
            }
        }
        Ok((a, v))
    }

    fn combine_columns(
        &mut self,
        i: usize,
        j: usize,
        ii: &BigInt,
        ji: &BigInt,
        ij: &BigInt,
        jj: &BigInt,
    ) {
        let n = self.n;
        for r in 0..n {
            let ci = self.entries[r * n + i].clone();
            let cj = self.entries[r * n + j].clone();
            self.entries[r * n + i] = &ci * ii + &cj * ji;
            self.entries[r * n + j] = &ci * ij + &cj * jj;
        }
    }

    fn negate_column(&mut self, j: usize) {
        let n = self.n;
        for r in 0..n {
            let x = std::mem::take(&mut self.entries[r * n + j]);
            self.entries[r * n + j] = -x;
        }
    }

    /// `col_target -= f · col_source`
    fn sub_column_multiple(&mut self, target: usize, source: usize, f: &BigInt) {
        let n = self.n;
        for r in 0..n {
            let s = &self.entries[r * n + source] * f;
            self.entries[r * n + target] -= s;
        }
    }

    pub fn is_hermite_normal_form(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let d = self.get(i, i);
            d.is_positive()
                && (i + 1..n).all(|j| self.get(i, j).is_zero())
                && (0..i).all(|j| !self.get(i, j).is_negative() && self.get(i, j) < d)
        })
    }
}

impl fmt::Debug for MatZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "MatZ{rows:?}")
    }
}

impl Mul for &MatZ {
    type Output = MatZ;

    fn mul(self, rhs: &MatZ) -> MatZ {
        assert_eq!(self.n, rhs.n, "matrix dimensions");
        let n = self.n;
        MatZ::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_examples() {
        assert_eq!(MatZ::identity(2).hnf().unwrap(), MatZ::identity(2));
        // col1 -= col0 turns [[1,1],[0,1]] into the identity
        assert_eq!(
            MatZ::from_i64(&[&[1, 1], &[0, 1]]).hnf().unwrap(),
            MatZ::identity(2)
        );
        let d = MatZ::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(d.hnf().unwrap(), d);
    }

    #[test]
    fn hnf_reduces_below_diagonal() {
        // columns (2,0),(0,3),(1,1)-style mixture; lattice spanned by (2,5),(0,3)
        let m = MatZ::from_i64(&[&[2, 2], &[5, 8]]);
        let h = m.hnf().unwrap();
        assert!(h.is_hermite_normal_form());
        assert_eq!(h, MatZ::from_i64(&[&[2, 0], &[2, 3]]));
    }

    #[test]
    fn hnf_transform_is_unimodular() {
        let m = MatZ::from_i64(&[&[4, -6, 1], &[2, 9, 0], &[-3, 5, 7]]);
        let (h, v) = m.hnf_with_transform().unwrap();
        assert!(v.is_unimodular());
        assert_eq!(&m * &v, h);
        assert!(h.is_hermite_normal_form());
        assert_eq!(h.det().abs(), m.det().abs());
    }

    #[test]
    fn hnf_handles_zero_leading_entry() {
        let m = MatZ::from_i64(&[&[0, -1], &[1, 0]]);
        let (h, v) = m.hnf_with_transform().unwrap();
        assert_eq!(h, MatZ::identity(2));
        assert_eq!(&m * &v, h);
    }

    #[test]
    fn hnf_of_singular_fails() {
        let m = MatZ::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.hnf(), Err(Error::SingularMatrix));
    }

    #[test]
    fn unimodular_inverse_is_integral() {
        let u = MatZ::from_i64(&[&[2, 3], &[1, 2]]);
        let inv = u.unimodular_inverse().unwrap();
        assert_eq!(inv, MatZ::from_i64(&[&[2, -3], &[-1, 2]]));
        assert!(MatZ::from_i64(&[&[2, 0], &[0, 1]])
            .unimodular_inverse()
            .is_err());
    }

    #[test]
    fn from_columns_transposes() {
        let c = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        assert_eq!(
            MatZ::from_columns(&c).unwrap(),
            MatZ::from_i64(&[&[1, 3], &[2, 4]])
        );
    }
}
