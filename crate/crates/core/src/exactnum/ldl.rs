use num_traits::{One, Signed, Zero};

use super::{MatQ, Rational};
use crate::error::{Error, Result};

/// Exact factorization `S = L · diag(D) · Lᵀ` of a symmetric rational matrix,
/// `L` unit lower triangular.
///
/// Elimination runs without pivoting. A zero pivot is tolerated only when the
/// rest of its column is already zero; otherwise the factorization does not
/// exist in this form and [`Error::PivotBreakdown`] is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ldl {
    pub l: MatQ,
    pub d: Vec<Rational>,
}

impl Ldl {
    pub fn factor(s: &MatQ) -> Result<Ldl> {
        if !s.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = s.dim();
        let mut l = vec![Rational::zero(); n * n];
        let mut d: Vec<Rational> = Vec::with_capacity(n);
        for j in 0..n {
            l[j * n + j] = Rational::one();
            let mut pivot = s.get(j, j).clone();
            for k in 0..j {
                pivot -= &l[j * n + k] * &l[j * n + k] * &d[k];
            }
            for i in j + 1..n {
                let mut r = s.get(i, j).clone();
                for k in 0..j {
                    r -= &l[i * n + k] * &l[j * n + k] * &d[k];
                }
                if pivot.is_zero() {
                    if !r.is_zero() {
                        return Err(Error::PivotBreakdown { index: j });
                    }
                } else {
                    l[i * n + j] = r / &pivot;
                }
            }
            d.push(pivot);
        }
        Ok(Ldl {
            l: MatQ::new(n, l)?,
            d,
        })
    }

    /// Factors `s` and insists on strictly positive pivots.
    pub fn positive_definite(s: &MatQ) -> Result<Ldl> {
        let f = match Ldl::factor(s) {
            Err(Error::PivotBreakdown { index }) => {
                return Err(Error::NotPositiveDefinite {
                    index,
                    pivot: Rational::zero(),
                })
            }
            other => other?,
        };
        if let Some((index, pivot)) = f.d.iter().enumerate().find(|(_, p)| !p.is_positive()) {
            return Err(Error::NotPositiveDefinite {
                index,
                pivot: pivot.clone(),
            });
        }
        Ok(f)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.d.iter().all(|p| p.is_positive())
    }

    /// `L · diag(D) · Lᵀ`.
    pub fn reconstruct(&self) -> MatQ {
        let ld = MatQ::from_fn(self.d.len(), |i, j| self.l.get(i, j) * &self.d[j]);
        &ld * &self.l.transpose()
    }
}
