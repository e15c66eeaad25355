//! JSON document shapes for the interchange formats.
//!
//! Rationals travel as strings `"p/q"` (or `"p"`), matrices as row-major
//! arrays of those strings, complex entries as `["re", "im"]` pairs. A
//! lattice document lists its basis with columns as generators.

use num_bigint::BigInt;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexMatrix;
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, MatQ, MatZ, Rational};
use crate::lattice::Lattice;
use crate::quotient::TorusPoint;

pub type MatrixDoc = Vec<Vec<String>>;
pub type VectorDoc = Vec<String>;
pub type ComplexMatrixDoc = Vec<Vec<[String; 2]>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub n: usize,
    pub basis: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusPointDoc {
    pub lattice: LatticeDoc,
    pub coords: VectorDoc,
}

/// Parses a rational, prefixing the error message with where it came from.
fn parse_at(text: &str, at: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).map_err(|e| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset,
            message: format!("{} ({:?}): {message}", at(), text),
        },
        other => other,
    })
}

pub fn vector_from_doc(doc: &[String]) -> Result<Vec<Rational>> {
    doc.iter()
        .enumerate()
        .map(|(i, s)| parse_at(s, || format!("entry {i}")))
        .collect()
}

pub fn vector_to_doc(v: &[Rational]) -> VectorDoc {
    v.iter().map(format_rational).collect()
}

/// Integer vectors share the rational string format but must have unit denominators.
pub fn int_vector_from_doc(doc: &[String]) -> Result<Vec<BigInt>> {
    vector_from_doc(doc)?
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Schema(format!(
                    "expected an integer, found {}",
                    format_rational(&x)
                )))
            }
        })
        .collect()
}

pub fn int_vector_to_doc(v: &[BigInt]) -> VectorDoc {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<MatQ> {
    let n = doc.len();
    if n == 0 {
        return Err(Error::Schema("matrix has no rows".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in doc.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Schema(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(j, s)| parse_at(s, || format!("entry [{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    MatQ::from_rows(rows)
}

pub fn matrix_to_doc(m: &MatQ) -> MatrixDoc {
    m.rows().map(vector_to_doc).collect()
}

pub fn int_matrix_to_doc(m: &MatZ) -> MatrixDoc {
    m.rows().map(int_vector_to_doc).collect()
}

pub fn complex_matrix_from_doc(doc: &ComplexMatrixDoc) -> Result<ComplexMatrix> {
    let n = doc.len();
    if n == 0 {
        return Err(Error::Schema("matrix has no rows".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in doc.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Schema(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, [re, im]) in row.iter().enumerate() {
            entries.push(Complex::new(
                parse_at(re, || format!("entry [{i}][{j}] real part"))?,
                parse_at(im, || format!("entry [{i}][{j}] imaginary part"))?,
            ));
        }
    }
    ComplexMatrix::new(n, entries)
}

pub fn complex_matrix_to_doc(m: &ComplexMatrix) -> ComplexMatrixDoc {
    let n = m.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let z = m.get(i, j);
                    [format_rational(&z.re), format_rational(&z.im)]
                })
                .collect()
        })
        .collect()
}

impl LatticeDoc {
    pub fn to_lattice(&self) -> Result<Lattice> {
        let basis = matrix_from_doc(&self.basis)?;
        if basis.dim() != self.n {
            return Err(Error::Schema(format!(
                "declared n = {} but basis is {}×{}",
                self.n,
                basis.dim(),
                basis.dim()
            )));
        }
        Lattice::from_basis(basis)
    }

    pub fn from_lattice(l: &Lattice) -> LatticeDoc {
        LatticeDoc {
            n: l.dim(),
            basis: matrix_to_doc(l.basis()),
        }
    }
}

impl TorusPointDoc {
    /// Coordinates must already lie in `[0, 1)`.
    pub fn to_point(&self) -> Result<TorusPoint> {
        let lattice = self.lattice.to_lattice()?;
        let coords = vector_from_doc(&self.coords)?;
        if coords.len() != lattice.dim() {
            return Err(Error::Schema(format!(
                "{} coordinates for a lattice of dimension {}",
                coords.len(),
                lattice.dim()
            )));
        }
        let p = TorusPoint::from_coords(&lattice, &coords)?;
        if p.coords() != coords.as_slice() {
            return Err(Error::Schema("coordinates must lie in [0, 1)".into()));
        }
        Ok(p)
    }

    pub fn from_point(p: &TorusPoint) -> TorusPointDoc {
        TorusPointDoc {
            lattice: LatticeDoc::from_lattice(p.lattice()),
            coords: vector_to_doc(p.coords()),
        }
    }
}
