//! Exact computation with lattices in `Rⁿ` and `Cⁿ`, their quotient tori,
//! and the coset spaces that parametrize them.
//!
//! The exact layer works over arbitrary-precision rationals throughout.
//! Floating point appears only in explicitly metric outputs: geodesic
//! lengths, angles, the circle map, volumes under irrational scaling, and
//! the real square-root factor of a positive-definite form.

pub mod complex;
pub mod error;
pub mod exactnum;
pub mod flat;
pub mod lattice;
pub mod moduli;
pub mod quotient;
pub mod sample;
pub mod wire;

pub use complex::{ComplexMatrix, ComplexRational, ComplexStructure};
pub use error::{Error, Result};
pub use exactnum::{format_rational, parse_rational, Ldl, MatQ, MatZ, Rational};
pub use flat::{GramForm, LatticeVector, ShortestVectors};
pub use lattice::Lattice;
pub use moduli::{PosDefForm, UnitCovolumeForm};
pub use quotient::{InducedMap, TorusPoint};
