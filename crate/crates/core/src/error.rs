use num_bigint::BigInt;

use crate::exactnum::Rational;

/// Every failure the library can report.
///
/// Variant names double as the `kind` string the CLI emits, see [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("basis matrix is singular")]
    SingularBasis,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero pivot at index {index} with a nonzero residual row")]
    PivotBreakdown { index: usize },
    #[error("form is not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: Rational },
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} exceeds the supported maximum of {1}")]
    DimensionTooLarge(usize, usize),
    #[error("lattice is not a sublattice of the reference lattice")]
    NotASublattice,
    #[error("lattices are not equal")]
    NotEqualLattices,
    #[error("points live on different lattices")]
    LatticeMismatch,
    #[error("linear map does not carry the source lattice onto the target lattice")]
    NotLatticePreserving,
    #[error("input is not finite")]
    NonFiniteInput,
    #[error("parallelepiped edges are linearly dependent")]
    DegenerateParallelepiped,
    #[error("edge coordinate {0} lies outside [0, 1)")]
    EdgeOutsideCell(Rational),
    #[error("bound must be positive")]
    NonPositiveBound,
    #[error("vector is zero")]
    ZeroVector,
    #[error("covolumes differ: {0} vs {1}")]
    CovolumeMismatch(Box<Rational>, Box<Rational>),
    #[error("entry {0} is not an integer")]
    NotIntegral(Rational),
    #[error("coefficient {0} does not fit the requested range")]
    Overflow(BigInt),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularMatrix => "SingularMatrix",
            Error::SingularBasis => "SingularBasis",
            Error::NotSymmetric => "NotSymmetric",
            Error::PivotBreakdown { .. } => "PivotBreakdown",
            Error::NotPositiveDefinite { .. } => "NotPositiveDefinite",
            Error::ZeroScale => "ZeroScale",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DimensionTooLarge(..) => "DimensionTooLarge",
            Error::NotASublattice => "NotASublattice",
            Error::NotEqualLattices => "NotEqualLattices",
            Error::LatticeMismatch => "LatticeMismatch",
            Error::NotLatticePreserving => "NotLatticePreserving",
            Error::NonFiniteInput => "NonFiniteInput",
            Error::DegenerateParallelepiped => "DegenerateParallelepiped",
            Error::EdgeOutsideCell(_) => "EdgeOutsideCell",
            Error::NonPositiveBound => "NonPositiveBound",
            Error::ZeroVector => "ZeroVector",
            Error::CovolumeMismatch(..) => "CovolumeMismatch",
            Error::NotIntegral(_) => "NotIntegral",
            Error::Overflow(_) => "Overflow",
            Error::Parse { .. } => "ParseError",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::Schema(_) => "SchemaError",
        }
    }

    /// Input errors (bad text, bad document shape) as opposed to domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::ZeroDenominator | Error::Schema(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
