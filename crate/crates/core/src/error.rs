use alloc::string::String;
use core::fmt;

/// Errors produced by the analysis operations.
///
/// `NoConvergence` signals that an iterative eigenvalue computation
/// exceeded its sweep cap; callers should treat it as ill-conditioning of
/// the input rather than retry.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix or polynomial dimensions are incompatible.
    ShapeMismatch(String),
    /// An operation required a monic polynomial.
    NotMonic,
    /// The zero polynomial (or a constant where degree ≥ 1 is needed).
    ZeroPolynomial,
    /// A vector argument was (numerically) zero.
    ZeroVector,
    /// QR iteration exceeded its sweep cap.
    NoConvergence,
    /// A numerical identity that the operation verifies before returning
    /// failed beyond tolerance.
    NumericalError(String),
    /// The polynomials share a root (within tolerance).
    NotCoprime,
    /// Operands are equal where distinct polynomials are required.
    NotDistinct,
    /// Roots required to be real were not.
    NonRealRoots(String),
    /// Roots required to be simple collided within tolerance.
    MultipleRoots,
    /// Residues of a decomposition carry both signs (or vanish), so no
    /// definite rank-one construction exists.
    MixedSigns,
    /// A residue is numerically zero, indicating a near-common root.
    DegenerateResidue,
    /// Coefficient matrices must all be diagonal for this construction.
    NotDiagonal,
    /// Real coefficients required.
    NotReal,
    /// The requested size is outside the supported range.
    UnsupportedSize(String),
    /// An index set contains out-of-range or repeated elements.
    InvalidIndexSet(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::ZeroPolynomial => write!(f, "zero or constant polynomial"),
            Error::ZeroVector => write!(f, "zero vector"),
            Error::NoConvergence => write!(f, "eigenvalue iteration did not converge"),
            Error::NumericalError(s) => write!(f, "numerical verification failed: {s}"),
            Error::NotCoprime => write!(f, "polynomials are not coprime"),
            Error::NotDistinct => write!(f, "polynomials must be distinct"),
            Error::NonRealRoots(s) => write!(f, "non-real roots: {s}"),
            Error::MultipleRoots => write!(f, "multiple (clustered) roots"),
            Error::MixedSigns => write!(f, "residues are not all of one sign"),
            Error::DegenerateResidue => write!(f, "vanishing residue (near-common root)"),
            Error::NotDiagonal => write!(f, "coefficient matrices are not diagonal"),
            Error::NotReal => write!(f, "real coefficients required"),
            Error::UnsupportedSize(s) => write!(f, "unsupported size: {s}"),
            Error::InvalidIndexSet(s) => write!(f, "invalid index set: {s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
