use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into two groups: malformed input (`NotMonic`, `FieldMismatch`, ...)
/// and mathematical preconditions that the input does not meet (`Reducible`,
/// `NotTwoTorsion`, `Precondition`, ...). The CLI maps both to distinct exit codes
/// via [`Error::is_precondition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus has degree zero")]
    ZeroDegree,
    #[error("modulus is reducible over Q")]
    Reducible,
    #[error("no real root: negative radicand with even index")]
    NoRealRoot,
    #[error("radicand is zero")]
    ZeroRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("points must be distinct")]
    EqualPoints,
    #[error("singular Moebius transformation")]
    Singular,
    #[error("input is constant")]
    ConstantInput,
    #[error("point is not on the curve")]
    OffCurve,
    #[error("singular curve (zero discriminant)")]
    SingularCurve,
    #[error("x-coordinate is not that of a 2-torsion point")]
    NotTwoTorsion,
    #[error("matrix is diagonalizable")]
    DiagonalizableInput,
    #[error("matrix is not diagonalizable")]
    NotDiagonalizable,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no constructible root: {0}")]
    NoConstructibleRoot(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl Error {
    /// True for errors that describe a mathematical precondition rather than malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::NotMonic | Error::ZeroDegree | Error::FieldMismatch | Error::ResourceLimit(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
