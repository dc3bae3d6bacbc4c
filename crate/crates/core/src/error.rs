use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a zero octonion")]
    ZeroDivisor,
    #[error("matrix is not null: det = {det}")]
    NotNull { det: f64 },
    #[error("null matrix is not future-pointing (p = {p}, m = {m})")]
    NotFuturePointing { p: f64, m: f64 },
    #[error("(MA)M^dagger and M(AM^dagger) differ by {residual}")]
    NotWellDefined { residual: f64 },
    #[error("matrix is not compatible: {reason}")]
    NotCompatible { reason: String },
    #[error("entries do not lie in a single complex subalgebra")]
    NotComplex,
    #[error("det(MM^dagger) = {0} is negative")]
    NegativeDeterminant(f64),
    #[error("numerator and denominator both vanish")]
    DegenerateMap,
    #[error("(0, 0) is not a point of OP^1")]
    InvalidPoint,
    #[error("{name} must have unit norm, got {norm}")]
    NotUnit { name: &'static str, norm: f64 },
    #[error("{name} must be purely imaginary")]
    NotImaginary { name: &'static str },
    #[error("ell is not an imaginary unit orthogonal to the quaternionic span of c, d (defect {defect})")]
    InvalidEll { defect: f64 },
    #[error("c and d are not orthogonal (<c, d> = {0})")]
    NotOrthogonal(f64),
    #[error("evaluation hit the pole of an inversion")]
    PoleHit,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("word of length {0} exceeds the bracketing limit of 6")]
    WordTooLong(usize),
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("point is not on the light cone: {0}")]
    NotOnLightCone(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
