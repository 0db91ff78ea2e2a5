use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial has degree 0")]
    DegreeZero,
    #[error("minimal polynomial is reducible: rational root {0}")]
    Reducible(String),
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected at most {expected} power-basis coordinates, found {found}")]
    CoordinateLength { expected: usize, found: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid field element: {0}")]
    Element(String),
    #[error("{context}: {message}")]
    File { context: String, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("the two lines are identical")]
    IdenticalLines,
    #[error("the two conics are identical")]
    IdenticalConics,
    #[error("conic is degenerate (determinant of its matrix is zero)")]
    DegenerateConic,
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("point does not lie on the conic")]
    PointNotOnConic,
    #[error("members {0} and {1} coincide; the arrangement is not reduced")]
    NotReduced(usize, usize),
    #[error("arrangement has no members")]
    Empty,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(
        "intersection of members {first} and {second} needs a hint: residual form {residual} \
         (discriminant {discriminant}) has no root reachable in the declared field"
    )]
    NeedsHint {
        first: usize,
        second: usize,
        residual: String,
        discriminant: String,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree must be nonnegative, got {0}")]
    NegativeDegree(i64),
    #[error("polynomial of degree {0} is too small for this operation")]
    DegreeTooSmall(u32),
    #[error(
        "Hilbert function of the Jacobian algebra did not stabilise up to degree {cap} \
         (last values {last:?}); the curve is not reduced or has non-isolated singularities"
    )]
    NonIsolated { cap: u32, last: Vec<u64> },
    #[error("no nonzero syzygy found up to degree {0}")]
    SearchCapExceeded(u32),
    #[error("polynomial has {found} variables, expected {expected}")]
    Variables { expected: usize, found: usize },
    #[error("declared degree {declared} does not match polynomial degree {actual}")]
    DegreeMismatch { declared: u32, actual: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("mdr {d1} is outside 0..={max} for degree {m}")]
    MdrOutOfRange { m: i64, d1: i64, max: i64 },
    #[error("degree {0} is too small")]
    DegreeTooSmall(i64),
    #[error("moment index {0} outside 0..=2")]
    MomentIndex(u32),
    #[error("naive count residual is {0}, expected 0")]
    NaiveCountViolated(i64),
    #[error("exponents ({d1}, {d2}) do not sum to d - 1 = {expected}")]
    ExponentSum { d1: i64, d2: i64, expected: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
}
