use thiserror::Error;

/// Failures of scalar arithmetic in `Q(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("binomial index p = {p} outside 0..={n}")]
    OutOfRange { n: i64, p: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole of the denominator")]
    Pole,
    #[error("evaluation at q = 0")]
    ZeroPoint,
    #[error("q-factorial quotient is not a Laurent polynomial")]
    NonExactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("no finite type {series}{rank}")]
    InvalidType { series: char, rank: usize },
    #[error("matrix is not square of size {0}")]
    Shape(usize),
    #[error("diagonal entry a[{0}][{0}] is not 2")]
    Diagonal(usize),
    #[error("off-diagonal entry a[{0}][{1}] is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("a[{0}][{1}] and a[{1}][{0}] disagree on vanishing")]
    ZeroPattern(usize, usize),
    #[error("symmetrizers must lie in 1..=3, got {0}")]
    Symmetrizer(u32),
    #[error("d[{0}] a[{0}][{1}] != d[{1}] a[{1}][{0}]")]
    NotSymmetrizable(usize, usize),
    #[error("root index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
}

/// The divisor does not divide the polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial is not divisible by the binomial")]
pub struct NotDivisible;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Scalar(#[from] QError),
    #[error("no value supplied for variable {0}")]
    MissingValue(crate::poly::VarId),
    #[error("variable value is zero in a Laurent monomial")]
    ZeroValue,
    #[error("denominator vanishes at the sample point")]
    Pole,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("product is not locally finite: {0}")]
    NonAdmissibleProduct(&'static str),
    #[error("reliable windows do not overlap")]
    EmptyIntersection,
    #[error("variable {0} is missing from the expansion order")]
    MissingOrder(crate::poly::VarId),
    #[error("window lo > hi")]
    BadWindow,
}

/// A shuffle computation left the canonical-form subspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureViolation {
    #[error("numerator is not a Laurent polynomial in the chosen orientation")]
    NotPolynomial,
    #[error("numerator is not symmetric in the variables of color {0}")]
    NotSymmetric(u32),
    #[error("degree vectors have different rank")]
    RankMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error(transparent)]
    Closure(#[from] ClosureViolation),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("Serre relation needs a_(alpha,beta) < 0, got {0}")]
    TrivialSerre(i32),
    #[error("alpha and beta must differ")]
    SameRoot,
    #[error("expected {expected} modes, got {got}")]
    ModeCount { expected: usize, got: usize },
}
