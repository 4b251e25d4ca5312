use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is even; only odd characteristic is supported")]
    EvenCharacteristic(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus has degree {found}, expected a monic polynomial of degree {expected}")]
    DegreeMismatch { expected: u32, found: usize },
    #[error("field order {0} exceeds the supported maximum {max}", max = crate::field::MAX_FIELD_ORDER)]
    FieldTooLarge(u64),
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(usize),
    #[error("weight for element {0} is zero")]
    ZeroWeight(String),
    #[error("enumeration of {states} states exceeds the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u64 },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("index {index} out of range for dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("ground set of {0} elements exceeds the supported maximum of 63")]
    GroundSetTooLarge(usize),
    #[error("rank function violates the matroid axioms: {0}")]
    InvalidRankFunction(String),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("edge `{0}` is a loop or an isthmus")]
    LoopOrIsthmus(String),
    #[error("propagator constants must be nonzero")]
    ZeroPropagatorConstant,
    #[error("invalid evaluation point q = {0}")]
    InvalidQ(i64),
    #[error("matrix does not represent the intended matroid: {0}")]
    RepresentationCollapse(String),
    #[error("interpolation produced a non-integer coefficient")]
    NonIntegralInterpolation,
    #[error("cannot read `{path}`: {msg}")]
    Io { path: String, msg: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
