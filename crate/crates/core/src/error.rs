use alloc::string::String;

use crate::field::FieldSpec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} and {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("operands have different numbers of variables ({0} and {1})")]
    ArityMismatch(usize, usize),
    #[error("operand lives in the wrong ring")]
    RingMismatch,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("degree {k} out of range 0..={max}")]
    DegreeOutOfRange { k: u32, max: u32 },
    #[error("form is not homogeneous")]
    NonHomogeneous,
    #[error("form is zero")]
    ZeroForm,
    #[error("projective point has all coordinates zero")]
    ZeroPoint,
    #[error("{field} has no primitive root of unity of order {order}")]
    NoRootOfUnity { field: FieldSpec, order: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("need at least two variables with positive exponent")]
    TooFewVariables,
    #[error("generators are not powers of distinct variables")]
    NotMonomialPowers,
    #[error("all exponents are zero")]
    AllZeroExponents,
    #[error("point list contains duplicates")]
    DuplicatePoints,
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
