use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2..=46337")]
    ModulusOutOfRange(u64),
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("{target} is not in the subgroup generated by {base}")]
    NotInSubgroup { base: u32, target: u32 },
    #[error("{value} has no {n}-th root")]
    NoRoot { value: u32, n: u64 },
    #[error("{d} does not divide the group order {group_order}")]
    InvalidOrder { d: u64, group_order: u64 },

    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: GF({expected}) vs GF({found})")]
    FieldMismatch { expected: u32, found: u32 },
    #[error("expected a {expected} point set")]
    AmbientMismatch { expected: &'static str },
    #[error("monoid closure exceeds {limit} elements")]
    ClosureTooLarge { limit: usize },

    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("exponent {0} exceeds the supported bound")]
    ExponentOverflow(u64),

    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("ideal is not graded")]
    NotGraded,
    #[error("enumeration of {size} candidates exceeds the limit {limit}")]
    EnumerationTooLarge { size: u128, limit: usize },
    #[error("variable index {index} out of range 1..={nvars}")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("point set is empty")]
    EmptySet,

    #[error("polynomial is not in the vanishing ideal")]
    NotInIdeal,
    #[error("point set together with [0] is not a monoid")]
    NotAMonoid,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("generator {0} is not a pure binomial")]
    NotPureBinomial(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("point set is not a finite subgroup of the projective torus")]
    NotAGroup,
    #[error("invalid parameterization: {0}")]
    InvalidParameterization(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    /// Stable identifier used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ModulusOutOfRange(_) => "ModulusOutOfRange",
            Error::ZeroInversion => "ZeroInversion",
            Error::NotInSubgroup { .. } => "NotInSubgroup",
            Error::NoRoot { .. } => "NoRoot",
            Error::InvalidOrder { .. } => "InvalidOrder",
            Error::ZeroVector => "ZeroVector",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::FieldMismatch { .. } => "FieldMismatch",
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::ClosureTooLarge { .. } => "ClosureTooLarge",
            Error::RingMismatch => "RingMismatch",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::ExponentOverflow(_) => "ExponentOverflow",
            Error::UnitIdeal => "UnitIdeal",
            Error::NotGraded => "NotGraded",
            Error::EnumerationTooLarge { .. } => "EnumerationTooLarge",
            Error::VariableOutOfRange { .. } => "VariableOutOfRange",
            Error::EmptySet => "EmptySet",
            Error::NotInIdeal => "NotInIdeal",
            Error::NotAMonoid => "NotAMonoid",
            Error::ZeroScalar => "ZeroScalar",
            Error::NotPureBinomial(_) => "NotPureBinomial",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::NotAGroup => "NotAGroup",
            Error::InvalidParameterization(_) => "InvalidParameterization",
            Error::Parse { .. } => "Parse",
        }
    }
}
