use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not square-free")]
    NotSquareFree(i64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("p = {p} is outside the required residue class ({required})")]
    ResidueClass { p: u64, required: &'static str },
    #[error("oracles disagree on {quantity}: {left} vs {right}")]
    OracleDisagreement { quantity: String, left: String, right: String },
    #[error("{quantity} evaluated to the non-integer {value}")]
    NonIntegral { quantity: String, value: String },
    #[error("{quantity} evaluated to the negative value {value}")]
    Negative { quantity: String, value: String },
    #[error("no stratum r = {r} with Gauss genus {genus} for p = {p}")]
    IllegalStratum { p: u64, r: u32, genus: String },
    #[error("identity {identity} failed: {detail}")]
    InvariantViolation { identity: String, detail: String },
    #[error("continued fraction of discriminant {0} exceeded the period bound")]
    PeriodBound(i64),
    #[error("alternating form is degenerate")]
    Degenerate,
    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),
    #[error("integer overflow during lattice reduction")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
