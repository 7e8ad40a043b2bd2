use thiserror::Error;

use crate::coeff::Violation;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("family mismatch: instance is {expected}, vector is {found}")]
    FamilyMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("invalid descriptor: {}", fmt_violations(.0))]
    InvalidDescriptor(Vec<Violation>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("slice dimension {dim} exceeds cap {cap}")]
    SliceTooLarge { dim: usize, cap: usize },
    #[error("inconsistent measurement: {0}")]
    Inconsistent(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
