use num_bigint::BigInt;
use thiserror::Error;

use crate::BigCount;

/// Everything that can go wrong while building or interrogating a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image sequence is not a bijection")]
    NotBijection,
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("group order {order} exceeds the cap {cap}")]
    CapExceeded { order: BigCount, cap: BigCount },
    #[error("sum {numerator} is not divisible by the group order {order}")]
    NonIntegral { numerator: BigInt, order: BigCount },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    DataFile { line: usize, message: String },
    #[error("expected group order {expected}, computed {computed}")]
    OrderMismatch {
        expected: BigCount,
        computed: BigCount,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
