use thiserror::Error;

use crate::moves::RiseLabel;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("size {0} is outside the supported range 1..={max}", max = crate::perm::MAX_N)]
    SizeOutOfRange(usize),
    #[error("cannot parse permutation `{0}`: {1}")]
    Parse(String, &'static str),
    #[error("{0} is not an involution")]
    NotInvolution(Permutation),
    #[error("{0} is not below {1} in the Bruhat order")]
    NotComparable(Permutation, Permutation),
    #[error("label {0} is not a suitable rise of {1}")]
    NotSuitable(RiseLabel, Permutation),
    #[error("label {0} is not an inversion of {1}")]
    NotInversion(RiseLabel, Permutation),
    #[error("invalid label ({0},{1}) for size {2}")]
    InvalidLabel(usize, usize, usize),
    #[error("endpoints are equal")]
    EqualEndpoints,
    #[error("chain enumeration exceeded the limit of {0} chains")]
    ChainLimit(usize),
    #[error("invalid fixed-point class: {0}")]
    InvalidClass(String),
    #[error("{0} does not belong to the class")]
    NotInClass(Permutation),
    #[error("the class is not graded")]
    NotGraded,
    #[error("the poset is not bounded")]
    NotBounded,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
