use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("operands live over different coefficient rings")]
    RingMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {0} exceeds the Grassmann index horizon")]
    IndexOutOfRange(usize),
    #[error("expansion limit {limit} must exceed the head {head}")]
    ExpansionLimit { head: u32, limit: u32 },
    #[error("horizon {horizon} too small: heads must stay below {horizon} - 2, found {head}")]
    HorizonTooSmall { horizon: u32, head: u32 },
    #[error("horizon {0} too large for a full operator matrix")]
    HorizonTooLarge(u32),
    #[error("element is not homogeneous with respect to the Z2-grading")]
    NotHomogeneous,
    #[error("squares are only defined for odd elements")]
    EvenSquare,
    #[error("weight {0} has no partner monomial of the second type")]
    NoPartner(i128),
    #[error("the weight vector ({0}, {1}) has no integral multidegree")]
    NonIntegralMultidegree(i128, i128),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("generators do not lie in a single triangular component")]
    MixedComponents,
    #[error("zero element is not allowed here")]
    ZeroElement,
    #[error("{0}")]
    Precondition(String),
}
