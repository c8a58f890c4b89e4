use alloc::string::String;

use crate::bn::Twist;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("truncation caps differ: {0} vs {1}")]
    CapMismatch(u32, u32),
    #[error("cannot add elements of different twist ({0} and {1})")]
    TwistMismatch(Twist, Twist),
    #[error("polynomials are over different variable lists")]
    VariableMismatch,
    #[error("variable `{0}` has no assigned value")]
    UnassignedVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("setting γ = 0 is undefined on a term with γ^{0}")]
    NegativeGammaPower(i64),
    #[error("cap {cap} is too small, need at least {needed}")]
    CapTooSmall { needed: u32, cap: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("representation error: {0}")]
    Representation(String),
    #[error("generator `{0}` appears more than once")]
    DuplicateGenerator(String),
    #[error("{0} is not exactly divisible")]
    NotDivisible(String),
}
