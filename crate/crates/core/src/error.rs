use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported prime {0}: only 2 and 3 are handled")]
    UnsupportedPrime(u32),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} is not restricted for p={p}")]
    NotRestricted { p: u32, weight: Weight },
    #[error("no tilting character known for T{weight} at p={p}")]
    UnknownTiltingCharacter { p: u32, weight: Weight },
    #[error("character is not Weyl-invariant near {0}")]
    NonInvariantInput(Weight),
    #[error("Donkin formula needs a+b <= p, got {weight} at p={p}")]
    DonkinPrecondition { p: u32, weight: Weight },
    #[error("unknown atom {0} for p={1}")]
    UnknownAtom(String, u32),
    #[error("multiplier must be T(1,0) or T(0,1), got {0}")]
    InvalidMultiplier(String),
    #[error("character does not split into tilting characters: {0}")]
    TiltingSplit(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
