use thiserror::Error;

/// Everything that can go wrong short of a bug. Mathematical check *failures*
/// are not errors — they come back as failed verdicts inside a [`crate::report::Report`].
/// Errors mean the requested computation does not apply to the given input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is neither zero nor prime")]
    CompositeModulus(u64),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("homomorphism does not carry domain relations into codomain relations")]
    IllDefined,
    #[error("action is not admissible: {0}")]
    NotAdmissible(String),
    #[error("orbit carries a sign -1 stabilizer action: {0}")]
    SignedOrbit(String),
    #[error("group is not cyclic of prime order")]
    NotPrimeOrder,
    #[error("endomorphism is not an automorphism of the required order: {0}")]
    NotAnAutomorphism(String),
    #[error("coefficient prime {0} divides the group order")]
    NotCoprime(u64),
    #[error("action is not free: {0}")]
    NotFree(String),
    #[error("hypothesis not satisfied: {0}")]
    InapplicableHypothesis(String),
    #[error("unknown builtin name: {0}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid document: {0}")]
    Document(String),
    /// Violations of internal invariants that valid inputs cannot trigger.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
