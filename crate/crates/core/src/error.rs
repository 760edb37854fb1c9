use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation `{text}`: {reason}")]
    MalformedCycles { text: String, reason: String },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },

    #[error("image sequence is not a permutation of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported group parameters: {0}")]
    UnsupportedGroup(String),

    #[error("cannot parse group spec `{spec}`: {reason}")]
    GroupSpec { spec: String, reason: String },

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroups live in different groups")]
    DifferentParents,

    #[error("element {0} does not belong to the group")]
    ForeignElement(usize),

    #[error("not a Sylow {p}-subgroup (order {order}, expected {expected})")]
    NotSylow {
        p: u64,
        order: usize,
        expected: usize,
    },

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("invalid weak homomorphism: {0}")]
    InvalidWeakHom(String),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("computation too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
