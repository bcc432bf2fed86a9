use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field tag mismatch: Q(sqrt {0}) vs Q(sqrt {1})")]
    FieldMismatch(u8, u8),
    #[error("unsupported field tag {0}")]
    BadFieldTag(u8),
    #[error("division by zero")]
    DivisionByZero,
    #[error("kronecker symbol with zero bottom argument")]
    ZeroModulus,
    #[error("reciprocity law needs at least one positive argument")]
    BothNegative,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("configuration is not primitive (gcd {0})")]
    NotPrimitive(i64),
    #[error("no labeling of the octuple satisfies the cube relations")]
    NoLabeling,
    #[error("completion is irrational: {0} is not of the required square form")]
    Irrational(String),
    #[error("mirror circle does not have unit norm")]
    NonUnitMirror,
    #[error("linear map does not preserve the inversive form")]
    NotFormPreserving,
    #[error("invalid face id {0}")]
    InvalidFace(String),
    #[error("invalid circle id {0}")]
    InvalidCircle(String),
    #[error("circles are not tangent")]
    NotTangent,
    #[error("curvatures {0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("integer overflow")]
    Overflow,
    #[error("search bound exhausted: {0}")]
    SearchExhausted(String),
    #[error("malformed presence file")]
    MalformedPresence,
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) | Error::SearchExhausted(_) => 2,
            Error::ResourceCap(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
