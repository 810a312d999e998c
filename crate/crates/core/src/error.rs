use thiserror::Error;

/// Every failure the toolkit reports. The variants name the violated
/// precondition so the CLI can echo it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("ambient dimension {dim} exceeds the enumeration bound {max}")]
    DimensionBound { dim: usize, max: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("weight {0:?} is not dominant (weakly decreasing with last coordinate 0)")]
    NotDominant(Vec<i64>),
    #[error("unsupported module shape: {0}")]
    UnsupportedShape(String),
    #[error("matrix is not in SL: determinant is {0}")]
    NotSpecialLinear(String),
    #[error("module support has {size} weights, cap is {cap}")]
    SupportTooLarge { size: usize, cap: usize },
    #[error("height zero: the origin lies in the weight polytope, no characteristic exists")]
    HeightZero,
    #[error("torus does not stabilize the line: {0}")]
    NotStabilizing(String),
    #[error("degree {found} below the minimum {min}")]
    DegreeTooSmall { found: usize, min: usize },
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("nonpositive degree {0}")]
    NonPositiveDegree(i64),
    #[error("degree {degree} is not divisible by {divisor}")]
    NotDivisible { degree: i64, divisor: i64 },
    #[error("complex is not exact ({0}); torsion undefined")]
    NotExact(String),
    #[error("complex is malformed: {0}")]
    MalformedComplex(String),
    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),
    #[error("twist m = {m} below the allowed minimum {min}")]
    TwistTooSmall { m: i64, min: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Stable name of the violated contract, used in CLI error payloads.
    pub fn contract(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::Empty(_) => "nonempty-input",
            Error::DimensionBound { .. } => "dimension-bound",
            Error::ZeroVector => "nonzero-vector",
            Error::NotDominant(_) => "dominant-weight",
            Error::UnsupportedShape(_) => "supported-shape",
            Error::NotSpecialLinear(_) => "determinant-one",
            Error::SupportTooLarge { .. } => "support-cap",
            Error::HeightZero => "null-cone",
            Error::NotStabilizing(_) => "line-stabilizing-torus",
            Error::DegreeTooSmall { .. } => "minimum-degree",
            Error::ZeroLeadingCoefficient => "nonzero-leading-coefficient",
            Error::NonPositiveDegree(_) => "positive-degree",
            Error::NotDivisible { .. } => "degree-divisibility",
            Error::NotExact(_) => "exact-complex",
            Error::MalformedComplex(_) => "composition-zero",
            Error::InsufficientSamples(_) => "sample-span",
            Error::TwistTooSmall { .. } => "twist-range",
            Error::Parse(_) => "well-formed-input",
            Error::Invalid(_) => "valid-input",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
