use thiserror::Error;

/// Errors across the library. Each variant maps to one stable code string
/// (used verbatim by the CLI), returned by [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("field size {q} exceeds the cap {cap}")]
    SizeCapExceeded { q: u64, cap: u64 },
    #[error("the zero element has no inverse or multiplicative order")]
    ZeroElement,
    #[error("no primitive {0}-th root of unity in this field")]
    NoSuchRoot(u64),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("n = {0} must be odd")]
    EvenN(u64),
    #[error("p = {0} must be an odd prime")]
    EvenPrime(u64),
    #[error("polynomial does not split within extension degree {0}")]
    SplittingCapExceeded(usize),
    #[error("matrix is singular (determinant zero)")]
    SingularMatrix,
    #[error("invalid norm context: {0}")]
    InvalidNormContext(&'static str),
    #[error("the identity element has no well-defined order data here")]
    IdentityElement,
    #[error("points must be pairwise distinct")]
    DegeneratePoints,
    #[error("subgroup closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("input is not closed under composition and inverse")]
    NotAGroup,
    #[error("subgroup does not match any class of the classification")]
    UnrecognizedSubgroup,
    #[error("a stabilizer computation needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("singular model: B = 0 or A^2 - 4B = 0")]
    SingularModel,
    #[error("wrong characteristic for this variant")]
    WrongCharacteristic,
    #[error("cannot extract the required root within the splitting cap")]
    RootExtractionFailed,
    #[error("models have different variants or parameters")]
    VariantMismatch,
    #[error("index {i} out of range 0..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("the identity p = omega (t-1)^(p-1) degenerates at t = 1")]
    TEqualsOne,
    #[error("singular configuration: delta (A^2 - 4UB) = 0")]
    SingularConfiguration,
    #[error("degenerate coordinate change (alpha = 0)")]
    DegenerateChange,
    #[error("operands have different moduli")]
    MixedModulus,
    #[error("element is not a unit (z^0 layer is not a nonzero monomial)")]
    NotAUnit,
    #[error("Laurent support left the window [{lo}, {hi}]")]
    WindowOverflow { lo: i64, hi: i64 },
}

impl Error {
    /// Stable machine-readable code, e.g. `"SizeCapExceeded"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::ZeroElement => "ZeroElement",
            Error::NoSuchRoot(_) => "NoSuchRoot",
            Error::MixedFields => "MixedFields",
            Error::EvenN(_) => "EvenN",
            Error::EvenPrime(_) => "EvenPrime",
            Error::SplittingCapExceeded(_) => "SplittingCapExceeded",
            Error::SingularMatrix => "SingularMatrix",
            Error::InvalidNormContext(_) => "InvalidNormContext",
            Error::IdentityElement => "IdentityElement",
            Error::DegeneratePoints => "DegeneratePoints",
            Error::ClosureCapExceeded(_) => "ClosureCapExceeded",
            Error::NotAGroup => "NotAGroup",
            Error::UnrecognizedSubgroup => "UnrecognizedSubgroup",
            Error::TooFewPoints(_) => "TooFewPoints",
            Error::SingularModel => "SingularModel",
            Error::WrongCharacteristic => "WrongCharacteristic",
            Error::RootExtractionFailed => "RootExtractionFailed",
            Error::VariantMismatch => "VariantMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::TEqualsOne => "TEqualsOne",
            Error::SingularConfiguration => "SingularConfiguration",
            Error::DegenerateChange => "DegenerateChange",
            Error::MixedModulus => "MixedModulus",
            Error::NotAUnit => "NotAUnit",
            Error::WindowOverflow { .. } => "WindowOverflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
