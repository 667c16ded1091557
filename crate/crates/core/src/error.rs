use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("mixed ambient dimensions: n = {0} and n = {1}")]
    MixedAmbient(u32, u32),
    #[error("not of complementary codimension: {0}")]
    NotComplementary(String),
    #[error("unsupported family pair: {0}")]
    UnsupportedFamilyPair(String),
    #[error("unsupported basis pair: {0}")]
    UnsupportedBasisPair(String),
    #[error("class is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("wrong basis: {0}")]
    WrongBasis(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("unsupported term: {0}")]
    UnsupportedTerm(String),
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("unsupported monomial: {0}")]
    UnsupportedMonomial(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

impl Error {
    /// Variant name, used as a machine-readable error tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidIndex(_) => "InvalidIndex",
            Error::InvalidGrading(_) => "InvalidGrading",
            Error::MixedAmbient(..) => "MixedAmbient",
            Error::NotComplementary(_) => "NotComplementary",
            Error::UnsupportedFamilyPair(_) => "UnsupportedFamilyPair",
            Error::UnsupportedBasisPair(_) => "UnsupportedBasisPair",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::WrongBasis(_) => "WrongBasis",
            Error::UnsupportedFamily(_) => "UnsupportedFamily",
            Error::UnsupportedTerm(_) => "UnsupportedTerm",
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::UnsupportedMonomial(_) => "UnsupportedMonomial",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse { .. } => "ParseError",
        }
    }

    /// True for requests that are well formed but have no known rule
    /// (as opposed to inputs that violate an invariant).
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedFamilyPair(_)
                | Error::UnsupportedBasisPair(_)
                | Error::UnsupportedFamily(_)
                | Error::UnsupportedTerm(_)
                | Error::UnsupportedMonomial(_)
        )
    }
}
