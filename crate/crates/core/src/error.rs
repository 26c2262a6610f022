use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure mode of the library.
///
/// Variants carry enough context to render a useful message; the report
/// layer maps them to short reason codes via [`Error::reason`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("braid letter 0 is not a generator")]
    ZeroLetter,

    #[error("letter {letter} needs at least {} strands, got {strands}", letter.unsigned_abs() + 1)]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("a braid needs at least one strand")]
    NoStrands,

    #[error("braid word contains the negative letter {letter}")]
    NotPositive { letter: i32 },

    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error(
        "coefficient {coefficient} of t^{exponent} in the expansion of delta/(1-t) is not 0 or 1"
    )]
    NotLSpaceForm { exponent: i64, coefficient: String },

    #[error("Alexander polynomial has odd degree {degree}")]
    OddDegree { degree: i64 },

    #[error("specialized polynomial mixes exponent parities")]
    OddExponent,

    #[error("polynomial has negative powers of z and is not a knot HOMFLY-PT polynomial")]
    NegativeZPower,

    #[error("parameter {value} out of range for {what}")]
    ParameterOutOfRange { what: &'static str, value: i64 },

    #[error("torus knot parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: u32, q: u32 },

    #[error("only (2, q)-cables are supported, got p = {p}")]
    UnsupportedCable { p: u32 },

    #[error("word has {len} letters, limit is {limit}")]
    WordTooLong { len: usize, limit: usize },

    #[error("empty range {from}..={to}")]
    EmptyRange { from: u32, to: u32 },
}

impl Error {
    /// Short machine-readable code used in serialized reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "Syntax",
            Error::ZeroLetter => "ZeroLetter",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::NoStrands => "NoStrands",
            Error::NotPositive { .. } => "NotPositive",
            Error::NotAKnot { .. } => "NotAKnot",
            Error::InexactDivision => "InexactDivision",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotLSpaceForm { .. } => "NotLSpaceForm",
            Error::OddDegree { .. } => "OddDegree",
            Error::OddExponent => "OddExponent",
            Error::NegativeZPower => "NegativeZPower",
            Error::ParameterOutOfRange { .. } => "ParameterOutOfRange",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::UnsupportedCable { .. } => "UnsupportedCable",
            Error::WordTooLong { .. } => "WordTooLong",
            Error::EmptyRange { .. } => "EmptyRange",
        }
    }
}
