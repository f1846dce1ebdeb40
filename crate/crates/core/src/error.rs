use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("continued fraction has a zero intermediate denominator")]
    DegenerateExpansion,
    #[error("no expansion with all terms even exists for {0}")]
    NoEvenExpansion(String),
    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),
    #[error("invalid fiber {beta}/{alpha}: {reason}")]
    InvalidFiber {
        alpha: String,
        beta: String,
        reason: String,
    },
    #[error("invalid torus cover query: {0}")]
    InvalidQuery(String),
    #[error("invalid torus link exterior: {0}")]
    InvalidExterior(String),
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("slope {0} is the fiber slope")]
    FiberSlopeFilling(String),
    #[error("expected {expected} slopes, got {got}")]
    SlopeCount { expected: usize, got: usize },
    #[error("surgery coefficient must be at least 2, got {0}")]
    CoefficientTooSmall(String),
    #[error("matrix is not invertible over the integers (determinant {0})")]
    NotUnimodular(String),
    #[error("empty composition")]
    EmptyComposition,
    #[error("degenerate parameter k = {0}")]
    DegenerateParameter(String),
    #[error("unknown cable case {0}")]
    UnknownCase(String),
    #[error("manifest line {line}: {reason}")]
    Manifest { line: usize, reason: String },
    #[error("zero exponent in template")]
    ZeroExponent,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("{count} generators exceeds the cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("{n} does not divide 2k+1 = {value}")]
    Indivisible { n: u64, value: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable machine-readable code, prefixed by the owning module.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse/syntax",
            Error::ZeroDenominator => "exact-arith/zero-denominator",
            Error::DegenerateExpansion => "exact-arith/degenerate-expansion",
            Error::NoEvenExpansion(_) => "exact-arith/no-even-expansion",
            Error::InvalidContinuedFraction(_) => "exact-arith/invalid-continued-fraction",
            Error::InvalidFiber { .. } => "seifert-core/invalid-fiber",
            Error::InvalidQuery(_) => "torus-covers/invalid-query",
            Error::InvalidExterior(_) => "torus-link-surgery/invalid-exterior",
            Error::InvalidSlope(_) => "torus-link-surgery/invalid-slope",
            Error::FiberSlopeFilling(_) => "torus-link-surgery/fiber-slope-filling",
            Error::SlopeCount { .. } => "torus-link-surgery/slope-count",
            Error::CoefficientTooSmall(_) => "torus-link-surgery/coefficient-too-small",
            Error::NotUnimodular(_) => "splice-gluing/not-unimodular",
            Error::EmptyComposition => "splice-gluing/empty-composition",
            Error::DegenerateParameter(_) => "splice-gluing/degenerate-parameter",
            Error::UnknownCase(_) => "splice-gluing/unknown-case",
            Error::Manifest { .. } => "splice-gluing/manifest",
            Error::ZeroExponent => "lo-certificates/zero-exponent",
            Error::UnknownGenerator(_) => "lo-certificates/unknown-generator",
            Error::TooManyGenerators { .. } => "lo-certificates/too-many-generators",
            Error::NoGenerators => "lo-certificates/no-generators",
            Error::Indivisible { .. } => "lo-certificates/indivisible",
            Error::InvalidParameter(_) => "cli/invalid-parameter",
        }
    }
}
