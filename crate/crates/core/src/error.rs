use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p must be an odd prime (got {0})")]
    InvalidPrime(u32),
    #[error("p = {p} exceeds the configured bound {bound}")]
    PrimeTooLarge { p: u32, bound: u32 },
    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u32, u32),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("element does not belong to this algebra: {0}")]
    ForeignElement(String),
    #[error("invalid bracket table: {0}")]
    InvalidTable(String),
    #[error("Jacobi identity fails on ({a}, {b}, {c}): residual {residual}")]
    JacobiViolation {
        a: String,
        b: String,
        c: String,
        residual: String,
    },
    #[error("ideal is not Poisson-closed: {{{generator}, {ideal_generator}}} = {bracket} is not in the ideal")]
    NotPoissonClosed {
        generator: String,
        ideal_generator: String,
        bracket: String,
    },
    #[error("ideal is not restricted: pp({ideal_generator}) = {image} is not in the ideal")]
    NotRestricted {
        ideal_generator: String,
        image: String,
    },
    #[error("nested bracket needs at least two arguments, got {0}")]
    TooFewArguments(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("missing p-map image for generator {0}")]
    MissingGenerator(String),
    #[error("Jacobson condition fails for generator {generator} on {element}: ad^p gives {lhs}, ad of the image gives {rhs}")]
    JacobsonFailure {
        generator: String,
        element: String,
        lhs: String,
        rhs: String,
    },
    #[error("Frobenius derivation value is not central: {{{value}, {element}}} = {bracket}")]
    NotCentral {
        value: String,
        element: String,
        bracket: String,
    },
    #[error("derivation does not preserve the quotient ideal at {0}")]
    DerivationNotCompatible(String),
    #[error("variable name collision: {0}")]
    NameCollision(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("catalog entry {name} requires p = {required}, got {got}")]
    CatalogPrime {
        name: String,
        required: u32,
        got: u32,
    },
    #[error("bracket table is not constant: {0}")]
    NonConstantTable(String),
    #[error("order {n} out of range: {reason}")]
    OrderOutOfRange { n: usize, reason: String },
    #[error("profile is inconsistent with p = {p}: component sizes sum to {total}")]
    InconsistentProfile { p: usize, total: usize },
    #[error("quantization does not certify a restricted structure: {0}")]
    VanishingFailure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
