use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("invalid flavor: {0}")]
    InvalidFlavor(String),
    #[error("series does not vanish on the diagonal")]
    NotOnDiagonal,
    #[error("expected an even number of variables, got {0}")]
    OddVariableCount(usize),
    #[error("degree {degree} exceeds truncation order {order}")]
    DegreeOverflow { degree: u32, order: u32 },
    #[error("p-adic precision exhausted: pivot of valuation {valuation} at precision {precision}")]
    PrecisionExhausted { valuation: i64, precision: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("maps are not composable: {0}")]
    NotComposable(String),
    #[error("map is not defined on generator {0}")]
    UndefinedGenerator(usize),
    #[error("Bezout witness identity fails: {0}")]
    WitnessFails(String),
    #[error("sequence is not regular: {0}")]
    NotRegular(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("map is not a verified homotopy epimorphism")]
    NotHepi,
    #[error("parse error at position {position} near {token:?}: {message}")]
    Parse { token: String, position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
