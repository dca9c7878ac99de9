use alloc::string::String;

/// Errors raised by the evaluators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("order: {0}")]
    Order(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("convergence: {0}")]
    Convergence(String),
    #[error("tolerance: {0}")]
    Tolerance(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("parameter: {0}")]
    Parameter(String),
    #[error("range: {0}")]
    Range(String),
    #[error("no method: {0}")]
    NoMethod(String),
    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::Domain(_) => "domain",
            Error::Order(_) => "order",
            Error::Singular(_) => "singular",
            Error::Convergence(_) => "convergence",
            Error::Tolerance(_) => "tolerance",
            Error::Degenerate(_) => "degenerate",
            Error::Parameter(_) => "parameter",
            Error::Range(_) => "range",
            Error::NoMethod(_) => "no_method",
            Error::Overflow(_) => "overflow",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! bail {
    ($variant:ident, $($arg:tt)*) => {
        return Err($crate::Error::$variant(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
