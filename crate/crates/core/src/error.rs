use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("exponent is not normalizable: {0}")]
    NotNormalizable(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("unphysical state: symplectic eigenvalue {nu} below 1/2")]
    Unphysical { nu: f64 },

    #[error("matrix is singular or not positive definite: {0}")]
    Singular(String),

    #[error("inverted mode {mode}: squared frequency {omega_sq} is not positive")]
    InvertedMode { mode: usize, omega_sq: f64 },

    #[error("Ermakov scale factor reached {h} at t = {t}")]
    ErmakovCollapse { t: f64, h: f64 },

    #[error("degenerate state: |A1 A2 - A12^2| = 0")]
    DegenerateState,

    #[error("time {0} is not on the grid")]
    OffGrid(f64),

    #[error("sequence error: {0}")]
    Sequence(String),

    #[error("unknown protocol `{0}`")]
    UnknownProtocol(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("table parse error at line {line}: {reason}")]
    Table { line: usize, reason: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
