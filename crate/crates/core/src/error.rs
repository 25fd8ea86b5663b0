use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Single error type for the whole crate.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} index {index} out of range (len {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("no {kind} rule with exactness {requested} (table maximum {max})")]
    QuadratureUnavailable {
        kind: &'static str,
        requested: usize,
        max: usize,
    },

    #[error("kernel error: {0}")]
    Kernel(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("limiter precondition violated in cell {cell}: moment {moment:e} is negative")]
    NegativeMoment { cell: usize, moment: f64 },

    #[error("stage rejected: negative moment {moment:e} in cell {cell}")]
    StageRejected { cell: usize, moment: f64 },

    #[error("time step halving budget exhausted at t = {t} after {halvings} halvings")]
    HalvingBudgetExhausted { t: f64, halvings: usize },

    #[error("numerical blow-up at t = {t}: {reason}")]
    BlowUp { t: f64, reason: String },

    #[error("i/o error on {path:?}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the numerical method itself (as opposed to bad
    /// input or I/O).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NegativeMoment { .. }
                | Error::StageRejected { .. }
                | Error::HalvingBudgetExhausted { .. }
                | Error::BlowUp { .. }
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
