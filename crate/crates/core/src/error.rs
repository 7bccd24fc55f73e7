use thiserror::Error;

use crate::homcore::CertReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    /// A construction was asked to run on data that does not satisfy its
    /// hypotheses. The report (when present) carries the failing witness.
    #[error("precondition `{check}` failed")]
    Precondition {
        check: String,
        report: Option<Box<CertReport>>,
    },

    #[error("budget exceeded: {what} needs {needed} evaluations, limit is {limit}")]
    Budget { what: String, needed: String, limit: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
}

impl Error {
    pub(crate) fn dim(op: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::Dimension {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn precondition(check: impl Into<String>, report: CertReport) -> Self {
        Error::Precondition {
            check: check.into(),
            report: Some(Box::new(report)),
        }
    }

    pub(crate) fn precondition_msg(check: impl Into<String>) -> Self {
        Error::Precondition {
            check: check.into(),
            report: None,
        }
    }
}
