use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("{0}")]
    Domain(String),

    #[error("ideal is not artinian: no vanishing slice up to degree {cutoff}")]
    NotArtinian { cutoff: usize },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn syntax(offset: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: msg.into(),
        }
    }

    /// Parse-level failures, as opposed to mathematical domain errors.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::UnknownVariable { .. })
    }

    pub(crate) fn check_ambient(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { expected, found })
        }
    }
}
