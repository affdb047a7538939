use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<vroots_core::Error> for CliError {
    fn from(e: vroots_core::Error) -> Self {
        match e {
            vroots_core::Error::Invariant(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl CliError {
    /// 2 parse error, 3 precondition violation, 4 invariant violation,
    /// 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_table() {
        let parse = CliError::from(ParseError {
            pos: 0,
            msg: "x".into(),
        });
        assert_eq!(parse.exit_code(), 2);
        assert_eq!(CliError::from(vroots_core::Error::NotMonic).exit_code(), 3);
        assert_eq!(
            CliError::from(vroots_core::Error::SignListLength { expected: 2, got: 1 }).exit_code(),
            3
        );
        assert_eq!(CliError::from(vroots_core::Error::Domain("eps".into())).exit_code(), 3);
        assert_eq!(CliError::from(vroots_core::Error::Invariant("bad".into())).exit_code(), 4);
        let io = std::io::Error::new(std::io::ErrorKind::NotFound, "gone");
        assert_eq!(CliError::from(io).exit_code(), 1);
    }
}
