use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {position}: {message} (token '{token}')")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] adlv_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot format output: {0}")]
    Format(String),
}

impl CliError {
    pub fn parse(token: impl Into<String>, position: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            token: token.into(),
            position,
            message: message.into(),
        }
    }

    /// 2 for usage and parse errors, 3 when a cap or budget is exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(adlv_core::Error::BudgetExceeded { .. } | adlv_core::Error::GroupTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
