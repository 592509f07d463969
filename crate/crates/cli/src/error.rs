use thiserror::Error;

/// Failures that stop a command before it can produce a report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<orthoql::Error> for CliError {
    fn from(e: orthoql::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
