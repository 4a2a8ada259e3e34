//! CLI error classification and exit codes.

use std::fmt;

/// Exit code 2: malformed config or invalid query parameters.
/// Exit code 3: a strict-policy cohomology refusal.
/// Exit code 1: a failed verification or internal invariant.
#[derive(Debug)]
pub enum CliError {
    Config {
        query: Option<usize>,
        message: String,
    },
    Policy {
        query: usize,
        message: String,
    },
    Failure {
        message: String,
    },
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        CliError::Config {
            query: None,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } => 2,
            CliError::Policy { .. } => 3,
            CliError::Failure { .. } => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config {
                query: Some(i),
                message,
            } => {
                write!(f, "error in query {i}: {message}")
            }
            CliError::Config {
                query: None,
                message,
            } => write!(f, "config error: {message}"),
            CliError::Policy { query, message } => {
                write!(f, "policy error in query {query}: {message}")
            }
            CliError::Failure { message } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for CliError {}
