//! Command-line front end for generalized concatenated quantum codes.
//!
//! Exit codes: 0 success or proved, 2 input error, 3 refuted, 4 inconclusive.

pub mod budget;
pub mod commands;
pub mod report;
pub mod spec;

use std::fmt;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_REFUTED: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed or inconsistent input.
    Input(String),
    /// A computation ran out of budget or cannot decide.
    Inconclusive(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Inconclusive(_) => EXIT_INCONCLUSIVE,
        }
    }

    /// Prefixes the message with the location it arose at.
    pub fn context(self, at: &str) -> Self {
        match self {
            CliError::Input(m) => CliError::Input(format!("{at}: {m}")),
            CliError::Inconclusive(m) => CliError::Inconclusive(format!("{at}: {m}")),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Inconclusive(m) => write!(f, "inconclusive: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gcqc::Error> for CliError {
    fn from(e: gcqc::Error) -> Self {
        use gcqc::Error::*;
        match e {
            BudgetExceeded { .. } | Undecidable(_) | SearchExhausted(_) => CliError::Inconclusive(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
