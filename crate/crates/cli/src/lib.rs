//! Command-line surface for the multifold compiler, simulator, and solver:
//! argument handling, the JSON script document, SVG rendering, and the
//! command implementations that `main` dispatches to.

pub mod commands;
pub mod config;
pub mod document;
pub mod render;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DOMAIN: u8 = 3;
    pub const INTERNAL: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] multifold::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use multifold::Error as E;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse(_) => exit::PARSE,
            CliError::Core(e) => match e {
                E::Syntax { .. } | E::ZeroDenominator { .. } | E::MalformedScript(_) => exit::PARSE,
                E::Internal(_) => exit::INTERNAL,
                _ => exit::DOMAIN,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
