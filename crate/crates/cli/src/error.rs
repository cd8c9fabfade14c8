use std::fmt;

use adica_core::adic::AdicError;
use adica_core::bratteli::BratteliError;
use adica_core::language::LanguageError;
use adica_core::s5::S5Error;
use adica_core::WordError;

/// A failed command: bad input (exit 2) or a rejected hypothesis (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Rejected(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Rejected(_) => 1,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn rejected(msg: impl Into<String>) -> Self {
        CliError::Rejected(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Rejected(m) => f.write_str(m),
        }
    }
}

fn classify(rejection: bool, msg: String) -> CliError {
    if rejection {
        CliError::Rejected(msg)
    } else {
        CliError::Usage(msg)
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        classify(!e.is_parse_error(), e.to_string())
    }
}

impl From<LanguageError> for CliError {
    fn from(e: LanguageError) -> Self {
        classify(!e.is_parse_error(), e.to_string())
    }
}

impl From<BratteliError> for CliError {
    fn from(e: BratteliError) -> Self {
        classify(e.is_rejection(), e.to_string())
    }
}

impl From<AdicError> for CliError {
    fn from(e: AdicError) -> Self {
        classify(e.is_rejection(), e.to_string())
    }
}

impl From<S5Error> for CliError {
    fn from(e: S5Error) -> Self {
        classify(!e.is_parse_error(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("IoError: {e}"))
    }
}
