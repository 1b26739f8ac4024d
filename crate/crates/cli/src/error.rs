use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] plethyra::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_REFUTED: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(plethyra::Error::SizeLimitExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_ERROR,
        }
    }
}
