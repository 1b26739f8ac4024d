use std::path::{Path, PathBuf};

use plethyra::Limits;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

/// Settings read from the optional TOML config file. Every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub degree_cap: Option<u32>,
    pub enum_budget: Option<u128>,
    pub workers: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// The explicit path if one was given, else the per-user config file when it exists.
    pub fn discover(explicit: Option<&Path>) -> Result<Self, CliError> {
        if let Some(path) = explicit {
            return Self::load(path);
        }
        match user_config_path() {
            Some(path) if path.is_file() => Self::load(&path),
            _ => Ok(Self::default()),
        }
    }
}

fn user_config_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CONFIG_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".config")))?;
    Some(base.join("plethyra").join("config.toml"))
}

fn default_cache_dir() -> PathBuf {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir)
        .join("plethyra")
}

/// Values supplied on the command line or through `PLETHYRA_*` variables.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub degree_cap: Option<u32>,
    pub enum_budget: Option<u128>,
    pub workers: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub degree_cap: u32,
    pub enum_budget: u128,
    pub worker_count: usize,
    pub cache_dir: PathBuf,
    pub output_format: OutputFormat,
}

impl RunConfig {
    pub fn resolve(overrides: Overrides, file: FileConfig) -> Result<Self, CliError> {
        let defaults = Limits::default();
        let config = RunConfig {
            degree_cap: overrides.degree_cap.or(file.degree_cap).unwrap_or(defaults.degree_cap),
            enum_budget: overrides.enum_budget.or(file.enum_budget).unwrap_or(defaults.enum_budget),
            worker_count: overrides
                .workers
                .or(file.workers)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
            cache_dir: overrides.cache_dir.or(file.cache_dir).unwrap_or_else(default_cache_dir),
            output_format: overrides.format.or(file.format).unwrap_or_default(),
        };
        if config.degree_cap == 0 || config.enum_budget == 0 || config.worker_count == 0 {
            return Err(CliError::Config("degree cap, enumeration budget and worker count must be positive".into()));
        }
        Ok(config)
    }

    pub fn limits(&self) -> Limits {
        let defaults = Limits::default();
        Limits {
            degree_cap: self.degree_cap,
            bruteforce_degree_cap: defaults.bruteforce_degree_cap.min(self.degree_cap),
            enum_budget: self.enum_budget,
            term_budget: defaults.term_budget,
        }
    }
}
