//! Optional JSON configuration file.
//!
//! Precedence is fixed: command-line flags beat config-file values beat
//! built-in defaults. Unknown keys are rejected so a typo cannot silently
//! fall back to a default. The merged effective configuration is echoed in
//! every report, which makes any output file sufficient to reproduce its run.

use serde::Deserialize;
use std::path::Path;

use crate::CliError;

/// All recognized configuration keys. Every field is optional; each
/// subcommand reads the subset it understands.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub eta: Option<f64>,
    pub z_min: Option<f64>,
    pub z_max: Option<f64>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub n_z: Option<usize>,
    pub n_t: Option<usize>,
    pub order: Option<usize>,
    pub n_max: Option<usize>,
    pub h: Option<f64>,
    pub signature: Option<String>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    pub mass: Option<f64>,
    pub points: Option<Vec<[f64; 2]>>,
    pub four_d: Option<bool>,
    pub out: Option<String>,
    pub format: Option<String>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::parse(format!("invalid config {}: {e}", path.display())))
    }
}

/// Flag value if present, else config value, else default.
pub fn pick<T: Clone>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Flag value if present, else config value.
pub fn pick_opt<T: Clone>(flag: Option<T>, file: Option<T>) -> Option<T> {
    flag.or(file)
}
