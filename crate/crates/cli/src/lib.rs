//! Support library for the `tropcomm` command-line tool.
//!
//! The binary in `main.rs` only parses arguments and dispatches; the
//! actual behaviour — input resolution, report rendering, the plot
//! emitters and the verification sweep — lives here so it can be
//! exercised directly by tests.

pub mod input;
pub mod plot;
pub mod report;
pub mod sweep;

use std::fmt;

/// Rendering target for a command's primary output. `check`, `basis`
/// and `verify` accept `text` or `json`; `bary` accepts `svg` or `tsv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
    Tsv,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Svg => "svg",
            OutputFormat::Tsv => "tsv",
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub tol: f64,
    pub seed: u64,
    pub grid_radius: i64,
}

impl RunConfig {
    /// Rejects configurations outside the documented domain: the
    /// tolerance must be a finite non-negative number and the grid
    /// radius at least 1.
    pub fn validate(&self) -> Result<(), CliError> {
        if !self.tol.is_finite() || self.tol < 0.0 {
            return Err(CliError::Input(format!(
                "tolerance must be finite and non-negative, got {}",
                self.tol
            )));
        }
        if self.grid_radius < 1 {
            return Err(CliError::Input(format!(
                "grid radius must be at least 1, got {}",
                self.grid_radius
            )));
        }
        Ok(())
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tol: tropcomm_core::DEFAULT_TOL,
            seed: 0,
            grid_radius: 5,
        }
    }
}

/// A command-terminating failure, tagged with its exit-code class:
/// `Input` exits 2, `Semantic` exits 1, `Unsupported` exits 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Semantic(String),
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Semantic(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Semantic(msg) => write!(f, "{msg}"),
            CliError::Unsupported(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Formats a float rounded to nine significant digits, in the shortest
/// decimal form that round-trips to the rounded value.
pub fn sig9(x: f64) -> String {
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float");
    if rounded == 0.0 {
        return String::from("0");
    }
    format!("{rounded}")
}
