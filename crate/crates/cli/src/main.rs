//! `tropcomm` — commuting-cone toolkit for 2x2 max-plus matrices.
//!
//! Argument parsing and dispatch only; behaviour lives in the library
//! modules so tests can drive it without spawning processes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropcomm_cli::{input, plot, report, sweep, CliError, OutputFormat, RunConfig};

/// Matrix arguments accept inline text (`"0.166 0.861; -0.62 -0.76"`,
/// `-inf` for bottom), a JSON array of arrays with `null` for bottom,
/// a file path containing either syntax, or `-` for standard input.
#[derive(Parser)]
#[command(name = "tropcomm", version, about = "Commuting-cone toolkit for 2x2 max-plus matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Comparison tolerance for tropical equality
    #[arg(long, global = true, default_value_t = tropcomm_core::DEFAULT_TOL)]
    tol: f64,

    /// Seed for every randomized check; reports echo it back
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Radius r of the exhaustive enumeration grid {-r..r} plus bottom
    #[arg(long, global = true, default_value_t = 5)]
    grid_radius: i64,

    /// Output format: text|json for reports, svg|tsv for plots
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write the primary output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether two matrices commute; prints both products
    Check {
        /// The finite 2x2 matrix A
        a: String,
        /// The 2x2 matrix B, bottom entries allowed
        b: String,
    },
    /// Compute the commuting-cone basis of A and audit it
    Basis {
        /// The finite 2x2 matrix A
        a: String,
    },
    /// Project the basis onto the reference triangle (svg or tsv)
    Bary {
        /// The finite 2x2 matrix A; diagonal entries must differ
        a: String,
    },
    /// Run the randomized + exhaustive verification sweep
    Verify {
        /// Drop a generator on purpose to prove the audit fails
        #[arg(long)]
        mutate_basis: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        tol: cli.tol,
        seed: cli.seed,
        grid_radius: cli.grid_radius,
    };
    match run(&cli, &cfg) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("tropcomm: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    cfg.validate()?;
    match &cli.command {
        Command::Check { a, b } => {
            let format = report_format(cli.format)?;
            let a = input::matrix_2x2(a)?;
            let b = input::matrix_2x2(b)?;
            let outcome = report::run_check(&a, &b, cfg)?;
            let body = match format {
                OutputFormat::Json => report::render_check_json(&outcome, cfg),
                _ => report::render_check_text(&outcome, cfg),
            };
            write_out(cli.out.as_deref(), &body)?;
            Ok(exit(if outcome.commute { 0 } else { 1 }))
        }
        Command::Basis { a } => {
            let format = report_format(cli.format)?;
            let a = input::finite_2x2(a)?;
            let outcome = report::run_basis(&a, cfg);
            let body = match format {
                OutputFormat::Json => report::render_basis_json(&outcome, cfg),
                _ => report::render_basis_text(&outcome, cfg),
            };
            write_out(cli.out.as_deref(), &body)?;
            Ok(exit(if outcome.report.all_pass() { 0 } else { 1 }))
        }
        Command::Bary { a } => {
            let format = plot_format(cli.format)?;
            let a = input::finite_2x2(a)?;
            let outcome = plot::run_bary(&a, cfg)?;
            let body = match format {
                OutputFormat::Tsv => plot::emit_tsv(&outcome.plot),
                _ => plot::emit_svg(&outcome.plot),
            };
            write_out(cli.out.as_deref(), &body)?;
            eprintln!("{}", plot::render_bary_summary(&outcome, cfg));
            Ok(exit(if outcome.concurrency.pass { 0 } else { 1 }))
        }
        Command::Verify { mutate_basis } => {
            let format = report_format(cli.format)?;
            let outcome = sweep::run_verify(cfg, *mutate_basis);
            let body = match format {
                OutputFormat::Json => sweep::render_verify_json(&outcome, cfg),
                _ => sweep::render_verify_text(&outcome, cfg),
            };
            write_out(cli.out.as_deref(), &body)?;
            Ok(exit(if outcome.pass { 0 } else { 1 }))
        }
    }
}

fn exit(code: u8) -> ExitCode {
    ExitCode::from(code)
}

fn report_format(format: Option<OutputFormat>) -> Result<OutputFormat, CliError> {
    match format {
        None => Ok(OutputFormat::Text),
        Some(f @ (OutputFormat::Text | OutputFormat::Json)) => Ok(f),
        Some(other) => Err(CliError::Input(format!(
            "format {} only applies to `bary`; use text or json",
            other.as_str()
        ))),
    }
}

fn plot_format(format: Option<OutputFormat>) -> Result<OutputFormat, CliError> {
    match format {
        None => Ok(OutputFormat::Svg),
        Some(f @ (OutputFormat::Svg | OutputFormat::Tsv)) => Ok(f),
        Some(other) => Err(CliError::Input(format!(
            "`bary` emits a plot; use --format svg or tsv, not {}",
            other.as_str()
        ))),
    }
}

/// Prints to stdout or writes the file, normalizing to one trailing
/// newline either way.
fn write_out(path: Option<&Path>, body: &str) -> Result<(), CliError> {
    let mut content = body.to_string();
    while content.ends_with('\n') {
        content.pop();
    }
    content.push('\n');
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Input(format!("writing {}: {e}", p.display()))),
    }
}
