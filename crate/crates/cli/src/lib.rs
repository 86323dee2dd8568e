//! The `qlogic` command line: argument model, dispatch and exit codes.
//!
//! Every command builds a [`report::Report`]; text, JSON and DOT are
//! renderings of it. Exit codes: 0 when every check passes, 1 on a law or
//! claim failure, 2 on a usage or parse error.

use clap::{Parser, Subcommand, ValueEnum};

use qlogic::groupoid::EnumLimits;
use qlogic::{Backend, Error, Tolerance};

pub mod commands;
pub mod counterexamples;
pub mod input;
pub mod report;

use report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGroupoid(_)
            | Error::InvalidPoset(_)
            | Error::LawViolation(_)
            | Error::NotAProjection(_) => CliError::Failure(e.to_string()),
            Error::ResourceLimit(_) => {
                CliError::Usage(format!("{e} (raise --max-enum or use a smaller input)"))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Mult,
    Inclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Fhilb,
    Rel,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Fhilb => Backend::FHilb,
            BackendArg::Rel => Backend::Rel,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qlogic",
    version,
    about = "Projection orders of dagger Frobenius algebras"
)]
pub struct Cli {
    /// Relative tolerance for FHilb comparisons.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPSILON)]
    pub tolerance: f64,
    /// Cap on enumerated sets (subgroupoids, copyables).
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_enum: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for random projections.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check groupoid laws or Frobenius axioms.
    Validate {
        input: String,
        /// Require the input to live in this category.
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
    },
    /// Build the projection order of a family of points.
    Projections {
        input: String,
        /// Random projections added to a matrix algebra's family.
        #[arg(long, default_value_t = 4)]
        samples: usize,
    },
    /// Lattice analysis of the multiplication or inclusion order.
    Lattice {
        input: String,
        #[arg(long, value_enum)]
        order: Order,
        #[arg(long, default_value_t = 4)]
        samples: usize,
    },
    /// Enumerate copyable points.
    Copyables { input: String },
    /// Tensor two algebras and check the composite.
    Tensor { left: String, right: String },
    /// Verify a bundled counterexample.
    Counterexamples { name: String },
    /// Print an embedded fixture as JSON.
    Fixture {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Config {
    pub tol: Tolerance,
    pub limits: EnumLimits,
    pub seed: u64,
}

impl Config {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        if cli.max_enum < 1 {
            return Err(CliError::Usage("--max-enum must be at least 1".into()));
        }
        Ok(Config {
            tol: Tolerance::new(cli.tolerance)?,
            limits: EnumLimits {
                max_closed_sets: cli.max_enum,
                ..EnumLimits::default()
            },
            seed: cli.seed,
        })
    }
}

/// What a run prints to stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = Config::from_cli(cli)?;
    let report = match &cli.command {
        Command::Fixture { name, list } => return commands::fixture(name.as_deref(), *list),
        Command::Validate { input, backend } => {
            commands::validate(&input::load(input)?, backend.map(Backend::from), &cfg)?
        }
        Command::Projections { input, samples } => {
            commands::projections(&input::load(input)?, *samples, &cfg)?
        }
        Command::Lattice {
            input,
            order,
            samples,
        } => commands::lattice(&input::load(input)?, *order, *samples, &cfg)?,
        Command::Copyables { input } => commands::copyables(&input::load(input)?, &cfg)?,
        Command::Tensor { left, right } => {
            commands::tensor(&input::load(left)?, &input::load(right)?, &cfg)?
        }
        Command::Counterexamples { name } => counterexamples::run(name, &cfg)?,
    };
    render(&report, cli.format)
}

pub fn render(report: &Report, format: Format) -> Result<Outcome, CliError> {
    let stdout = match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json() + "\n",
        Format::Dot => report.to_dot().ok_or_else(|| {
            CliError::Usage(format!("`{}` produces no order to draw", report.command))
        })?,
    };
    Ok(Outcome {
        stdout,
        code: if report.passed { 0 } else { 1 },
    })
}
