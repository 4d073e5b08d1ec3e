/// `println!` that stops quietly when stdout is closed.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

/// `print!` counterpart of `say!`.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxmatch::bruhat::{Interval, DEFAULT_LENGTH_CAP};
use coxmatch::coxeter::CoxeterSystem;
use coxmatch::matchings::DEFAULT_SIZE_CAP;
use coxmatch::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "coxmatch", version, about = "Bruhat intervals, special matchings and right/left systems")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the interval [e, w].
    Interval(Target),
    /// Enumerate the special matchings of [e, w], or test one map.
    Matchings {
        #[command(flatten)]
        target: Target,
        /// Compare the definition with N-avoidance on every candidate.
        #[arg(long, value_enum)]
        check: Option<Check>,
        /// Test the map u -> u^I s u_I, given as `I:s`, e.g. `s1,s2,s3:s3`.
        #[arg(long, value_name = "GENS:S")]
        map: Option<String>,
    },
    /// Enumerate right and left systems and their matchings.
    Systems {
        #[command(flatten)]
        target: Target,
        /// List every system.
        #[arg(long)]
        list: bool,
        /// Compare with brute force and check the equality criteria.
        #[arg(long)]
        verify: bool,
    },
    /// Run the full property battery on every w up to a given length.
    Sweep {
        #[command(flatten)]
        source: MatrixSource,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        /// Largest interval on which every perfect matching is also tested.
        #[arg(long, default_value_t = 24)]
        all_matchings_limit: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatrixSource {
    /// A named group (`A3`, `B4`, `I2:5`, `I2:0` for infinity) or rows such as `1 3; 3 1`.
    #[arg(long)]
    matrix: Option<String>,
    /// Whitespace-separated integer grid; `0` means infinity.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Args)]
struct Target {
    #[command(flatten)]
    source: MatrixSource,
    /// The top element, e.g. `s1,s2,s1` or `s1-s2-s1`.
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long, default_value_t = DEFAULT_LENGTH_CAP, value_parser = positive())]
    length_cap: usize,
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP, value_parser = positive())]
    size_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    NAvoiding,
}

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const PARSE: u8 = 2;
    pub const CAP: u8 = 3;
    pub const VERIFICATION: u8 = 4;
}

pub enum Failure {
    Library(Error),
    Io(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl MatrixSource {
    fn system(&self) -> Result<CoxeterSystem, Failure> {
        if let Some(path) = &self.matrix_file {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            return Ok(CoxeterSystem::from_grid(&text)?);
        }
        let spec = self.matrix.as_deref().unwrap_or_default();
        if spec.contains(char::is_whitespace) || spec.contains(';') {
            Ok(CoxeterSystem::from_grid(&spec.replace(';', "\n"))?)
        } else {
            Ok(CoxeterSystem::named(spec)?)
        }
    }
}

impl Target {
    fn interval(&self) -> Result<Interval, Failure> {
        let sys = self.source.system()?;
        let w = sys.canonicalize(&sys.parse_word(&self.word)?)?;
        Ok(Interval::build_capped(&sys, &w, self.length_cap)?)
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Interval(target) => commands::interval(&target),
        Command::Matchings { target, check, map } => commands::matchings(&target, check, map.as_deref()),
        Command::Systems { target, list, verify } => commands::systems(&target, list, verify),
        Command::Sweep { source, maxlen, all_matchings_limit, format } => {
            commands::sweep(&source, maxlen, all_matchings_limit, format)
        }
    };
    match result {
        Ok(()) => ExitCode::from(exit::OK),
        Err(failure) => {
            let code = match &failure {
                Failure::Library(
                    Error::LengthCapExceeded { .. } | Error::SizeCapExceeded { .. } | Error::ClassCapExceeded { .. },
                ) => exit::CAP,
                Failure::Library(_) | Failure::Io(_) => exit::PARSE,
                Failure::Verification(_) => exit::VERIFICATION,
            };
            match failure {
                Failure::Library(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Verification(e) => eprintln!("verification failed: {e}"),
            }
            ExitCode::from(code)
        }
    }
}

fn positive() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..)
}
