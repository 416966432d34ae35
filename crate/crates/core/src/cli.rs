//! Command-line front end: `count`, `asym` and `oracle`.
//!
//! Exit codes: 0 on success, 2 for usage errors, 3 for solver and
//! consistency failures.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::asymptotics::{DEFAULT_DIGITS, DEFAULT_M, DEFAULT_STEP};
use crate::error::{Error, Result};
use crate::oracle::census;
use crate::report::{census_rows, constants_report, count_table, CommandEcho, CountFamily, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "outerplanar", version, about = "Exact and asymptotic enumeration of unlabeled outerplanar graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact counts for n = 0..N.
    Count {
        /// dissections, connected, general, bipartite-dissections,
        /// bipartite-connected or bipartite-general
        #[arg(long, default_value = "general")]
        family: String,
        #[arg(long, default_value_t = 30)]
        n: usize,
        /// Refine by number of edges.
        #[arg(long)]
        edges: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Growth constants, asymptotic constants and limit laws as JSON.
    Asym {
        /// Truncation of the singular system.
        #[arg(long, default_value_t = DEFAULT_M)]
        m: usize,
        /// Working precision in decimal digits (at least 30).
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: u32,
        /// Finite-difference step for the edge law.
        #[arg(long, default_value_t = DEFAULT_STEP)]
        h: f64,
    },
    /// Brute-force census of outerplanar graphs on n vertices.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Permit n = 8 (2^28 labeled graphs).
        #[arg(long)]
        allow_slow: bool,
    },
}

fn echo(name: &str, args: &[(&str, String)]) -> CommandEcho {
    CommandEcho { name: name.into(), args: args.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<BTreeMap<_, _>>() }
}

fn to_json<T: serde::Serialize>(rec: &OutputRecord<T>) -> Result<String> {
    serde_json::to_string_pretty(rec).map(|s| s + "\n").map_err(|e| Error::Consistency(e.to_string()))
}

/// Runs a parsed command and returns its standard output.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Count { family, n, edges, format } => {
            let fam: CountFamily = family.parse()?;
            let table = count_table(fam, *n, *edges)?;
            match format {
                Format::Csv => Ok(table.to_csv()),
                Format::Json => {
                    let e = echo("count", &[("family", family.clone()), ("n", n.to_string()), ("edges", edges.to_string())]);
                    to_json(&OutputRecord::new(e, table))
                }
            }
        }
        Command::Asym { m, digits, h } => {
            let report = constants_report(*m, *digits, *h)?;
            let e = echo("asym", &[("m", m.to_string()), ("digits", digits.to_string()), ("h", format!("{h:e}"))]);
            to_json(&OutputRecord::new(e, report))
        }
        Command::Oracle { n, format, allow_slow } => {
            let c = census(*n, *allow_slow)?;
            match format {
                Format::Csv => Ok(c.to_csv()),
                Format::Json => {
                    let e = echo("oracle", &[("n", n.to_string()), ("allow_slow", allow_slow.to_string())]);
                    to_json(&OutputRecord::new(e, census_rows(&c)))
                }
            }
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Solver(_) | Error::Consistency(_) => EXIT_FAILURE,
    }
}

/// Parses `args`, runs the command and writes to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(s) => {
            if out.write_all(s.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "outerplanar: {e}");
            exit_code(&e)
        }
    }
}
