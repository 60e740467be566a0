//! `fano`: exact invariants of the schemes of r-planes contained in complete
//! intersections, from the command line.
//!
//! Subcommands: `report` (full invariant report for one problem), `class`
//! (Schubert-class decomposition), `table` (regenerate the built-in degree
//! tables), `unirat` (unirationality bounds). `--json` switches any of them
//! to machine-readable output on stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 on success, 2 for usage/parse errors, 3 for well-formed
//! input violating a domain precondition.

mod render;
mod table;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fano_core::{
    fano_unirationality_bound, ps_pair, FanoProblem, MultiDegree, Overrides,
};

#[derive(Parser)]
#[command(
    name = "fano",
    version,
    about = "Exact invariants of schemes of r-planes on complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report: dimensions, classification, predicates, class, degree
    Report {
        /// Ambient projective dimension n
        #[arg(long)]
        n: u32,
        /// Comma-separated equation degrees, e.g. `3` or `2,2`
        #[arg(long, value_parser = parse_degrees)]
        d: Degrees,
        /// Dimension r of the linear subspaces
        #[arg(long)]
        r: u32,
        /// Machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
    },
    /// Schubert-class decomposition of the class of the scheme of r-planes
    Class {
        /// Ambient projective dimension n (omit with --abstract)
        #[arg(long, conflicts_with = "abstract_mode")]
        n: Option<u32>,
        /// Comma-separated equation degrees
        #[arg(long, value_parser = parse_degrees)]
        d: Degrees,
        /// Dimension r of the linear subspaces
        #[arg(long)]
        r: u32,
        /// No rectangle truncation: the decomposition valid for all large n
        #[arg(long = "abstract")]
        abstract_mode: bool,
        /// Machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the built-in degree tables
    Table {
        /// Degrees of schemes of lines (r = 1)
        #[arg(long, conflicts_with = "planes")]
        lines: bool,
        /// Degrees of schemes of planes and up (r = 2, 3, 4)
        #[arg(long)]
        planes: bool,
        /// Machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
    },
    /// Unirationality bound for generic schemes of r-planes
    Unirat {
        /// Comma-separated equation degrees, all at least 2
        #[arg(long, value_parser = parse_degrees)]
        d: Degrees,
        /// Dimension r of the linear subspaces
        #[arg(long)]
        r: u32,
        /// File of improved base values, one `d=<degrees> r=<integer>` per line
        #[arg(long)]
        overrides: Option<PathBuf>,
        /// Machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
    },
}

/// Raw degree list as parsed from `--d`; domain validation happens later so
/// that a structurally valid list failing an invariant exits 3, not 2.
#[derive(Clone, Debug)]
struct Degrees(Vec<u32>);

fn parse_degrees(input: &str) -> Result<Degrees, String> {
    let mut out = Vec::new();
    for token in input.split(',') {
        let token = token.trim();
        out.push(
            token
                .parse::<u32>()
                .map_err(|_| format!("invalid degree token `{token}`"))?,
        );
    }
    Ok(Degrees(out))
}

enum CliError {
    Usage(String),
    Domain(fano_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            // Malformed overrides files are parse errors, not domain errors.
            CliError::Domain(fano_core::Error::OverridesSyntax { .. }) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<fano_core::Error> for CliError {
    fn from(e: fano_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fano: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Report { n, d, r, json } => {
            let problem = FanoProblem::new(n, MultiDegree::new(d.0)?, r)?;
            let report = render::ProblemReport::build(&problem);
            if json {
                println!("{}", render::to_json_string(&report.json()));
            } else {
                print!("{}", report.human());
            }
            Ok(())
        }
        Command::Class {
            n,
            d,
            r,
            abstract_mode,
            json,
        } => {
            let d = MultiDegree::new(d.0)?;
            let class = if abstract_mode {
                fano_core::fano_class_abstract(r, &d)
            } else {
                let n = n.ok_or_else(|| {
                    CliError::Usage("class: provide --n <n> or --abstract".to_string())
                })?;
                let problem = FanoProblem::new(n, d.clone(), r)?;
                fano_core::fano_class(&problem)
            };
            if json {
                println!(
                    "{}",
                    render::to_json_string(&render::class_json(n, &d, r, &class))
                );
            } else {
                println!("{}", render::class_line(&class));
            }
            Ok(())
        }
        Command::Table {
            lines,
            planes,
            json,
        } => {
            let which = match (lines, planes) {
                (true, false) => table::Which::Lines,
                (false, true) => table::Which::Planes,
                _ => {
                    return Err(CliError::Usage(
                        "table: choose exactly one of --lines or --planes".to_string(),
                    ))
                }
            };
            let rows = table::compute(which)?;
            if json {
                println!("{}", render::to_json_string(&table::json(which, &rows)));
            } else {
                print!("{}", table::human(which, &rows));
            }
            Ok(())
        }
        Command::Unirat {
            d,
            r,
            overrides,
            json,
        } => {
            let d = MultiDegree::new(d.0)?;
            let overrides = match overrides {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    Overrides::parse(&text)?
                }
                None => Overrides::new(),
            };
            // Surface the base pair too when the input is itself a valid
            // recursion input.
            let bound = fano_unirationality_bound(&d, r, &overrides)?;
            let base = ps_pair(&d, &overrides);
            if json {
                println!(
                    "{}",
                    render::to_json_string(&render::unirat_json(&bound, &base))
                );
            } else {
                print!("{}", render::unirat_human(&bound, &base));
            }
            Ok(())
        }
    }
}
