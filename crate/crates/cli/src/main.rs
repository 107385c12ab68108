//! `domval` — exact domination analysis from the command line.
//!
//! Subcommands: `analyze` and `oracle` ingest edge-list files, `family`
//! evaluates closed-form formulas (optionally against the solver), and
//! `verify` runs the full property-check and formula sweep.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or parse error,
//! 3 resource refusal (graph too large, count overflow).

mod output;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use domval::closed_forms::{family_reports, FormulaError};
use domval::family::{FamilyError, FamilySpec};
use domval::graph::Graph;
use domval::oracle::{oracle_report, OracleError};
use domval::parse::{parse_graph, ParseErrorKind};
use domval::solver::{enumerate_gamma_sets, SolveError};
use domval::verify::{run_suite, summarize, VerifyConfig};

use output::{Format, OutputRecord, Payload};

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "domval",
    version,
    about = "Exact domination-number, gamma-set, and domination-value analysis"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Retain and display at most this many gamma-sets (tau stays exact).
    #[arg(long, global = true, default_value_t = 64)]
    max_sets: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph given as an edge-list file.
    Analyze { file: PathBuf },
    /// Solve with the exhaustive oracle instead (n <= 20).
    Oracle { file: PathBuf },
    /// Evaluate closed-form family formulas, e.g. `path:7` or `multipartite:2,3`.
    Family {
        /// Family spec: name[:comma-separated-ints].
        spec: String,
        /// Also run the solver and report formula/solver agreement.
        #[arg(long)]
        solve: bool,
    },
    /// Run the full verification sweep (property checks + formula sweeps).
    Verify {
        /// Largest path/cycle order in the sweeps.
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        /// Number of seeded random graphs.
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        /// Edge probabilities for the random corpus.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.2, 0.5, 0.8])]
        er_probs: Vec<f64>,
    },
}

/// Errors that terminate the run, tagged with the exit code they map to.
#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(message: impl fmt::Display) -> CliError {
    CliError {
        message: message.to_string(),
        code: EXIT_USAGE,
    }
}

fn refused(message: impl fmt::Display) -> CliError {
    CliError {
        message: message.to_string(),
        code: EXIT_REFUSED,
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> CliError {
        match e {
            SolveError::EmptyGraph => usage(e),
            SolveError::CountOverflow => refused(e),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> CliError {
        match e {
            OracleError::EmptyGraph => usage(e),
            OracleError::TooLarge { .. } => refused(e),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        match e {
            FamilyError::TooManyVertices { .. } => refused(e),
            _ => usage(e),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> CliError {
        match e {
            FormulaError::TooManyVertices { .. } | FormulaError::Overflow => refused(e),
            _ => usage(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(record) => {
            print!("{}", record.render());
            if record.all_checks_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILURE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<OutputRecord, CliError> {
    match &cli.command {
        Command::Analyze { file } => {
            let g = load_graph(file)?;
            let report = enumerate_gamma_sets(&g, cli.max_sets)?;
            Ok(OutputRecord {
                mode: "analyze",
                format: cli.format,
                payload: Payload::Report {
                    source: file.display().to_string(),
                    n: g.vertex_count(),
                    edges: g.edge_count(),
                    report,
                },
            })
        }
        Command::Oracle { file } => {
            let g = load_graph(file)?;
            let report = oracle_report(&g, cli.max_sets)?;
            Ok(OutputRecord {
                mode: "oracle",
                format: cli.format,
                payload: Payload::Report {
                    source: file.display().to_string(),
                    n: g.vertex_count(),
                    edges: g.edge_count(),
                    report,
                },
            })
        }
        Command::Family { spec, solve } => {
            let spec: FamilySpec = spec.parse().map_err(CliError::from)?;
            let variants = family_reports(&spec)?;
            let (solver, verdicts) = if *solve {
                let g = domval::family::generate(&spec)?;
                let solved = enumerate_gamma_sets(&g, cli.max_sets)?;
                let verdicts = variants
                    .iter()
                    .map(|(name, r)| {
                        let ok =
                            r.gamma == solved.gamma && r.tau == solved.tau && r.dv == solved.dv;
                        (*name, ok)
                    })
                    .collect();
                (Some(solved), verdicts)
            } else {
                (None, Vec::new())
            };
            Ok(OutputRecord {
                mode: "family",
                format: cli.format,
                payload: Payload::Family {
                    spec,
                    variants,
                    solver,
                    verdicts,
                },
            })
        }
        Command::Verify {
            max_n,
            seeds,
            er_probs,
        } => {
            if *max_n < 3 {
                return Err(usage("--max-n must be at least 3"));
            }
            if er_probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
                return Err(usage("--er-probs values must lie in [0, 1]"));
            }
            let cfg = VerifyConfig {
                max_path_cycle_n: *max_n,
                er_count: *seeds,
                er_probs: er_probs.clone(),
                ..VerifyConfig::default()
            };
            let outcomes = run_suite(&cfg);
            let summary = summarize(&outcomes);
            Ok(OutputRecord {
                mode: "verify",
                format: cli.format,
                payload: Payload::Verify { outcomes, summary },
            })
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| match e.kind {
        ParseErrorKind::TooManyVertices { .. } => refused(e),
        _ => usage(e),
    })
}
