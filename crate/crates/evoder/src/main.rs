//! Command-line front end: derivation spaces of graph evolution
//! algebras, twin partitions, structure-matrix ranks, family
//! generators, and the small-graph cross-validation sweep.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use evoder::algebra::StructureMatrix;
use evoder::error::{Error, Result};
use evoder::families::{generate_family, Family};
use evoder::graph::Graph;
use evoder::matrix::parse_matrix_csv;
use evoder::report::{
    derive_document, derive_document_raw, rank_report, render_rank_table, render_table,
    twins_document, DeriveMethod, ResultDocument,
};
use evoder::verify::{render_summary, summarize, sweep_corpus};
use evoder::Rational;

#[derive(Parser)]
#[command(
    name = "evoder",
    version,
    about = "Derivation spaces of evolution algebras attached to finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Run the twin-class construction and the null-space oracle, then
    /// compare their spans.
    Both,
    /// Twin-class construction only.
    ClosedForm,
    /// Null-space oracle only.
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    /// Human-readable table.
    Table,
    /// Machine-readable JSON with exact rational strings.
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the twin partition and its size->=3 classes
    Twins {
        /// Graph file: edge list (first line n, then "u v" lines) or
        /// JSON {"n": .., "edges": [[u,v], ..]}, labels 1-based
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        out: OutputArg,
    },
    /// Compute a derivation basis by one or both routes
    Derive {
        /// Graph file, or a rational CSV structure matrix with --raw
        file: PathBuf,
        /// Solver route; defaults to both for graphs, oracle for --raw
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        out: OutputArg,
        /// Treat the input as a structure-matrix CSV (oracle only)
        #[arg(long)]
        raw: bool,
    },
    /// Rank of the structure matrix and the full-rank shortcut
    Rank {
        /// Graph file, or a rational CSV structure matrix with --raw
        file: PathBuf,
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        out: OutputArg,
    },
    /// Generate a family member and print (or save) its edge list
    Family {
        /// One of: path, cycle, star, wheel, complete, friendship,
        /// multipartite
        name: String,
        /// Size parameters (one integer; multipartite takes the part
        /// sizes)
        #[arg(required = true)]
        params: Vec<usize>,
        /// Write the edge list to this file instead of stdout
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Cross-validate both routes over all small connected graphs
    Verify {
        /// Largest vertex count to sweep (3..=7)
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Check graphs concurrently
        #[arg(long)]
        parallel: bool,
        /// Enumerate one representative per isomorphism class
        /// (required at n = 7, optional below)
        #[arg(long)]
        prune_iso: bool,
        #[arg(long, value_enum, default_value_t = OutputArg::Table)]
        out: OutputArg,
    },
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))
}

fn parse_graph_file(path: &Path) -> Result<Graph> {
    Graph::parse(&read_input(path)?)
}

fn parse_matrix_file(path: &Path) -> Result<StructureMatrix<Rational>> {
    StructureMatrix::from_matrix(parse_matrix_csv::<Rational>(&read_input(path)?)?)
}

fn print_document(doc: &ResultDocument, out: OutputArg) {
    match out {
        OutputArg::Json => println!("{}", serde_json::to_string_pretty(doc).expect("serializable")),
        OutputArg::Table => print!("{}", render_table(doc)),
    }
}

/// Runs one command; `Ok` carries the process exit code for outcomes
/// that are reports rather than errors (route disagreement exits 2).
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Twins { file, out } => {
            let g = parse_graph_file(&file)?;
            print_document(&twins_document(&g), out);
            Ok(0)
        }
        Command::Derive { file, method, out, raw } => {
            if raw {
                if matches!(method, Some(MethodArg::Both) | Some(MethodArg::ClosedForm)) {
                    return Err(Error::MalformedInput(
                        "--raw input has no graph, so only --method oracle applies".into(),
                    ));
                }
                let c = parse_matrix_file(&file)?;
                print_document(&derive_document_raw(&c)?, out);
                return Ok(0);
            }
            let g = parse_graph_file(&file)?;
            let method = match method.unwrap_or(MethodArg::Both) {
                MethodArg::Both => DeriveMethod::Both,
                MethodArg::ClosedForm => DeriveMethod::ClosedForm,
                MethodArg::Oracle => DeriveMethod::Oracle,
            };
            let doc = derive_document(&g, method)?;
            let disagreement = doc.agreement == Some(false);
            print_document(&doc, out);
            if disagreement {
                eprintln!("error: the two solver routes disagree on this input");
                return Ok(2);
            }
            Ok(0)
        }
        Command::Rank { file, raw, out } => {
            let c = if raw {
                parse_matrix_file(&file)?
            } else {
                StructureMatrix::from_graph(&parse_graph_file(&file)?)?
            };
            let report = rank_report(&c);
            match out {
                OutputArg::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                }
                OutputArg::Table => print!("{}", render_rank_table(&report)),
            }
            Ok(0)
        }
        Command::Family { name, params, emit } => {
            let family = match (name.as_str(), params.as_slice()) {
                ("path", [n]) => Family::Path(*n),
                ("cycle", [n]) => Family::Cycle(*n),
                ("star", [a]) => Family::Star(*a),
                ("wheel", [n]) => Family::Wheel(*n),
                ("complete", [n]) => Family::Complete(*n),
                ("friendship", [k]) => Family::Friendship(*k),
                ("multipartite", parts) => Family::CompleteMultipartite(parts.to_vec()),
                _ => {
                    return Err(Error::InvalidFamilyParams(format!(
                        "unknown family {name:?} with {} parameter(s)",
                        params.len()
                    )))
                }
            };
            let g = generate_family(&family)?;
            let edge_list = g.to_edge_list();
            match emit {
                Some(path) => fs::write(&path, edge_list).map_err(|e| {
                    Error::MalformedInput(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{edge_list}"),
            }
            Ok(0)
        }
        Command::Verify { nmax, parallel, prune_iso, out } => {
            if !(3..=7).contains(&nmax) {
                return Err(Error::MalformedInput(format!(
                    "--nmax must be between 3 and 7, got {nmax}"
                )));
            }
            if nmax == 7 && !prune_iso {
                return Err(Error::MalformedInput(
                    "n = 7 is only feasible with --prune-iso".into(),
                ));
            }
            let checks = sweep_corpus(nmax, prune_iso, parallel)?;
            let summary = summarize(nmax, prune_iso, &checks);
            match out {
                OutputArg::Json => {
                    println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
                }
                OutputArg::Table => print!("{}", render_summary(&summary)),
            }
            Ok(if summary.all_passed { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InternalInconsistency(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
