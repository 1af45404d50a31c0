use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twisted_core::{
    fixed_edge_flip_path, matching_preserving_path, EdgeSet, Error, Limits, PathMode, TwistedGraph,
};
use twisted_cli::format::{self, EdgeSetJson, FlipPathJson, FormatError, GraphJson};
use twisted_cli::verify::{self, Suite};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "twisted", version, about = "Flip graphs of maximal plane subgraphs of the twisted graph T_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List maximal plane subgraphs or plane perfect matchings of T_n.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Build a flip path between two maximal plane subgraphs.
    Path {
        #[arg(long, value_enum)]
        mode: PathKind,
        /// EdgeSet JSON file of the start subgraph.
        #[arg(long)]
        from: PathBuf,
        /// EdgeSet JSON file of the target subgraph.
        #[arg(long)]
        to: PathBuf,
        /// EdgeSet JSON file of edges every node must keep (theorem2, bfs).
        /// theorem2 defaults to the intersection of both endpoints, bfs to none.
        #[arg(long)]
        fixed: Option<PathBuf>,
        /// On a rejected constructed step, fall back to a search path.
        #[arg(long)]
        fallback: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Print elapsed time to stderr.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Export a flip graph MP(T_n, F) or matching graph.
    Export {
        #[arg(long, value_enum)]
        graph: GraphKind,
        #[arg(long)]
        n: usize,
        /// EdgeSet JSON file with the fixed edges (flip graph only).
        #[arg(long)]
        fixed: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Args)]
struct LimitArgs {
    /// Largest n for enumerating maximal plane subgraphs.
    #[arg(long, default_value_t = Limits::default().max_plane)]
    max_plane_limit: usize,
    /// Largest n for enumerating plane perfect matchings.
    #[arg(long, default_value_t = Limits::default().matchings)]
    matching_limit: usize,
    /// Lift both limits to their hard caps.
    #[arg(long)]
    allow_large: bool,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        if self.allow_large {
            Limits {
                max_plane: Limits::MAX_PLANE_HARD_CAP,
                matchings: Limits::MATCHINGS_HARD_CAP,
            }
        } else {
            Limits {
                max_plane: self.max_plane_limit,
                matchings: self.matching_limit,
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    MaxPlane,
    Matchings,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathKind {
    Theorem2,
    Theorem3,
    Bfs,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Flip,
    Matching,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: ErrorDetail<'a>,
}

#[derive(Serialize)]
struct ErrorDetail<'a> {
    code: &'a str,
    message: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let body = ErrorBody {
                error: ErrorDetail {
                    code: err.code(),
                    message: err.to_string(),
                },
            };
            eprintln!("{}", serde_json::to_string(&body).expect("error serializes"));
            let check_failure = matches!(
                err,
                FormatError::Invalid(Error::ClaimViolation(_) | Error::NoPath)
            );
            ExitCode::from(if check_failure { EXIT_CHECK_FAILED } else { EXIT_USAGE })
        }
    }
}

fn run(command: Command) -> Result<ExitCode, FormatError> {
    match command {
        Command::Enumerate { kind, n, format, limits } => {
            let limits = limits.limits();
            let tg = TwistedGraph::new(n)?;
            let sets: Vec<EdgeSet> = match kind {
                Kind::MaxPlane => tg
                    .enumerate_maximal_plane(&limits)?
                    .into_iter()
                    .map(|g| g.into_edge_set())
                    .collect(),
                Kind::Matchings => tg
                    .enumerate_plane_perfect_matchings(&limits)?
                    .iter()
                    .map(|m| *m.edges())
                    .collect(),
            };
            match format {
                Format::Count => println!("{}", sets.len()),
                Format::Json => {
                    let json: Vec<EdgeSetJson> = sets.iter().map(EdgeSetJson::from).collect();
                    println!("{}", serde_json::to_string(&json)?);
                }
                Format::Dot => {
                    let name = match kind {
                        Kind::MaxPlane => "max_plane",
                        Kind::Matchings => "matching",
                    };
                    print!("{}", format::edge_sets_dot(name, &sets));
                }
            }
        }
        Command::Path { mode, from, to, fixed, fallback, limits } => {
            let limits = limits.limits();
            let from = format::read_edge_set(&from)?;
            let to = format::read_edge_set(&to)?;
            let tg = TwistedGraph::new(from.n())?;
            let (r, q) = (tg.max_plane(from)?, tg.max_plane(to)?);
            let fixed = fixed.map(|p| format::read_edge_set(&p)).transpose()?;
            let path_mode = if fallback {
                PathMode::FallbackToSearch(limits)
            } else {
                PathMode::Strict
            };
            let path = match mode {
                PathKind::Theorem2 => {
                    let fixed = fixed.unwrap_or_else(|| from.intersection(&to));
                    fixed_edge_flip_path(&tg, &r, &q, &fixed, path_mode)?
                }
                PathKind::Theorem3 => {
                    let mg = tg.build_matching_graph(&limits)?;
                    matching_preserving_path(&tg, &mg, &r, &q, path_mode)?
                }
                PathKind::Bfs => {
                    let fixed = match fixed {
                        Some(f) => f,
                        None => EdgeSet::new(tg.n())?,
                    };
                    tg.build_flip_graph(&fixed, &limits)?
                        .bfs_path(&r, &q)?
                        .ok_or(Error::NoPath)?
                }
            };
            println!("{}", serde_json::to_string(&FlipPathJson::from(&path))?);
        }
        Command::Verify { suite, n_max, timing, limits } => {
            let started = Instant::now();
            let report = verify::run(suite, n_max, &limits.limits())?;
            print!("{}", report.to_json());
            if timing {
                eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
            }
            if !report.passed {
                return Ok(ExitCode::from(EXIT_CHECK_FAILED));
            }
        }
        Command::Export { graph, n, fixed, format, limits } => {
            let limits = limits.limits();
            let tg = TwistedGraph::new(n)?;
            let out = match graph {
                GraphKind::Flip => {
                    let fixed = match fixed {
                        Some(p) => format::read_edge_set(&p)?,
                        None => EdgeSet::new(n)?,
                    };
                    let g = tg.build_flip_graph(&fixed, &limits)?;
                    match format {
                        GraphFormat::Json => serde_json::to_string(&GraphJson::from(&g))? + "\n",
                        GraphFormat::Dot => format::flip_graph_dot(&g),
                    }
                }
                GraphKind::Matching => {
                    let g = tg.build_matching_graph(&limits)?;
                    match format {
                        GraphFormat::Json => serde_json::to_string(&GraphJson::from(&g))? + "\n",
                        GraphFormat::Dot => format::matching_graph_dot(&g),
                    }
                }
            };
            print!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
