//! Command-line front end. `run` returns the process exit code so the whole
//! surface can be driven from tests.

mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{
    build_agl2, build_cyclic_regular, build_example6, build_fourell, build_gq, lines_csv,
};
use crate::dgraph::{complete_multipartite_decomposition, to_bitmap, to_dot, DerangementGraph};
use crate::gf::FieldSpec;
use crate::perm::{GroupFile, PermGroup};
use crate::solver::{analyze, AnalysisReport};
use crate::{Caps, Error};

pub use verify::{verify_fourell, verify_main, verify_twop, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable bounding the worker pool used for graph building.
pub const THREADS_ENV: &str = "DERANGEMENT_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "derangement-lab",
    version,
    about = "Derangement graphs of transitive permutation groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub caps: CapArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest group order that may be generated or turned into a graph.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_order: u64,
    /// Largest vertex count for the exact clique solver.
    #[arg(long, global = true, default_value_t = 5_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_vertices: u64,
    /// Largest group order for strict-EKR enumeration.
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub strict_cap: u64,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            max_order: self.max_order as usize,
            max_graph_order: (self.max_order as usize).min(d.max_graph_order),
            max_solver_vertices: self.max_vertices as usize,
            strict_cap: self.strict_cap as usize,
            ..d
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group and write its JSON group file.
    Construct(ConstructArgs),
    /// Compute the full invariant report for a group file.
    Analyze {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a structural theorem on concrete parameters.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Write line tables, DOT drawings or adjacency bitmaps.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Gq,
    Fourell,
    Example6,
    Agl2,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Field order for `gq` and `agl2`.
    #[arg(long)]
    pub q: Option<u64>,
    /// Odd parameter for `fourell`.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Degree for `cyclic`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Also list every element.
    #[arg(long)]
    pub with_elements: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// `G_q(A)` has a complete (q+1)-partite derangement graph and density q.
    Main {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The degree 4l group has a complete 2l-partite derangement graph and density 2.
    Fourell {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A transitive group of degree 2p has a p-clique, so density at most 2.
    Twop {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportCommand {
    /// CSV table of the lines of the affine plane over GF(q).
    Lines {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz drawing of the derangement graph.
    Dot {
        #[arg(long)]
        group: PathBuf,
        /// Colour vertices by multipartite part when the graph is complete multipartite.
        #[arg(long)]
        parts: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Binary adjacency bitmap.
    Bitmap {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Error(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn emit(out: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

pub fn load_group(path: &Path, caps: &Caps) -> crate::Result<PermGroup> {
    GroupFile::read(path)?.to_group(caps.max_order)
}

pub fn construct(args: &ConstructArgs, caps: &Caps) -> crate::Result<PermGroup> {
    let req = |v: Option<u64>, flag: &str| {
        v.ok_or_else(|| {
            Error::InvalidParameter(format!("{:?} needs --{flag}", args.kind).to_lowercase())
        })
    };
    match args.kind {
        Kind::Gq => build_gq(&FieldSpec::of_order(req(args.q, "q")?)?, caps.max_order),
        Kind::Agl2 => build_agl2(&FieldSpec::of_order(req(args.q, "q")?)?, caps.max_order),
        Kind::Fourell => Ok(build_fourell(
            req(args.ell.map(|e| e as u64), "ell")? as usize,
            caps.max_order,
        )?
        .group),
        Kind::Example6 => Ok(build_example6()),
        Kind::Cyclic => build_cyclic_regular(req(args.n.map(|n| n as u64), "n")? as usize),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Construct(args) => {
            let g = construct(args, &caps)?;
            emit(
                args.out.as_deref(),
                GroupFile::from_group(&g, args.with_elements)
                    .to_json()
                    .as_bytes(),
                stdout,
            )
        }
        Command::Analyze { group, format, out } => {
            let g = load_group(group, &caps)?;
            let report = analyze(&g, &caps)?;
            let text = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Csv => {
                    format!("{}\n{}\n", AnalysisReport::csv_header(), report.csv_row())
                }
            };
            emit(out.as_deref(), text.as_bytes(), stdout)
        }
        Command::Verify(v) => {
            let (report, out) = match v {
                VerifyCommand::Main { q, out } => (verify_main(*q, &caps)?, out),
                VerifyCommand::Fourell { ell, out } => (verify_fourell(*ell, &caps)?, out),
                VerifyCommand::Twop { group, p, out } => {
                    (verify_twop(&load_group(group, &caps)?, *p, &caps)?, out)
                }
            };
            emit(out.as_deref(), report.to_json().as_bytes(), stdout)?;
            verdict(&report)
        }
        Command::Export(e) => match e {
            ExportCommand::Lines { q, out } => {
                let s = FieldSpec::of_order(*q)?;
                emit(out.as_deref(), lines_csv(&s).as_bytes(), stdout)
            }
            ExportCommand::Dot { group, parts, out } => {
                let g = load_group(group, &caps)?;
                let dg = DerangementGraph::build(&g, caps.max_graph_order)?;
                let decomposition = if *parts {
                    Some(complete_multipartite_decomposition(&g, &dg)?)
                } else {
                    None
                };
                let colouring = decomposition
                    .as_ref()
                    .and_then(|d| d.multipartite())
                    .map(|m| m.parts.as_slice());
                emit(
                    out.as_deref(),
                    to_dot(&g, dg.graph(), colouring).as_bytes(),
                    stdout,
                )
            }
            ExportCommand::Bitmap { group, out } => {
                let g = load_group(group, &caps)?;
                let dg = DerangementGraph::build(&g, caps.max_graph_order)?;
                emit(Some(out), &to_bitmap(dg.graph()), stdout)
            }
        },
    }
}

fn verdict(report: &VerifyReport) -> Result<(), Failure> {
    match report.failed_checks().first() {
        None => Ok(()),
        Some(c) => Err(Failure::Verification(format!(
            "{} failed: {}",
            c.name, c.detail
        ))),
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => builder = builder.num_threads(n),
            _ => {
                return Err(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                ))
            }
        }
    }
    builder.build().map_err(|e| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(stderr, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| execute(&cli, &mut buffer));
    if let Err(e) = stdout.write_all(&buffer).and_then(|_| stdout.flush()) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            EXIT_VERIFY_FAILED
        }
        Err(Failure::Error(e @ Error::Internal(_))) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_VERIFY_FAILED
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
