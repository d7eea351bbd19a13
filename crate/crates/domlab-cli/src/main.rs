//! `domlab`: solve, validate, recognize, reduce and corpus-scan for the
//! 2-rainbow / weak Roman domination toolkit. One JSON report per input
//! line on stdout; errors are embedded in the report stream.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "domlab",
    about = "Exact 2-rainbow and weak Roman domination toolkit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct StreamArgs {
    /// Input file of graph6 lines; '-' or absent reads standard input.
    input: Option<PathBuf>,
    /// Abort on the first error instead of reporting and continuing.
    #[arg(long)]
    strict: bool,
    /// Worker threads for line-parallel processing (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Gamma,
    GammaR,
    GammaR2,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ReduceFormat {
    Json,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Compute domination parameters for each input graph.
    Solve {
        #[command(flatten)]
        stream: StreamArgs,
        /// Which parameter(s) to compute.
        #[arg(long, value_enum, default_value_t = Param::All)]
        param: Param,
        /// Include an optimal witness assignment in each report.
        #[arg(long)]
        certificate: bool,
        /// Solver order cap; graphs above it produce an error report.
        #[arg(long, env = "DOMLAB_MAX_ORDER", default_value_t = domlab::DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
    /// Scan a graph6 corpus with structural pre-filters.
    Scan {
        #[command(flatten)]
        stream: StreamArgs,
        /// Emit only graphs attaining gamma_r2 = 2 * gamma_r.
        #[arg(long)]
        find_extremal: bool,
        /// Keep only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Keep only triangle-free graphs.
        #[arg(long)]
        triangle_free: bool,
        /// Keep only {K4, K4-e}-free graphs.
        #[arg(long = "k4-k4e-free")]
        k4_k4e_free: bool,
        /// Keep only K5-free graphs.
        #[arg(long)]
        k5_free: bool,
        /// Solver order cap; graphs above it produce an error report.
        #[arg(long, env = "DOMLAB_MAX_ORDER", default_value_t = domlab::DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
    /// Build the 3SAT reduction graph from a DIMACS CNF file.
    Reduce {
        /// DIMACS CNF input file; '-' or absent reads standard input.
        input: Option<PathBuf>,
        /// Solve the constructed graph and report the claimed identities.
        #[arg(long)]
        verify: bool,
        /// Pad 1- and 2-literal clauses by repeating the last literal.
        #[arg(long)]
        pad: bool,
        /// Output shape: a JSON report or the bare graph6 line.
        #[arg(long, value_enum, default_value_t = ReduceFormat::Json)]
        format: ReduceFormat,
        /// Solver order cap for --verify.
        #[arg(long, env = "DOMLAB_MAX_ORDER", default_value_t = domlab::DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
    /// Hereditary-class membership for each input graph.
    Hereditary {
        #[command(flatten)]
        stream: StreamArgs,
        /// Class threshold k.
        #[arg(short, long)]
        k: usize,
        /// Also report agreement with the forbidden-subgraph test (k = 3).
        #[arg(long)]
        check_theorem3: bool,
        /// Membership order cap: 2^order subgraphs are solved per graph.
        #[arg(long, env = "DOMLAB_MAX_ORDER", default_value_t = domlab::hereditary::DEFAULT_HEREDITARY_CAP)]
        max_order: usize,
    },
    /// Re-validate certificates embedded in solve reports.
    Validate {
        #[command(flatten)]
        stream: StreamArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve {
            stream,
            param,
            certificate,
            max_order,
        } => commands::solve::run(&stream, param, certificate, max_order),
        Command::Scan {
            stream,
            find_extremal,
            connected,
            triangle_free,
            k4_k4e_free,
            k5_free,
            max_order,
        } => commands::scan::run(
            &stream,
            commands::scan::Filters {
                find_extremal,
                connected,
                triangle_free,
                k4_k4e_free,
                k5_free,
            },
            max_order,
        ),
        Command::Reduce {
            input,
            verify,
            pad,
            format,
            max_order,
        } => commands::reduce::run(input.as_deref(), verify, pad, format, max_order),
        Command::Hereditary {
            stream,
            k,
            check_theorem3,
            max_order,
        } => commands::hereditary::run(&stream, k, check_theorem3, max_order),
        Command::Validate { stream } => commands::validate::run(&stream),
    };
    match outcome {
        Ok(status) => status.exit_code(),
        Err(err) => {
            eprintln!("domlab: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Stream outcome, for the exit code contract: 0 = clean (parse warnings
/// allowed in non-strict mode), 1 = at least one non-parse error report,
/// 2 = usage error or strict-mode abort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Clean,
    ParseWarnings,
    HardErrors,
    StrictAbort,
}

impl RunStatus {
    fn exit_code(self) -> ExitCode {
        match self {
            RunStatus::Clean | RunStatus::ParseWarnings => ExitCode::SUCCESS,
            RunStatus::HardErrors => ExitCode::from(1),
            RunStatus::StrictAbort => ExitCode::from(2),
        }
    }
}
