mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "covnum",
    version,
    about = "Monochromatic component covers of spanning colorings of complete r-partite hypergraphs"
)]
struct Cli {
    /// Rendering of analysis results.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, env = "COVNUM_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose every color class into monochromatic components.
    Components {
        /// Coloring file (text or JSON), or - for stdin.
        file: String,
        /// Also list the component vector of every vertex.
        #[arg(long)]
        vectors: bool,
    },
    /// Minimum number of monochromatic components covering all vertices.
    Cover {
        /// Coloring file or `components --format json` output, or - for stdin.
        file: String,
        /// Only search for covers of at most this size.
        #[arg(long)]
        budget: Option<usize>,
        /// Check a cover (JSON list of {"color","component"}) instead of solving.
        #[arg(long, value_name = "COVER_FILE")]
        check: Option<String>,
    },
    /// Sweep spanning colorings of a shape and check that small covers exist.
    Verify(VerifyArgs),
    /// Run the claim checkers on one coloring.
    Claims {
        file: String,
        /// Cover budget for the no-small-cover check (default k - r + 1).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Write a named or random instance in its file format.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Translate between partite hypergraphs and colored complete graphs.
    Transform {
        #[command(subcommand)]
        what: Transform,
    },
    /// Constructive cover of size at most 3 for a 3-colored biclique.
    CoverBiclique { file: String },
    /// Exact vertex cover and matching numbers of a hypergraph.
    TauNu {
        file: String,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
        #[arg(long, default_value_t = 24)]
        max_vertices: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    None,
    Color,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerArg {
    Rejection,
    Walk,
}

#[derive(Debug, Args)]
pub struct SamplerOpts {
    /// How random spanning colorings are drawn.
    #[arg(long, value_enum, default_value_t = SamplerArg::Rejection)]
    pub sampler: SamplerArg,
    /// Rejection sampler: draws before giving up.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_retries: u64,
    /// Walk sampler: recoloring steps after reaching a spanning coloring
    /// (default 50 per edge).
    #[arg(long)]
    pub walk_steps: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Uniformity (number of parts).
    #[arg(long)]
    pub r: usize,
    /// Excess colors: k = r + t.
    #[arg(long)]
    pub t: usize,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub parts: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    /// Random mode: number of samples.
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exhaustive mode: visit one coloring per color permutation orbit.
    #[arg(long, value_enum, default_value_t = SymmetryArg::None)]
    pub symmetry: SymmetryArg,
    /// Covers larger than this count as violations (default t + 1).
    #[arg(long)]
    pub budget: Option<usize>,
    /// Exhaustive mode: refuse enumerations larger than this.
    #[arg(long, default_value_t = 1e8)]
    pub max_enum: f64,
    #[command(flatten)]
    pub sampler: SamplerOpts,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// K_{K,K} with edge x_i y_j colored (j - i mod K) + 1.
    CyclicBiclique { k: usize },
    /// Projective plane of prime order Q minus one point, as a Q-partite hypergraph.
    TruncatedPlane { q: u64 },
    /// Random spanning coloring.
    Random {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        sampler: SamplerOpts,
    },
    /// Random partite hypergraph with distinct edges.
    RandomHypergraph {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only edges meeting all previous ones (up to --edges).
        #[arg(long)]
        intersecting: bool,
    },
    /// Complete graph with uniformly random edge colors.
    RandomGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// Partitioned hypergraph H -> complete graph colored by the smallest shared part.
    ToGraph { file: String },
    /// Colored complete graph -> r-partite hypergraph of monochromatic components.
    ToHypergraph { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let started = Instant::now();
    let result = commands::run(&cli);
    let wall_ms = started.elapsed().as_millis() as u64;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match result {
        Ok(commands::Output::Data(text)) => out.write_all(text.as_bytes()),
        Ok(commands::Output::Report { report, digest }) => {
            output::render(&mut out, cli.format, &report, &echo, digest, wall_ms)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("covnum: {msg}");
            return ExitCode::from(1);
        }
    };
    match written.and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe downstream is not our failure
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("covnum: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}
