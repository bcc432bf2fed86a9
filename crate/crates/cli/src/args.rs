use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Integral circle packings: classification, curvature enumeration, quadratic invariants,
/// sporadic-integer reports, verification suites and drawings.
#[derive(Parser, Debug)]
#[command(name = "circlepack", version, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the modular type and the packing invariant chi2
    Classify(ClassifyArgs),
    /// Enumerate all curvatures up to N and write a presence file
    Enumerate(EnumerateArgs),
    /// Compute the sporadic set S_P(N) and write a JSON and/or CSV report
    Sporadic(SporadicArgs),
    /// Compute chi2 and list the witnesses used at each seed circle
    Chi2(Chi2Args),
    /// List the Ford circles of a strip packing
    Ford(FordArgs),
    /// Find a chain of tangent circles with coprime curvatures between two curvatures
    Path(PathArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Draw a bounded packing as SVG
    Render(RenderArgs),
}

#[derive(Args, Debug, Clone)]
pub struct PackingArgs {
    /// Packing family
    #[arg(long, value_parser = ["oct", "cube", "square", "tri"])]
    pub kind: String,
    /// Comma-separated curvatures: an ordered tuple for oct, square and tri, any order for cube
    #[arg(long, allow_hyphen_values = true)]
    pub seed: String,
    /// Root of the quadratic completion of a grid seed
    #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = ["+", "-"])]
    pub sign: String,
}

#[derive(Args, Debug, Clone)]
pub struct CapArgs {
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    /// Stop with exit code 3 after visiting this many configurations
    #[arg(long, value_name = "N")]
    pub max_states: Option<u64>,
    /// Stop with exit code 3 after this many seconds
    #[arg(long, value_name = "SECS")]
    pub time_budget: Option<f64>,
    /// Largest presence bitset allowed, in bytes
    #[arg(long, value_name = "BYTES")]
    pub max_memory: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Random circles checked for agreement of chi2
    #[arg(long, default_value_t = 64, value_name = "N")]
    pub verify_bound: usize,
    /// Seed of the sampler
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    /// Print JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Curvature bound N
    #[arg(long = "max", value_name = "N")]
    pub n: u64,
    /// Presence file to write
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Args, Debug)]
pub struct SporadicArgs {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Curvature bound N
    #[arg(long = "max", value_name = "N")]
    pub n: u64,
    /// JSON report path; the report goes to standard output when neither --json nor --csv is given
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// CSV summary path
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Also write the presence file
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Random circles checked for agreement of chi2
    #[arg(long, default_value_t = 64, value_name = "N")]
    pub verify_bound: usize,
    /// Seed of the sampler
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Args, Debug)]
pub struct Chi2Args {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Witnesses listed per seed circle
    #[arg(long, default_value_t = 5)]
    pub witnesses: usize,
    /// Random circles checked for agreement of chi2
    #[arg(long, default_value_t = 64, value_name = "N")]
    pub verify_bound: usize,
    /// Seed of the sampler
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
}

#[derive(Args, Debug)]
pub struct FordArgs {
    /// Packing family
    #[arg(long, value_parser = ["oct", "cube", "square", "tri"])]
    pub kind: String,
    /// Largest |x| and |y|
    #[arg(long, default_value_t = 5)]
    pub bound: i64,
    /// Write CSV to this path instead of a table on standard output
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PathArgs {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Curvature of the first circle
    #[arg(long, allow_hyphen_values = true)]
    pub from: i64,
    /// Curvature of the last circle
    #[arg(long, allow_hyphen_values = true)]
    pub to: i64,
    /// Print the chain as JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite to run
    #[arg(long, value_parser = ["ford", "node", "edge", "oracle", "modular", "obstruction"])]
    pub suite: String,
    /// Packing family (every suite except ford)
    #[arg(long, value_parser = ["oct", "cube", "square", "tri"], requires = "seed")]
    pub kind: Option<String>,
    /// Comma-separated curvatures (every suite except ford)
    #[arg(long, allow_hyphen_values = true, requires = "kind")]
    pub seed: Option<String>,
    /// Root of the quadratic completion of a grid seed
    #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = ["+", "-"])]
    pub sign: String,
    /// Run the suite on every packing of the built-in seed table
    #[arg(long, conflicts_with_all = ["kind", "seed"])]
    pub table: bool,
    /// Largest |x|, |y| of the Ford circles
    #[arg(long, default_value_t = 20)]
    pub bound: i64,
    /// Curvature bound for the oracle, modular and obstruction suites
    #[arg(long = "max", value_name = "N", default_value_t = 2000)]
    pub n: u64,
    /// Sample size: tangent pairs (edge), circles (node) or generator moves (modular)
    #[arg(long, value_name = "N")]
    pub verify_bound: Option<usize>,
    /// Seed of the sampler
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    /// Print the reports as JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[command(flatten)]
    pub packing: PackingArgs,
    /// Generator moves applied from the root configuration
    #[arg(long, default_value_t = 3)]
    pub depth: u32,
    /// Circles of larger curvature are left out
    #[arg(long, default_value_t = 1000)]
    pub max_curvature: i64,
    /// Write the curvature inside each circle
    #[arg(long)]
    pub labels: bool,
    /// Draw outlines only
    #[arg(long)]
    pub no_color: bool,
    /// SVG file to write
    #[arg(long)]
    pub out: PathBuf,
}
