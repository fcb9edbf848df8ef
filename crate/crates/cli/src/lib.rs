//! Command-line front end for `infocog-core`.
//!
//! [`run`] is the whole program: it parses arguments, dispatches to a
//! subcommand and maps every failure to an exit code.
//!
//! | Code | Meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error (unknown flag, missing argument) |
//! | 2 | input validation error (malformed distribution, bad file) |
//! | 3 | numeric domain error (value outside an operation's domain) |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ColorChoice, Parser, Subcommand, ValueEnum};

mod commands;
pub mod error;
pub mod formats;
pub mod output;

pub use error::CliError;
use output::Mode;

#[derive(Debug, Parser)]
#[command(
    name = "infocog",
    version,
    about = "Information, emergence and cognitive-augmentation metrics",
    color = ColorChoice::Never
)]
struct Cli {
    /// Emit one JSON object instead of name=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy family: Shannon, Gibbs, Hartley, Boltzmann, joint, MI, KL, Rényi.
    Entropy(EntropyArgs),
    /// LZ78 complexity estimate of a text or file.
    Algo(AlgoArgs),
    /// Physical limits of computation for a described system.
    Limits(LimitsArgs),
    /// Emergent capacity and Stonier information.
    Emergence(EmergenceArgs),
    /// Cellular-automata bench.
    #[command(subcommand)]
    Ca(CaCommand),
    /// Structural complexity and representational information.
    Grit(GritArgs),
    /// Cognitive-augmentation accounting for a ledger.
    Cogaug(CogaugArgs),
}

#[derive(Debug, clap::Args)]
struct EntropyArgs {
    /// Comma-separated probabilities.
    #[arg(long, conflicts_with_all = ["dist_file", "message"])]
    dist: Option<String>,
    /// JSON array of probabilities.
    #[arg(long, conflicts_with = "message")]
    dist_file: Option<PathBuf>,
    /// Text whose empirical character distribution is used.
    #[arg(long)]
    message: Option<String>,
    /// Second distribution for relative entropy D(p||q).
    #[arg(long)]
    q: Option<String>,
    /// Rényi order.
    #[arg(long)]
    alpha: Option<f64>,
    /// Message length m for I = m H.
    #[arg(long)]
    length: Option<u64>,
    /// Joint distribution, rows separated by `;`, cells by `,`.
    #[arg(long, conflicts_with = "joint_file")]
    joint: Option<String>,
    /// JSON array of arrays, rows = X.
    #[arg(long)]
    joint_file: Option<PathBuf>,
    /// Hartley message length N.
    #[arg(long, requires = "hartley_s")]
    hartley_n: Option<u64>,
    /// Hartley alphabet size S.
    #[arg(long, requires = "hartley_n")]
    hartley_s: Option<u64>,
    /// Number of equiprobable microstates W.
    #[arg(long)]
    microstates: Option<f64>,
    /// Constant k in S = k ln W.
    #[arg(long, default_value_t = 1.0)]
    boltzmann_k: f64,
    /// Constant k in S = -k sum p ln p.
    #[arg(long, default_value_t = 1.0)]
    gibbs_k: f64,
    /// Logarithm base.
    #[arg(long, default_value_t = 2.0)]
    base: f64,
    /// Scale constant K.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
}

#[derive(Debug, clap::Args)]
struct AlgoArgs {
    /// Inline text; symbols are Unicode scalar values.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    text: Option<String>,
    /// File read as raw bytes.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use the full byte alphabet (S = 256) instead of the symbols present.
    #[arg(long)]
    bytes: bool,
}

#[derive(Debug, clap::Args)]
struct LimitsArgs {
    /// Energy above the ground state, J.
    #[arg(long, conflicts_with = "mass_kg")]
    energy_j: Option<f64>,
    /// Thermodynamic entropy, J/K.
    #[arg(long)]
    entropy_jk: Option<f64>,
    /// Radius, m.
    #[arg(long, requires = "entropy_jk")]
    radius_m: Option<f64>,
    /// Rest mass, kg; energy becomes m c^2.
    #[arg(long)]
    mass_kg: Option<f64>,
}

#[derive(Debug, clap::Args)]
struct EmergenceArgs {
    /// System size m.
    #[arg(long, requires = "eta")]
    m: Option<f64>,
    /// Normalized entropy.
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long, requires = "stonier_s")]
    stonier_i0: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    stonier_k: f64,
    #[arg(long, requires = "stonier_i0")]
    stonier_s: Option<f64>,
    /// Locate the maximum of the capacity curve.
    #[arg(long, conflicts_with_all = ["m", "eta", "stonier_i0", "stonier_s"])]
    peak: bool,
}

#[derive(Debug, Subcommand)]
enum CaCommand {
    /// Evolve one rule and measure the diagram.
    Run(CaRunArgs),
    /// Sweep λ from a JSON config and emit CSV.
    Sweep(CaSweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Init {
    Center,
    Random,
}

#[derive(Debug, clap::Args)]
struct CaRunArgs {
    /// Elementary rule code (k = 2, r = 1).
    #[arg(long, conflicts_with_all = ["lambda", "states", "radius"], required_unless_present = "lambda")]
    rule: Option<u32>,
    /// Random rule table with this λ.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    states: Option<u8>,
    #[arg(long)]
    radius: Option<usize>,
    #[arg(long, default_value_t = 64)]
    width: usize,
    #[arg(long, default_value_t = 32)]
    steps: usize,
    /// Drives the rule table and, through a derived stream, the random row.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Init::Center)]
    init: Init,
    /// Rows with index above the cutoff are measured; defaults to steps / 2.
    #[arg(long)]
    cutoff: Option<usize>,
    /// Print the diagram as rows of state digits.
    #[arg(long)]
    render: bool,
}

#[derive(Debug, clap::Args)]
struct CaSweepArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Per-λ means instead of per-sample records.
    #[arg(long)]
    summary: bool,
}

#[derive(Debug, clap::Args)]
struct GritArgs {
    /// Category JSON.
    #[arg(long, required_unless_present = "survey")]
    category: Option<PathBuf>,
    /// Subset category JSON for h_s.
    #[arg(long, requires = "category")]
    subset: Option<PathBuf>,
    /// Rank members by element information.
    #[arg(long, requires = "category")]
    rank: bool,
    /// Scaling constant; defaults to 2 / D.
    #[arg(long)]
    k: Option<f64>,
    /// Enumerate every subset pair of every category in D dimensions (D <= 4).
    #[arg(long, conflicts_with = "category")]
    survey: Option<usize>,
}

#[derive(Debug, clap::Args)]
struct CogaugArgs {
    #[arg(long)]
    ledger: PathBuf,
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code. Diagnostics go to `err` as a single `error: ...` line.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            let text = e.render().to_string();
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                K::DisplayHelpOnMissingArgumentOrSubcommand | K::MissingSubcommand => {
                    let _ = writeln!(err, "error: a subcommand is required; try '--help'");
                    1
                }
                _ => {
                    let line = text.lines().next().unwrap_or("error: invalid usage");
                    let _ = writeln!(err, "{line}");
                    1
                }
            };
        }
    };
    let mode = if cli.json { Mode::Json } else { Mode::Text };
    match commands::dispatch(cli.command, mode, out) {
        Ok(()) => 0,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {msg}");
            e.exit_code()
        }
    }
}
