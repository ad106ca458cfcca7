//! `lwc`: command line front end.
//!
//! Exit codes: 0 on success, 1 on invalid input or usage, 2 when a
//! construction is infeasible or rejection sampling runs out of attempts,
//! 3 when `verify` finds a failing criterion.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "lwc", version, about = "Marked random graphs with given degrees: sampling, counting, metrics, surgery")]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Draw graphs from a sampler configuration file.
    Sample(SampleArgs),
    /// Count (and optionally list) graphs with given degrees and mark counts.
    Enumerate(EnumerateArgs),
    /// Exact Lévy–Prokhorov distance between two measure files.
    Distance(DistanceArgs),
    /// Rate-function values for a measure.
    Entropy(EntropyArgs),
    /// Column transport on a degree matrix, or on a colored degree sequence.
    Transport(TransportArgs),
    /// Degree surgery on a marked graph.
    Surgery(SurgeryArgs),
    /// Monte Carlo estimate of the colored configuration model's girth probability.
    Cm(CmArgs),
    /// Run acceptance checks and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    /// Sampler configuration (key = value lines).
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the configuration's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Overrides the configuration's trial count.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Emit one CSV row per sample (trial,n,edges,max_degree) instead of graphs.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Degree sequence: a file, or an inline list such as `2,2,2`.
    #[arg(long)]
    pub degrees: String,
    /// Configuration file with `theta`, `xi`, `u` and `m` keys.
    #[arg(long)]
    pub marks: Option<PathBuf>,
    /// Also print every member in the graph text format.
    #[arg(long)]
    pub members: bool,
    /// Largest number of vertices accepted.
    #[arg(long, default_value_t = lwc::enumerate::DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct DistanceArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    /// Use the subset enumeration instead of max-flow (at most 16 atoms).
    #[arg(long)]
    pub brute_force: bool,
}

#[derive(Args, Debug)]
pub struct EntropyArgs {
    /// Rate inputs file.
    #[arg(long)]
    pub inputs: PathBuf,
    /// Measure file.
    #[arg(long)]
    pub measure: PathBuf,
}

#[derive(Args, Debug)]
pub struct TransportArgs {
    /// Degree matrix (`dmat` format). Needs `--beta`.
    #[arg(long, requires = "beta", conflicts_with = "colored")]
    pub matrix: Option<PathBuf>,
    /// Target column sums (`beta` format).
    #[arg(long)]
    pub beta: Option<PathBuf>,
    /// Colored degree sequence (`cds` format). Needs `--degrees`.
    #[arg(long, requires = "degrees")]
    pub colored: Option<PathBuf>,
    /// Target degree sequence for `--colored`.
    #[arg(long)]
    pub degrees: Option<String>,
}

#[derive(Args, Debug)]
pub struct SurgeryArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Target degree sequence: a file or an inline list.
    #[arg(long)]
    pub degrees: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub seed: u64,
    /// Where to write the new graph; the report goes to standard output.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = lwc::sampler::DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: u64,
}

#[derive(Args, Debug)]
pub struct CmArgs {
    /// Colored degree sequence (`cds` format).
    #[arg(long)]
    pub cds: PathBuf,
    /// Girth threshold: success means simple with no cycle of length at most h.
    #[arg(long)]
    pub h: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Which checks to run: all, or a comma-separated list of names or numbers
    /// (counting, mixture, sampler, lp, unimodular, reconstruction, transport,
    /// surgery, alpha, rates).
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// CSV table (criterion,title,status,millis,detail) instead of text lines.
    #[arg(long)]
    pub csv: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<lwc::Error>() {
        Some(lwc::Error::Infeasible(_) | lwc::Error::AttemptsExhausted { .. }) => 2,
        _ => 1,
    }
}
