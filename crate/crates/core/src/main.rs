use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use swscan::harness::{self, BackendChoice, Input, KernelChoice, PairMode, RunConfig, Scoring};

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Kernel {
    Scalar,
    Lazyf,
    LazyfNoexit,
    Scan,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Backend {
    Reference,
    Sse2,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Pairs {
    AllVsAll,
    Zip,
}

/// Striped Smith-Waterman local alignment scores, one TSV row per pair.
#[derive(Debug, Parser)]
#[command(name = "swscan", version)]
#[command(group(ArgGroup::new("source").required(true).args(["query", "random"])))]
struct Cli {
    #[arg(long, value_enum, default_value = "scan")]
    kernel: Kernel,

    /// Vector lanes p: 2, 4, 8, 16, 32 or 64 (ignored by the scalar kernel).
    #[arg(long, default_value_t = 8)]
    lanes: usize,

    #[arg(long, value_enum, default_value = "reference")]
    backend: Backend,

    #[arg(long = "match", default_value_t = 1, allow_hyphen_values = true)]
    match_score: i32,

    /// Mismatch score; also what wildcard residues (N, or X with --matrix) score.
    #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
    mismatch: i32,

    /// Substitution matrix file (replaces --match/--mismatch for regular residues).
    #[arg(long)]
    matrix: Option<PathBuf>,

    /// Cost of the first gap position.
    #[arg(long, default_value_t = 6)]
    gap_open: u32,

    /// Cost of each further gap position.
    #[arg(long, default_value_t = 1)]
    gap_extend: u32,

    #[arg(long, requires = "target")]
    query: Option<PathBuf>,

    #[arg(long, requires = "query")]
    target: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "all-vs-all", requires = "query")]
    pairs: Pairs,

    /// Generate N random pairs instead of reading FASTA.
    #[arg(long, value_name = "N", conflicts_with = "query")]
    random: Option<usize>,

    #[arg(long, default_value_t = 1)]
    len_min: usize,

    #[arg(long, default_value_t = 256)]
    len_max: usize,

    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Write the TSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Align each pair R times and report the fastest.
    #[arg(long, value_name = "R", default_value_t = 1)]
    bench: usize,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl Cli {
    fn config(self) -> RunConfig {
        let input = match (self.query, self.target, self.random) {
            (Some(query), Some(target), _) => Input::Fasta {
                query,
                target,
                pairs: match self.pairs {
                    Pairs::AllVsAll => PairMode::AllVsAll,
                    Pairs::Zip => PairMode::Zip,
                },
            },
            (_, _, count) => Input::Random {
                count: count.unwrap_or(0),
                len_min: self.len_min,
                len_max: self.len_max,
                seed: self.seed,
            },
        };
        RunConfig {
            kernel: match self.kernel {
                Kernel::Scalar => KernelChoice::Scalar,
                Kernel::Lazyf => KernelChoice::Lazyf,
                Kernel::LazyfNoexit => KernelChoice::LazyfNoexit,
                Kernel::Scan => KernelChoice::Scan,
            },
            lanes: self.lanes,
            backend: match self.backend {
                Backend::Reference => BackendChoice::Reference,
                Backend::Sse2 => BackendChoice::Sse2,
            },
            scoring: match self.matrix {
                Some(path) => Scoring::Matrix {
                    path,
                    mismatch: self.mismatch,
                },
                None => Scoring::MatchMismatch {
                    match_score: self.match_score,
                    mismatch: self.mismatch,
                },
            },
            gap_open: self.gap_open,
            gap_extend: self.gap_extend,
            input,
            bench: self.bench,
            threads: self.threads,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let config = cli.config();

    let result = match &out_path {
        Some(path) => File::create(path)
            .map_err(|e| {
                swscan::Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
            })
            .and_then(|f| harness::run(&config, &mut BufWriter::new(f))),
        None => harness::run(&config, &mut BufWriter::new(io::stdout().lock())),
    };
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(io::stderr(), "swscan: error: {e}");
            ExitCode::FAILURE
        }
    }
}
