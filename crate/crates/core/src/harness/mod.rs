//! Batch front end: inputs, kernel selection and TSV reporting.

mod fasta;
mod generate;

pub use fasta::{parse_fasta, FastaRecord};
pub use generate::generate_pairs;

use std::fmt;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::kernels::{align_lazyf, align_lazyf_with, align_scan, align_scan_with, AlignmentResult};
use crate::oracle::sw_scalar_score;
use crate::profile::QueryProfile;
use crate::scoring::{ScoringScheme, SubstitutionMatrix};
use crate::vector::{VectorSpec, SCORE_MAX};

pub const TSV_HEADER: &str =
    "query_id\ttarget_id\tkernel\tlanes\tscore\toverflow\ttime_ns\tvec_ops_total\tcorrection_passes";

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum KernelChoice {
    Scalar,
    Lazyf,
    LazyfNoexit,
    Scan,
}

impl KernelChoice {
    pub const ALL: [KernelChoice; 4] = [Self::Scalar, Self::Lazyf, Self::LazyfNoexit, Self::Scan];

    pub fn name(self) -> &'static str {
        match self {
            Self::Scalar => "scalar",
            Self::Lazyf => "lazyf",
            Self::LazyfNoexit => "lazyf-noexit",
            Self::Scan => "scan",
        }
    }
}

impl fmt::Display for KernelChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown kernel {s:?}")))
    }
}

/// Vector implementation the striped kernels run on.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum BackendChoice {
    /// Portable, any lane count.
    #[default]
    Reference,
    /// x86_64 SSE2, 8 lanes only.
    Sse2,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum PairMode {
    /// Every query against every target.
    #[default]
    AllVsAll,
    /// The i-th query against the i-th target.
    Zip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scoring {
    MatchMismatch {
        match_score: i32,
        mismatch: i32,
    },
    /// Matrix file; wildcard residues score `mismatch`.
    Matrix {
        path: PathBuf,
        mismatch: i32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Fasta {
        query: PathBuf,
        target: PathBuf,
        pairs: PairMode,
    },
    Random {
        count: usize,
        len_min: usize,
        len_max: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub kernel: KernelChoice,
    pub lanes: usize,
    pub backend: BackendChoice,
    pub scoring: Scoring,
    pub gap_open: u32,
    pub gap_extend: u32,
    pub input: Input,
    /// Alignments per pair; the fastest is reported.
    pub bench: usize,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
}

impl RunConfig {
    /// Checks everything that does not need the input files and returns the
    /// scoring scheme the run will use.
    pub fn validate(&self) -> Result<ScoringScheme> {
        if self.kernel != KernelChoice::Scalar {
            VectorSpec::new(self.lanes)?;
            if self.backend == BackendChoice::Sse2 {
                if !cfg!(target_arch = "x86_64") {
                    return Err(Error::Config("the sse2 backend needs x86_64".into()));
                }
                if self.lanes != 8 {
                    return Err(Error::Config(format!(
                        "the sse2 backend has 8 lanes, not {}",
                        self.lanes
                    )));
                }
            }
        }
        if self.bench == 0 {
            return Err(Error::Config("--bench must be at least 1".into()));
        }
        if let Input::Random {
            len_min, len_max, ..
        } = self.input
        {
            if len_min == 0 || len_min > len_max {
                return Err(Error::Config(format!(
                    "length range {len_min}..={len_max} must be non-empty and start at 1 or more"
                )));
            }
            if len_max > u32::MAX as usize {
                return Err(Error::Config(format!("--len-max {len_max} is too large")));
            }
        }
        match &self.scoring {
            Scoring::MatchMismatch {
                match_score,
                mismatch,
            } => ScoringScheme::match_mismatch(
                Alphabet::dna(),
                *match_score,
                *mismatch,
                self.gap_open,
                self.gap_extend,
            ),
            Scoring::Matrix { path, mismatch } => {
                let text = std::fs::read_to_string(path).map_err(|e| io_context(path, e))?;
                SubstitutionMatrix::parse(&text)?.into_scheme(
                    *mismatch,
                    self.gap_open,
                    self.gap_extend,
                )
            }
        }
    }

    /// Lane count written to the TSV.
    fn reported_lanes(&self) -> usize {
        match self.kernel {
            KernelChoice::Scalar => 1,
            _ => self.lanes,
        }
    }
}

fn io_context(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    ))
}

/// Named sequences plus the (query, target) index pairs to align.
#[derive(Clone, Debug)]
pub struct Batch {
    pub queries: Vec<FastaRecord>,
    pub targets: Vec<FastaRecord>,
    pub pairs: Vec<(usize, usize)>,
    pub seed: Option<u64>,
}

/// Reads or generates every sequence up front, so that input errors surface
/// before any alignment starts.
pub fn load_batch(config: &RunConfig, alphabet: &Alphabet) -> Result<Batch> {
    match &config.input {
        Input::Fasta {
            query,
            target,
            pairs,
        } => {
            let read = |path: &PathBuf| -> Result<Vec<FastaRecord>> {
                let file = File::open(path).map_err(|e| io_context(path, e))?;
                let records = parse_fasta(BufReader::new(file), alphabet)?;
                if records.is_empty() {
                    return Err(Error::Config(format!("{} has no records", path.display())));
                }
                Ok(records)
            };
            let queries = read(query)?;
            let targets = read(target)?;
            let pairs = match pairs {
                PairMode::AllVsAll => (0..queries.len())
                    .flat_map(|q| (0..targets.len()).map(move |t| (q, t)))
                    .collect(),
                PairMode::Zip => {
                    if queries.len() != targets.len() {
                        return Err(Error::Config(format!(
                            "--pairs zip needs equal record counts ({} queries, {} targets)",
                            queries.len(),
                            targets.len()
                        )));
                    }
                    (0..queries.len()).map(|i| (i, i)).collect()
                }
            };
            Ok(Batch {
                queries,
                targets,
                pairs,
                seed: None,
            })
        }
        &Input::Random {
            count,
            len_min,
            len_max,
            seed,
        } => {
            let record = |prefix: char, i: usize, sequence: Vec<u8>| FastaRecord {
                id: format!("{prefix}{i}"),
                description: String::new(),
                sequence,
            };
            let (queries, targets) = generate_pairs(alphabet, count, len_min, len_max, seed)
                .into_iter()
                .enumerate()
                .map(|(i, (q, t))| (record('q', i, q), record('t', i, t)))
                .unzip();
            Ok(Batch {
                queries,
                targets,
                pairs: (0..count).map(|i| (i, i)).collect(),
                seed: Some(seed),
            })
        }
    }
}

/// One TSV row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub query_id: String,
    pub target_id: String,
    pub kernel: KernelChoice,
    pub lanes: usize,
    pub score: u64,
    pub overflow: bool,
    pub time_ns: u128,
    pub vec_ops_total: u64,
    pub correction_passes: u64,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.query_id,
            self.target_id,
            self.kernel,
            self.lanes,
            self.score,
            u8::from(self.overflow),
            self.time_ns,
            self.vec_ops_total,
            self.correction_passes
        )
    }
}

struct Encoded {
    sequence: Vec<u8>,
    profile: Option<QueryProfile>,
}

/// Validates `config`, aligns every pair and writes the TSV to `out`.
/// Returns the number of rows written.
pub fn run<W: Write>(config: &RunConfig, out: &mut W) -> Result<usize> {
    let scheme = config.validate()?;
    let batch = load_batch(config, scheme.alphabet())?;
    let rows = align_batch(config, &scheme, &batch)?;

    writeln!(out, "{TSV_HEADER}")?;
    for row in &rows {
        writeln!(out, "{row}")?;
    }
    if let Some(seed) = batch.seed {
        writeln!(out, "# seed={seed}")?;
    }
    out.flush()?;
    Ok(rows.len())
}

/// Aligns all pairs of `batch`, rows in pair order whatever the thread count.
pub fn align_batch(config: &RunConfig, scheme: &ScoringScheme, batch: &Batch) -> Result<Vec<Row>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    pool.install(|| {
        let alphabet = scheme.alphabet();
        let spec = match config.kernel {
            KernelChoice::Scalar => None,
            _ => Some(VectorSpec::new(config.lanes)?),
        };
        let encode = |r: &FastaRecord| alphabet.encode(&r.sequence);
        let queries = batch
            .queries
            .par_iter()
            .map(|r| {
                let sequence = encode(r)?;
                let profile = spec
                    .map(|spec| QueryProfile::build(&sequence, scheme, spec))
                    .transpose()?;
                Ok(Encoded { sequence, profile })
            })
            .collect::<Result<Vec<_>>>()?;
        let targets = batch
            .targets
            .par_iter()
            .map(encode)
            .collect::<Result<Vec<_>>>()?;

        batch
            .pairs
            .par_iter()
            .map(|&(q, t)| {
                let (score, overflow, vec_ops, passes, time_ns) =
                    align_pair(config, scheme, &queries[q], &targets[t])?;
                Ok(Row {
                    query_id: batch.queries[q].id.clone(),
                    target_id: batch.targets[t].id.clone(),
                    kernel: config.kernel,
                    lanes: config.reported_lanes(),
                    score,
                    overflow,
                    time_ns,
                    vec_ops_total: vec_ops,
                    correction_passes: passes,
                })
            })
            .collect()
    })
}

fn align_pair(
    config: &RunConfig,
    scheme: &ScoringScheme,
    query: &Encoded,
    target: &[u8],
) -> Result<(u64, bool, u64, u64, u128)> {
    let mut best = u128::MAX;
    let mut outcome = None;
    for _ in 0..config.bench {
        let start = Instant::now();
        let result = match (config.kernel, &query.profile) {
            (KernelChoice::Scalar, _) => {
                let score = sw_scalar_score(&query.sequence, target, scheme)?.0;
                let elapsed = start.elapsed().as_nanos();
                let score = score as u64;
                best = best.min(elapsed);
                outcome = Some((score, score > u64::from(SCORE_MAX), 0, 0));
                continue;
            }
            (kernel, Some(profile)) => {
                vector_kernel(config.backend, kernel, profile, target, scheme)?
            }
            (_, None) => unreachable!("striped kernels always get a profile"),
        };
        best = best.min(start.elapsed().as_nanos());
        outcome = Some((
            u64::from(result.score),
            result.overflow,
            result.vector_ops(),
            result.correction_passes(),
        ));
    }
    let (score, overflow, ops, passes) = outcome.expect("bench is at least 1");
    Ok((score, overflow, ops, passes, best))
}

fn vector_kernel(
    backend: BackendChoice,
    kernel: KernelChoice,
    profile: &QueryProfile,
    target: &[u8],
    scheme: &ScoringScheme,
) -> Result<AlignmentResult> {
    match backend {
        BackendChoice::Reference => match kernel {
            KernelChoice::Lazyf => align_lazyf(profile, target, scheme, true),
            KernelChoice::LazyfNoexit => align_lazyf(profile, target, scheme, false),
            _ => align_scan(profile, target, scheme),
        },
        #[cfg(target_arch = "x86_64")]
        BackendChoice::Sse2 => {
            let mut b = crate::vector::Sse2::new();
            match kernel {
                KernelChoice::Lazyf => align_lazyf_with(&mut b, profile, target, scheme, true),
                KernelChoice::LazyfNoexit => {
                    align_lazyf_with(&mut b, profile, target, scheme, false)
                }
                _ => align_scan_with(&mut b, profile, target, scheme),
            }
        }
        #[cfg(not(target_arch = "x86_64"))]
        BackendChoice::Sse2 => Err(Error::Config("the sse2 backend needs x86_64".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_config(kernel: KernelChoice) -> RunConfig {
        RunConfig {
            kernel,
            lanes: 8,
            backend: BackendChoice::Reference,
            scoring: Scoring::MatchMismatch {
                match_score: 2,
                mismatch: -3,
            },
            gap_open: 5,
            gap_extend: 2,
            input: Input::Random {
                count: 12,
                len_min: 1,
                len_max: 40,
                seed: 9,
            },
            bench: 1,
            threads: 2,
        }
    }

    fn rows(config: &RunConfig) -> Vec<Row> {
        let scheme = config.validate().unwrap();
        let batch = load_batch(config, scheme.alphabet()).unwrap();
        align_batch(config, &scheme, &batch).unwrap()
    }

    #[test]
    fn kernel_names_round_trip() {
        for k in KernelChoice::ALL {
            assert_eq!(k.name().parse::<KernelChoice>().unwrap(), k);
        }
        assert!("simd".parse::<KernelChoice>().is_err());
    }

    #[test]
    fn striped_scores_match_scalar() {
        let scalar = rows(&random_config(KernelChoice::Scalar));
        for kernel in [
            KernelChoice::Lazyf,
            KernelChoice::LazyfNoexit,
            KernelChoice::Scan,
        ] {
            let got = rows(&random_config(kernel));
            assert_eq!(got.len(), scalar.len());
            for (a, b) in got.iter().zip(&scalar) {
                assert_eq!(
                    (&a.query_id, &a.target_id, a.score),
                    (&b.query_id, &b.target_id, b.score)
                );
                assert!(!a.overflow);
            }
        }
        assert!(scalar.iter().all(|r| r.lanes == 1 && r.vec_ops_total == 0));
    }

    #[test]
    fn tsv_ends_with_the_seed() {
        let mut out = Vec::new();
        let n = run(&random_config(KernelChoice::Scan), &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(n, 12);
        assert_eq!(lines.len(), 14);
        assert_eq!(lines[0], TSV_HEADER);
        assert_eq!(lines[13], "# seed=9");
        assert!(lines[1].starts_with("q0\tt0\tscan\t8\t"));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let bad = |f: &dyn Fn(&mut RunConfig)| {
            let mut c = random_config(KernelChoice::Scan);
            f(&mut c);
            c.validate().unwrap_err()
        };
        assert!(matches!(bad(&|c| c.lanes = 3), Error::InvalidLanes(3)));
        assert!(matches!(
            bad(&|c| c.gap_extend = 9),
            Error::InvalidScoring(_)
        ));
        assert!(matches!(bad(&|c| c.bench = 0), Error::Config(_)));
        assert!(matches!(
            bad(&|c| c.input = Input::Random {
                count: 1,
                len_min: 5,
                len_max: 4,
                seed: 0
            }),
            Error::Config(_)
        ));
        assert!(matches!(
            bad(&|c| {
                c.backend = BackendChoice::Sse2;
                c.lanes = 16;
            }),
            Error::Config(_)
        ));
        // lanes do not matter to the scalar kernel
        let mut c = random_config(KernelChoice::Scalar);
        c.lanes = 3;
        assert!(c.validate().is_ok());
    }
}
