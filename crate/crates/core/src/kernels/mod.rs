//! Striped Smith-Waterman kernels.
//!
//! Both kernels walk the reference one column at a time and the query in
//! `seg_len` striped segments. Within a column the segment loop only sees the
//! vertical gap `F` of its own lane; the kernels differ in how they move `F`
//! across lanes:
//!
//! * [`align_lazyf`] re-walks the segments up to `p` times after every column,
//!   optionally stopping once `F` can no longer improve anything.
//! * [`align_scan`] computes the cross-lane carry with a `log2 p` step scan
//!   and folds it into the next column's loads, so no second pass exists.

pub mod correction;
mod lazyf;
mod scan;

pub use correction::{
    correct_inverted, correct_scan, correct_separated, linear_max_scan, weighted_max_scan,
};
pub use lazyf::align_lazyf_with;
pub use scan::align_scan_with;

use crate::error::{Error, Result};
use crate::profile::QueryProfile;
use crate::scoring::ScoringScheme;
use crate::vector::{Backend, OpCounters, Reference, ScoreVector};

/// Runs `$body` with `$p` bound to a `const usize` equal to `$lanes`.
#[macro_export]
macro_rules! with_lanes {
    ($lanes:expr, $p:ident => $body:expr) => {
        match $lanes {
            2 => {
                const $p: usize = 2;
                $body
            }
            4 => {
                const $p: usize = 4;
                $body
            }
            8 => {
                const $p: usize = 8;
                $body
            }
            16 => {
                const $p: usize = 16;
                $body
            }
            32 => {
                const $p: usize = 32;
                $body
            }
            64 => {
                const $p: usize = 64;
                $body
            }
            other => return Err($crate::Error::InvalidLanes(other)),
        }
    };
}

/// Per-alignment working set.
#[derive(Clone, Debug)]
pub struct KernelState<V> {
    pub e: Vec<V>,
    pub h_load: Vec<V>,
    pub h_store: Vec<V>,
    pub f: V,
    pub fj: V,
    pub max: V,
}

impl<V: Copy> KernelState<V> {
    pub fn new(seg_len: usize, zero: V) -> Self {
        Self {
            e: vec![zero; seg_len],
            h_load: vec![zero; seg_len],
            h_store: vec![zero; seg_len],
            f: zero,
            fj: zero,
            max: zero,
        }
    }
}

/// Work done by the cross-lane correction phase.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorrectionStats {
    pub columns: u64,
    /// Summed over all columns.
    pub ops: OpCounters,
    /// The per-column counters when every column did exactly the same work.
    pub uniform_column_ops: Option<OpCounters>,
    pub min_column_passes: u64,
    pub max_column_passes: u64,
}

impl CorrectionStats {
    fn record(&mut self, column: OpCounters) {
        if self.columns == 0 {
            self.uniform_column_ops = Some(column);
            self.min_column_passes = column.correction_passes;
            self.max_column_passes = column.correction_passes;
        } else {
            if self.uniform_column_ops != Some(column) {
                self.uniform_column_ops = None;
            }
            self.min_column_passes = self.min_column_passes.min(column.correction_passes);
            self.max_column_passes = self.max_column_passes.max(column.correction_passes);
        }
        self.columns += 1;
        self.ops += column;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignmentResult {
    /// Best local score. Exact unless `overflow` is set.
    pub score: u16,
    /// Some addition clamped at the score ceiling; `score` is unreliable.
    pub overflow: bool,
    pub counters: OpCounters,
    pub correction: CorrectionStats,
}

impl AlignmentResult {
    /// Lazy-F passes that updated at least one segment, over all columns.
    pub fn correction_passes(&self) -> u64 {
        self.counters.correction_passes
    }

    pub fn vector_ops(&self) -> u64 {
        self.counters.vector_ops()
    }
}

fn check_inputs<B: Backend>(
    profile: &QueryProfile,
    reference: &[u8],
    scheme: &ScoringScheme,
) -> Result<()> {
    if profile.lanes() != B::LANES {
        return Err(Error::ProfileMismatch("lane count"));
    }
    if profile.scheme() != scheme {
        return Err(Error::ProfileMismatch("scoring scheme"));
    }
    match reference
        .iter()
        .position(|&s| usize::from(s) >= scheme.size())
    {
        Some(position) => Err(Error::SymbolOutOfAlphabet {
            symbol: char::from(reference[position]),
            position,
        }),
        None => Ok(()),
    }
}

/// Lazy-F kernel on the reference backend at the profile's lane count.
pub fn align_lazyf(
    profile: &QueryProfile,
    reference: &[u8],
    scheme: &ScoringScheme,
    early_exit: bool,
) -> Result<AlignmentResult> {
    with_lanes!(profile.lanes(), P => {
        align_lazyf_with(&mut Reference::<P>::new(), profile, reference, scheme, early_exit)
    })
}

/// Scan kernel on the reference backend at the profile's lane count.
pub fn align_scan(
    profile: &QueryProfile,
    reference: &[u8],
    scheme: &ScoringScheme,
) -> Result<AlignmentResult> {
    with_lanes!(profile.lanes(), P => {
        align_scan_with(&mut Reference::<P>::new(), profile, reference, scheme)
    })
}

type LaneCorrection<const P: usize> =
    fn(&mut Reference<P>, ScoreVector<P>, &mut [ScoreVector<P>], u16);

fn on_lanes<const P: usize>(
    routine: LaneCorrection<P>,
    f: &[u16],
    h_store: &mut [Vec<u16>],
    gap_extend: u16,
) -> Result<()> {
    if f.len() != P || h_store.iter().any(|h| h.len() != P) {
        return Err(Error::InvalidLanes(f.len()));
    }
    let mut b = Reference::<P>::new();
    let f = b.from_lanes(f);
    let mut hs: Vec<ScoreVector<P>> = h_store.iter().map(|h| b.from_lanes(h)).collect();
    routine(&mut b, f, &mut hs, gap_extend);
    for (dst, src) in h_store.iter_mut().zip(&hs) {
        dst.copy_from_slice(&src.0);
    }
    Ok(())
}

/// Which rewrite of the correction loop to run on plain lane arrays.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CorrectionRoutine {
    Separated,
    Inverted,
    Scan,
}

/// Runs a correction routine on lane slices; the lane count is `f.len()`.
pub fn correct_lanes(
    routine: CorrectionRoutine,
    f: &[u16],
    h_store: &mut [Vec<u16>],
    gap_extend: u16,
) -> Result<()> {
    with_lanes!(f.len(), P => {
        let r: LaneCorrection<P> = match routine {
            CorrectionRoutine::Separated => correct_separated::<Reference<P>>,
            CorrectionRoutine::Inverted => correct_inverted::<Reference<P>>,
            CorrectionRoutine::Scan => correct_scan::<Reference<P>>,
        };
        on_lanes::<P>(r, f, h_store, gap_extend)
    })
}

/// [`weighted_max_scan`] on a lane slice; the lane count is `f.len()`.
pub fn weighted_max_scan_lanes(f: &[u16], decay: u16) -> Result<Vec<u16>> {
    with_lanes!(f.len(), P => {
        let mut b = Reference::<P>::new();
        let v = b.from_lanes(f);
        Ok(weighted_max_scan(&mut b, v, decay).0.to_vec())
    })
}
