//! Saturating unsigned score vectors and the backends that execute them.
//!
//! Every kernel is written against [`Backend`]. The [`Reference`] backend is
//! plain integer arithmetic over `[u16; P]` and defines the semantics; other
//! backends must produce bit-identical lanes and identical counters for the
//! same operation sequence.

mod counters;
mod reference;
#[cfg(target_arch = "x86_64")]
mod sse2;

pub use counters::OpCounters;
pub use reference::{Reference, ScoreVector};
#[cfg(target_arch = "x86_64")]
pub use sse2::Sse2;

use crate::error::{Error, Result};

/// Largest representable score.
pub const SCORE_MAX: u16 = u16::MAX;
pub const SCORE_BITS: u32 = 16;

pub const SUPPORTED_LANES: [usize; 6] = [2, 4, 8, 16, 32, 64];

/// Lane geometry of a vector backend.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorSpec {
    lanes: usize,
}

impl VectorSpec {
    pub fn new(lanes: usize) -> Result<Self> {
        if SUPPORTED_LANES.contains(&lanes) {
            Ok(Self { lanes })
        } else {
            Err(Error::InvalidLanes(lanes))
        }
    }

    #[inline]
    pub fn lanes(&self) -> usize {
        self.lanes
    }

    pub fn score_bits(&self) -> u32 {
        SCORE_BITS
    }

    /// Number of doubling steps a lane-wide scan needs: `ceil(log2 p)`.
    pub fn scan_steps(&self) -> u32 {
        self.lanes.next_power_of_two().trailing_zeros()
    }
}

/// Clamps a wide decay or penalty product to a subtraction constant.
#[inline]
pub fn clamp_score(value: u64) -> u16 {
    value.min(u64::from(SCORE_MAX)) as u16
}

/// Vector instruction set the kernels are written in.
///
/// Arithmetic is unsigned and saturating. Each operation is counted in the
/// backend's [`OpCounters`]; `sat_add` additionally raises a sticky flag when
/// any lane clamps at [`SCORE_MAX`].
pub trait Backend {
    const LANES: usize;
    type Vector: Copy + std::fmt::Debug;

    fn spec(&self) -> VectorSpec {
        VectorSpec { lanes: Self::LANES }
    }

    /// Broadcast. Not counted: kernels only splat constants during setup.
    fn splat(&mut self, value: u16) -> Self::Vector;

    fn zero(&mut self) -> Self::Vector {
        self.splat(0)
    }

    fn max(&mut self, a: Self::Vector, b: Self::Vector) -> Self::Vector;

    fn sat_add(&mut self, a: Self::Vector, b: Self::Vector) -> Self::Vector;

    /// Lane-wise `a - c`, clamped at zero.
    fn sat_sub(&mut self, a: Self::Vector, c: u16) -> Self::Vector;

    /// Moves lane `l` to lane `l + k`; the low `k` lanes become zero.
    fn shift_lanes_up(&mut self, a: Self::Vector, k: usize) -> Self::Vector;

    /// Horizontal maximum.
    fn lane_max(&mut self, a: Self::Vector) -> u16;

    /// True when some lane of `a` is strictly greater than the same lane of `b`.
    fn any_greater(&mut self, a: Self::Vector, b: Self::Vector) -> bool;

    fn load(&mut self, src: &Self::Vector) -> Self::Vector;

    fn store(&mut self, dst: &mut Self::Vector, value: Self::Vector);

    /// Counted load from a lane slice of length `LANES` (profile rows).
    fn load_lanes(&mut self, lanes: &[u16]) -> Self::Vector;

    /// Uncounted conversion used by tests and result extraction.
    #[allow(clippy::wrong_self_convention)]
    fn from_lanes(&self, lanes: &[u16]) -> Self::Vector;

    fn to_lanes(&self, v: Self::Vector) -> Vec<u16>;

    fn counters(&self) -> &OpCounters;

    fn counters_mut(&mut self) -> &mut OpCounters;

    /// Sticky: set once any `sat_add` lane clamped since the last reset.
    fn saturated(&self) -> bool;

    /// Clears counters and the saturation flag.
    fn reset(&mut self);
}
