use super::{Backend, OpCounters};

/// `P` lanes of unsigned 16-bit scores.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector<const P: usize>(pub [u16; P]);

impl<const P: usize> ScoreVector<P> {
    #[inline(always)]
    pub fn splat(value: u16) -> Self {
        Self([value; P])
    }

    #[inline(always)]
    pub fn lanes(&self) -> &[u16; P] {
        &self.0
    }

    #[inline(always)]
    pub fn max(self, other: Self) -> Self {
        let mut out = self.0;
        for (o, b) in out.iter_mut().zip(other.0) {
            *o = (*o).max(b);
        }
        Self(out)
    }

    /// Saturating add; the flag reports whether any lane clamped.
    #[inline(always)]
    pub fn sat_add(self, other: Self) -> (Self, bool) {
        let mut out = self.0;
        let mut clamped = false;
        for (o, b) in out.iter_mut().zip(other.0) {
            let (sum, carry) = o.overflowing_add(b);
            clamped |= carry;
            *o = if carry { u16::MAX } else { sum };
        }
        (Self(out), clamped)
    }

    #[inline(always)]
    pub fn sat_sub(self, c: u16) -> Self {
        let mut out = self.0;
        for o in out.iter_mut() {
            *o = o.saturating_sub(c);
        }
        Self(out)
    }

    #[inline(always)]
    pub fn shift_lanes_up(self, k: usize) -> Self {
        let mut out = [0u16; P];
        if k < P {
            out[k..].copy_from_slice(&self.0[..P - k]);
        }
        Self(out)
    }

    #[inline(always)]
    pub fn lane_max(self) -> u16 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    #[inline(always)]
    pub fn any_greater(self, other: Self) -> bool {
        self.0.iter().zip(other.0).any(|(&a, b)| a > b)
    }
}

impl<const P: usize> Default for ScoreVector<P> {
    fn default() -> Self {
        Self([0; P])
    }
}

impl<const P: usize> std::fmt::Debug for ScoreVector<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<const P: usize> From<[u16; P]> for ScoreVector<P> {
    fn from(lanes: [u16; P]) -> Self {
        Self(lanes)
    }
}

/// Portable, instrumented backend. Works for any lane count.
#[derive(Clone, Debug, Default)]
pub struct Reference<const P: usize> {
    counters: OpCounters,
    saturated: bool,
}

impl<const P: usize> Reference<P> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<const P: usize> Backend for Reference<P> {
    const LANES: usize = P;
    type Vector = ScoreVector<P>;

    #[inline(always)]
    fn splat(&mut self, value: u16) -> Self::Vector {
        ScoreVector::splat(value)
    }

    #[inline(always)]
    fn max(&mut self, a: Self::Vector, b: Self::Vector) -> Self::Vector {
        self.counters.maxes += 1;
        a.max(b)
    }

    #[inline(always)]
    fn sat_add(&mut self, a: Self::Vector, b: Self::Vector) -> Self::Vector {
        self.counters.sat_adds += 1;
        let (v, clamped) = a.sat_add(b);
        self.saturated |= clamped;
        v
    }

    #[inline(always)]
    fn sat_sub(&mut self, a: Self::Vector, c: u16) -> Self::Vector {
        self.counters.sat_subs += 1;
        a.sat_sub(c)
    }

    #[inline(always)]
    fn shift_lanes_up(&mut self, a: Self::Vector, k: usize) -> Self::Vector {
        self.counters.shifts += 1;
        a.shift_lanes_up(k)
    }

    #[inline(always)]
    fn lane_max(&mut self, a: Self::Vector) -> u16 {
        a.lane_max()
    }

    #[inline(always)]
    fn any_greater(&mut self, a: Self::Vector, b: Self::Vector) -> bool {
        self.counters.compares += 1;
        a.any_greater(b)
    }

    #[inline(always)]
    fn load(&mut self, src: &Self::Vector) -> Self::Vector {
        self.counters.loads += 1;
        *src
    }

    #[inline(always)]
    fn store(&mut self, dst: &mut Self::Vector, value: Self::Vector) {
        self.counters.stores += 1;
        *dst = value;
    }

    #[inline(always)]
    fn load_lanes(&mut self, lanes: &[u16]) -> Self::Vector {
        self.counters.loads += 1;
        self.from_lanes(lanes)
    }

    #[inline(always)]
    fn from_lanes(&self, lanes: &[u16]) -> Self::Vector {
        let mut out = [0u16; P];
        out.copy_from_slice(&lanes[..P]);
        ScoreVector(out)
    }

    fn to_lanes(&self, v: Self::Vector) -> Vec<u16> {
        v.0.to_vec()
    }

    fn counters(&self) -> &OpCounters {
        &self.counters
    }

    fn counters_mut(&mut self) -> &mut OpCounters {
        &mut self.counters
    }

    fn saturated(&self) -> bool {
        self.saturated
    }

    fn reset(&mut self) {
        self.counters.reset();
        self.saturated = false;
    }
}
