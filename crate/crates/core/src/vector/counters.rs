use std::ops::{Add, AddAssign, Sub};

/// Vector operations executed by a backend, by class.
///
/// `correction_passes` is maintained by the kernels rather than the backend:
/// it counts lazy-F passes that touched at least one segment.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpCounters {
    pub shifts: u64,
    pub sat_adds: u64,
    pub sat_subs: u64,
    pub maxes: u64,
    pub compares: u64,
    pub loads: u64,
    pub stores: u64,
    pub correction_passes: u64,
}

impl OpCounters {
    /// All vector instructions (passes are not instructions).
    pub fn vector_ops(&self) -> u64 {
        self.shifts
            + self.sat_adds
            + self.sat_subs
            + self.maxes
            + self.compares
            + self.loads
            + self.stores
    }

    /// Shift, max and subtract only: the arithmetic of a correction step.
    pub fn arithmetic_ops(&self) -> u64 {
        self.shifts + self.sat_subs + self.maxes
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.shifts += rhs.shifts;
        self.sat_adds += rhs.sat_adds;
        self.sat_subs += rhs.sat_subs;
        self.maxes += rhs.maxes;
        self.compares += rhs.compares;
        self.loads += rhs.loads;
        self.stores += rhs.stores;
        self.correction_passes += rhs.correction_passes;
    }
}

impl Add for OpCounters {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Sub for OpCounters {
    type Output = Self;

    /// Difference between a later and an earlier snapshot.
    fn sub(self, rhs: Self) -> Self {
        Self {
            shifts: self.shifts - rhs.shifts,
            sat_adds: self.sat_adds - rhs.sat_adds,
            sat_subs: self.sat_subs - rhs.sat_subs,
            maxes: self.maxes - rhs.maxes,
            compares: self.compares - rhs.compares,
            loads: self.loads - rhs.loads,
            stores: self.stores - rhs.stores,
            correction_passes: self.correction_passes - rhs.correction_passes,
        }
    }
}
