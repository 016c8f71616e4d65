//! Cross-lane `F` corrections.
//!
//! After the main segment loop, `F` still holds the vertical-gap value leaving
//! the last segment of each lane; it has to be pushed into the next lane and
//! down its segments. The routines below are successive rewrites of that
//! propagation. They all take the same input and leave `h_store` in exactly
//! the same state as the full p-pass lazy-F loop.

use crate::vector::{clamp_score, Backend};

/// Separates the `F` propagation from the `H` update: the propagated maxima
/// are accumulated per segment first, then applied in one pass.
pub fn correct_separated<B: Backend>(
    b: &mut B,
    f: B::Vector,
    h_store: &mut [B::Vector],
    gap_extend: u16,
) {
    let zero = b.zero();
    let mut f_store = vec![zero; h_store.len()];
    let mut f = f;
    for _ in 0..B::LANES {
        f = b.shift_lanes_up(f, 1);
        for slot in f_store.iter_mut() {
            let acc = b.load(slot);
            let acc = b.max(acc, f);
            b.store(slot, acc);
            f = b.sat_sub(f, gap_extend);
        }
    }
    apply(b, h_store, &f_store);
}

/// Swaps the pass and segment loops. Segment `j` starts from `F` decayed by
/// `j * gap_extend`; each pass then decays by a whole lane, `seg_len * gap_extend`.
pub fn correct_inverted<B: Backend>(
    b: &mut B,
    f: B::Vector,
    h_store: &mut [B::Vector],
    gap_extend: u16,
) {
    let lane_decay = clamp_score(h_store.len() as u64 * u64::from(gap_extend));
    let zero = b.zero();
    let mut f_store = vec![zero; h_store.len()];
    let mut f = f;
    for slot in f_store.iter_mut() {
        let mut fj = f;
        for _ in 0..B::LANES {
            fj = b.shift_lanes_up(fj, 1);
            let acc = b.load(slot);
            let acc = b.max(acc, fj);
            b.store(slot, acc);
            fj = b.sat_sub(fj, lane_decay);
        }
        f = b.sat_sub(f, gap_extend);
    }
    apply(b, h_store, &f_store);
}

/// All segments share one propagated vector up to a constant, so it is
/// computed once (sequentially, one lane per step) and decayed per segment.
pub fn correct_scan<B: Backend>(
    b: &mut B,
    f: B::Vector,
    h_store: &mut [B::Vector],
    gap_extend: u16,
) {
    let lane_decay = clamp_score(h_store.len() as u64 * u64::from(gap_extend));
    let mut fj = linear_max_scan(b, f, lane_decay);
    for slot in h_store.iter_mut() {
        let h = b.load(slot);
        let h = b.max(h, fj);
        b.store(slot, h);
        fj = b.sat_sub(fj, gap_extend);
    }
}

/// `p` sequential steps of `F <<= 1; acc = max(acc, F); F -= decay`.
pub fn linear_max_scan<B: Backend>(b: &mut B, f: B::Vector, decay: u16) -> B::Vector {
    let mut acc = b.zero();
    let mut f = f;
    for _ in 0..B::LANES {
        f = b.shift_lanes_up(f, 1);
        acc = b.max(acc, f);
        f = b.sat_sub(f, decay);
    }
    acc
}

/// Decaying prefix maximum in `log2 p` doubling steps.
///
/// Lane `l` of the result is `max_{1 <= k <= l} (f[l - k] - (k - 1) * decay)`,
/// clamped at zero, with lane 0 equal to zero. Each step `s` folds in the
/// partial maxima `2^s` lanes below at a cost of `2^s * decay`.
pub fn weighted_max_scan<B: Backend>(b: &mut B, f: B::Vector, decay: u16) -> B::Vector {
    let mut acc = b.shift_lanes_up(f, 1);
    let mut span = 1;
    while span < B::LANES {
        let below = b.shift_lanes_up(acc, span);
        let below = b.sat_sub(below, clamp_score(span as u64 * u64::from(decay)));
        acc = b.max(acc, below);
        span *= 2;
    }
    acc
}

fn apply<B: Backend>(b: &mut B, h_store: &mut [B::Vector], f_store: &[B::Vector]) {
    for (slot, fs) in h_store.iter_mut().zip(f_store) {
        let h = b.load(slot);
        let fs = b.load(fs);
        let h = b.max(h, fs);
        b.store(slot, h);
    }
}
