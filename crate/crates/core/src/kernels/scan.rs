use super::correction::weighted_max_scan;
use super::{check_inputs, AlignmentResult, CorrectionStats, KernelState};
use crate::error::Result;
use crate::profile::QueryProfile;
use crate::scoring::ScoringScheme;
use crate::vector::{clamp_score, Backend};

/// Striped kernel with a log-step scan in place of the lazy-F loop.
///
/// At the end of column `i` the scan turns the lane-final `F` into the carry
/// `Fj` each lane receives at its segment 0. Column `i` itself is never
/// rewritten: column `i + 1` applies `Fj - j * gap_extend` to segment `j` as it
/// loads the diagonal (`HLoad[j]`).
///
/// The carry is built from the current column's `F` only and lives in
/// `st.fj` across columns; it starts at zero.
pub fn align_scan_with<B: Backend>(
    b: &mut B,
    profile: &QueryProfile,
    reference: &[u8],
    scheme: &ScoringScheme,
) -> Result<AlignmentResult> {
    check_inputs::<B>(profile, reference, scheme)?;
    b.reset();

    let seg_len = profile.seg_len();
    let bias = scheme.bias();
    let gap_open = scheme.gap_open();
    let gap_extend = scheme.gap_extend();
    let lane_decay = clamp_score(seg_len as u64 * u64::from(gap_extend));
    let last_decay = clamp_score((seg_len as u64 - 1) * u64::from(gap_extend));

    let zero = b.zero();
    let mut st = KernelState::new(seg_len, zero);
    let mut correction = CorrectionStats::default();

    for &symbol in reference {
        let mut f = zero;
        let mut h = b.load(&st.h_store[seg_len - 1]);
        let carried = b.sat_sub(st.fj, last_decay);
        h = b.max(h, carried);
        h = b.shift_lanes_up(h, 1);
        std::mem::swap(&mut st.h_load, &mut st.h_store);

        let mut fj = st.fj;
        for j in 0..seg_len {
            let prof = b.load_lanes(profile.vector(symbol, j));
            h = b.sat_add(h, prof);
            h = b.sat_sub(h, bias);
            st.max = b.max(st.max, h);

            let e = b.load(&st.e[j]);
            h = b.max(h, e);
            h = b.max(h, f);
            b.store(&mut st.h_store[j], h);

            let h_open = b.sat_sub(h, gap_open);
            let e = b.sat_sub(e, gap_extend);
            let e = b.max(e, h_open);
            b.store(&mut st.e[j], e);

            f = b.sat_sub(f, gap_extend);
            f = b.max(f, h_open);

            h = b.load(&st.h_load[j]);
            h = b.max(h, fj);
            fj = b.sat_sub(fj, gap_extend);
        }

        let before = *b.counters();
        st.fj = weighted_max_scan(b, f, lane_decay);
        let column = *b.counters() - before;
        correction.record(column);
    }

    let score = b.lane_max(st.max);
    Ok(AlignmentResult {
        score,
        overflow: b.saturated(),
        counters: *b.counters(),
        correction,
    })
}
