use super::{check_inputs, AlignmentResult, CorrectionStats, KernelState};
use crate::error::Result;
use crate::profile::QueryProfile;
use crate::scoring::ScoringScheme;
use crate::vector::Backend;

/// Striped kernel with the lazy-F correction loop.
///
/// With `early_exit` the correction stops at the first segment where the
/// carried `F` exceeds `H - gap_open` in no lane: from there on the in-lane
/// `F` computed by the main loop already dominates it. Without it, every
/// column runs all `p` passes.
pub fn align_lazyf_with<B: Backend>(
    b: &mut B,
    profile: &QueryProfile,
    reference: &[u8],
    scheme: &ScoringScheme,
    early_exit: bool,
) -> Result<AlignmentResult> {
    check_inputs::<B>(profile, reference, scheme)?;
    b.reset();

    let seg_len = profile.seg_len();
    let bias = scheme.bias();
    let gap_open = scheme.gap_open();
    let gap_extend = scheme.gap_extend();

    let zero = b.zero();
    let mut st = KernelState::new(seg_len, zero);
    let mut correction = CorrectionStats::default();

    for &symbol in reference {
        let mut f = zero;
        let last = b.load(&st.h_store[seg_len - 1]);
        let mut h = b.shift_lanes_up(last, 1);
        std::mem::swap(&mut st.h_load, &mut st.h_store);

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
        }

        let before = *b.counters();
        lazy_f(b, &mut st, f, gap_open, gap_extend, early_exit);
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

/// Pushes `f` across lane boundaries into `h_store`. `E` is left alone: a
/// vertical gap turning into a horizontal one costs the same as the mirrored
/// turn, which the main loop already scores.
fn lazy_f<B: Backend>(
    b: &mut B,
    st: &mut KernelState<B::Vector>,
    mut f: B::Vector,
    gap_open: u16,
    gap_extend: u16,
    early_exit: bool,
) {
    for _pass in 0..B::LANES {
        f = b.shift_lanes_up(f, 1);
        for j in 0..st.h_store.len() {
            let h = b.load(&st.h_store[j]);
            if early_exit {
                let h_open = b.sat_sub(h, gap_open);
                if !b.any_greater(f, h_open) {
                    return;
                }
            }
            if j == 0 {
                b.counters_mut().correction_passes += 1;
            }
            let h = b.max(h, f);
            b.store(&mut st.h_store[j], h);

            f = b.sat_sub(f, gap_extend);
        }
    }
}
