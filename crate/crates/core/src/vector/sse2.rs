//! 8 x u16 backend on SSE2, which every x86_64 CPU provides.

use std::arch::x86_64::*;

use super::{Backend, OpCounters};

#[derive(Clone, Debug, Default)]
pub struct Sse2 {
    counters: OpCounters,
    saturated: bool,
}

impl Sse2 {
    pub fn new() -> Self {
        Self::default()
    }
}

// SAFETY (all `unsafe` blocks below): SSE2 is part of the x86_64 baseline,
// so the intrinsics are always available; none of them touch memory unless
// noted at the call site.

#[inline(always)]
fn max_epu16(a: __m128i, b: __m128i) -> __m128i {
    // SSE2 has no unsigned 16-bit max: (a -sat b) + b == max(a, b).
    unsafe { _mm_adds_epu16(_mm_subs_epu16(a, b), b) }
}

#[inline(always)]
fn shift_lanes(a: __m128i, k: usize) -> __m128i {
    unsafe {
        match k {
            0 => a,
            1 => _mm_slli_si128::<2>(a),
            2 => _mm_slli_si128::<4>(a),
            3 => _mm_slli_si128::<6>(a),
            4 => _mm_slli_si128::<8>(a),
            5 => _mm_slli_si128::<10>(a),
            6 => _mm_slli_si128::<12>(a),
            7 => _mm_slli_si128::<14>(a),
            _ => _mm_setzero_si128(),
        }
    }
}

impl Backend for Sse2 {
    const LANES: usize = 8;
    type Vector = __m128i;

    #[inline(always)]
    fn splat(&mut self, value: u16) -> __m128i {
        unsafe { _mm_set1_epi16(value as i16) }
    }

    #[inline(always)]
    fn max(&mut self, a: __m128i, b: __m128i) -> __m128i {
        self.counters.maxes += 1;
        max_epu16(a, b)
    }

    #[inline(always)]
    fn sat_add(&mut self, a: __m128i, b: __m128i) -> __m128i {
        self.counters.sat_adds += 1;
        let (sat, same) = unsafe {
            let sat = _mm_adds_epu16(a, b);
            let wrapped = _mm_add_epi16(a, b);
            (sat, _mm_movemask_epi8(_mm_cmpeq_epi16(sat, wrapped)))
        };
        self.saturated |= same != 0xFFFF;
        sat
    }

    #[inline(always)]
    fn sat_sub(&mut self, a: __m128i, c: u16) -> __m128i {
        self.counters.sat_subs += 1;
        unsafe { _mm_subs_epu16(a, _mm_set1_epi16(c as i16)) }
    }

    #[inline(always)]
    fn shift_lanes_up(&mut self, a: __m128i, k: usize) -> __m128i {
        self.counters.shifts += 1;
        shift_lanes(a, k)
    }

    fn lane_max(&mut self, a: __m128i) -> u16 {
        self.to_lanes(a).into_iter().max().unwrap_or(0)
    }

    #[inline(always)]
    fn any_greater(&mut self, a: __m128i, b: __m128i) -> bool {
        self.counters.compares += 1;
        // a > b somewhere  <=>  (a -sat b) is non-zero somewhere
        unsafe {
            let diff = _mm_subs_epu16(a, b);
            _mm_movemask_epi8(_mm_cmpeq_epi16(diff, _mm_setzero_si128())) != 0xFFFF
        }
    }

    #[inline(always)]
    fn load(&mut self, src: &__m128i) -> __m128i {
        self.counters.loads += 1;
        *src
    }

    #[inline(always)]
    fn store(&mut self, dst: &mut __m128i, value: __m128i) {
        self.counters.stores += 1;
        *dst = value;
    }

    #[inline(always)]
    fn load_lanes(&mut self, lanes: &[u16]) -> __m128i {
        self.counters.loads += 1;
        self.from_lanes(lanes)
    }

    #[inline(always)]
    fn from_lanes(&self, lanes: &[u16]) -> __m128i {
        let lanes = &lanes[..8];
        // SAFETY: `lanes` holds 8 u16 = 16 readable bytes; loadu has no
        // alignment requirement.
        unsafe { _mm_loadu_si128(lanes.as_ptr().cast()) }
    }

    fn to_lanes(&self, v: __m128i) -> Vec<u16> {
        let mut out = [0u16; 8];
        // SAFETY: `out` is 16 writable bytes; storeu has no alignment requirement.
        unsafe { _mm_storeu_si128(out.as_mut_ptr().cast(), v) };
        out.to_vec()
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
