//! Ground truth for the vector kernels.
//!
//! Everything here is scalar code over plain integers and lane slices; none of
//! it goes through the [`Backend`](crate::vector::Backend) abstraction, so it
//! can check that abstraction independently.
//!
//! Orientation: row `i` is a reference position (one kernel column), column
//! `q` a query position. `E` is a gap along the reference (carried from row
//! `i - 1`), `F` a gap along the query (carried from column `q - 1`), the same
//! roles the striped kernels give them.

use crate::error::{Error, Result};
use crate::scoring::ScoringScheme;
use crate::vector::SCORE_MAX;

/// Full affine-gap dynamic-programming matrices, `(ref_len + 1) x (query_len + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpMatrices {
    rows: usize,
    cols: usize,
    pub h: Vec<i64>,
    pub e: Vec<i64>,
    pub f: Vec<i64>,
    pub best: i64,
}

impl DpMatrices {
    fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            h: vec![0; rows * cols],
            e: vec![0; rows * cols],
            f: vec![0; rows * cols],
            best: 0,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn index(&self, i: usize, q: usize) -> usize {
        i * self.cols + q
    }

    pub fn h_at(&self, i: usize, q: usize) -> i64 {
        self.h[self.index(i, q)]
    }

    pub fn e_at(&self, i: usize, q: usize) -> i64 {
        self.e[self.index(i, q)]
    }

    pub fn f_at(&self, i: usize, q: usize) -> i64 {
        self.f[self.index(i, q)]
    }
}

/// Exact local alignment score with unbounded integers.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ScalarScore(pub i64);

impl ScalarScore {
    /// Whether a 16-bit kernel would have to saturate on this instance.
    pub fn exceeds_score_max(self) -> bool {
        self.0 > i64::from(SCORE_MAX)
    }
}

fn check_symbols(seq: &[u8], scheme: &ScoringScheme) -> Result<()> {
    match seq.iter().position(|&s| usize::from(s) >= scheme.size()) {
        Some(position) => Err(Error::SymbolOutOfAlphabet {
            symbol: char::from(seq[position]),
            position,
        }),
        None => Ok(()),
    }
}

/// Gotoh recurrences with all three matrices kept.
pub fn sw_scalar(
    query: &[u8],
    reference: &[u8],
    scheme: &ScoringScheme,
) -> Result<(ScalarScore, DpMatrices)> {
    check_symbols(query, scheme)?;
    check_symbols(reference, scheme)?;
    let go = i64::from(scheme.gap_open());
    let ge = i64::from(scheme.gap_extend());
    let mut m = DpMatrices::zeros(reference.len() + 1, query.len() + 1);

    for i in 1..m.rows {
        for q in 1..m.cols {
            let up = m.index(i - 1, q);
            let left = m.index(i, q - 1);
            let diag = m.index(i - 1, q - 1);
            let here = m.index(i, q);
            let e = (m.e[up] - ge).max(m.h[up] - go).max(0);
            let f = (m.f[left] - ge).max(m.h[left] - go).max(0);
            let sub = i64::from(scheme.substitution(reference[i - 1], query[q - 1]));
            let h = (m.h[diag] + sub).max(e).max(f).max(0);
            m.e[here] = e;
            m.f[here] = f;
            m.h[here] = h;
            m.best = m.best.max(h);
        }
    }
    Ok((ScalarScore(m.best), m))
}

/// Same recurrences as [`sw_scalar`] in linear memory.
pub fn sw_scalar_score(
    query: &[u8],
    reference: &[u8],
    scheme: &ScoringScheme,
) -> Result<ScalarScore> {
    check_symbols(query, scheme)?;
    check_symbols(reference, scheme)?;
    let go = i64::from(scheme.gap_open());
    let ge = i64::from(scheme.gap_extend());
    let n = query.len();
    // previous reference row of H and E, indexed by query position
    let mut h_prev = vec![0i64; n + 1];
    let mut e_row = vec![0i64; n + 1];
    let mut h_cur = vec![0i64; n + 1];
    let mut best = 0;

    for &r in reference {
        let mut f = 0i64;
        h_cur[0] = 0;
        for q in 1..=n {
            let e = (e_row[q] - ge).max(h_prev[q] - go).max(0);
            f = (f - ge).max(h_cur[q - 1] - go).max(0);
            let sub = i64::from(scheme.substitution(r, query[q - 1]));
            let h = (h_prev[q - 1] + sub).max(e).max(f).max(0);
            e_row[q] = e;
            h_cur[q] = h;
            best = best.max(h);
        }
        std::mem::swap(&mut h_prev, &mut h_cur);
    }
    Ok(ScalarScore(best))
}

fn shift_up_one(v: &mut [u16]) {
    v.rotate_right(1);
    v[0] = 0;
}

/// The lazy-F correction run to completion: `p` passes over all segments,
/// no early exit. Updates `h_store` in place and returns the residual `F`.
pub fn correct_lazyf_full(f: &[u16], h_store: &mut [Vec<u16>], gap_extend: u16) -> Vec<u16> {
    let mut f = f.to_vec();
    for _pass in 0..f.len() {
        shift_up_one(&mut f);
        for h in h_store.iter_mut() {
            for (h, &fl) in h.iter_mut().zip(&f) {
                *h = (*h).max(fl);
            }
            for fl in f.iter_mut() {
                *fl = fl.saturating_sub(gap_extend);
            }
        }
    }
    f
}

/// Decaying prefix maximum across lanes, one lane per step:
/// `Fj = 0; repeat p times { F <<= 1; Fj = max(Fj, F); F -= decay }`.
pub fn scan_sequential(f: &[u16], decay: u16) -> Vec<u16> {
    let mut f = f.to_vec();
    let mut acc = vec![0u16; f.len()];
    for _ in 0..f.len() {
        shift_up_one(&mut f);
        for (a, &fl) in acc.iter_mut().zip(&f) {
            *a = (*a).max(fl);
        }
        for fl in f.iter_mut() {
            *fl = fl.saturating_sub(decay);
        }
    }
    acc
}
