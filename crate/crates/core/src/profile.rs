//! Striped query profiles.
//!
//! Query position `q` lives in segment `j`, lane `l` with `q = l * seg_len + j`,
//! so consecutive positions of one lane sit in consecutive segment vectors and
//! the lanes of one vector are `seg_len` positions apart.

use crate::error::{Error, Result};
use crate::scoring::ScoringScheme;
use crate::vector::VectorSpec;

/// Number of segment vectors covering a query of `query_len` residues.
#[inline]
pub fn segment_count(query_len: usize, lanes: usize) -> usize {
    query_len.div_ceil(lanes)
}

/// Segment and lane holding query position `position`.
pub fn stripe_index(position: usize, seg_len: usize, lanes: usize) -> Result<(usize, usize)> {
    let len = seg_len * lanes;
    if position >= len {
        return Err(Error::PositionOutOfRange { position, len });
    }
    Ok((position % seg_len, position / seg_len))
}

/// Inverse of [`stripe_index`].
#[inline]
pub fn stripe_position(segment: usize, lane: usize, seg_len: usize) -> usize {
    lane * seg_len + segment
}

/// Biased substitution scores for every (symbol, segment) pair.
///
/// Lane `l` of `vector(a, j)` holds `bias + substitution(a, query[l*seg_len + j])`,
/// or 0 past the end of the query. Zero is the most punitive value once the
/// bias is taken back off, so padding can never raise a score.
#[derive(Clone, Debug)]
pub struct QueryProfile {
    spec: VectorSpec,
    seg_len: usize,
    query_len: usize,
    scheme: ScoringScheme,
    // [symbol][segment][lane]
    data: Vec<u16>,
}

impl QueryProfile {
    pub fn build(query: &[u8], scheme: &ScoringScheme, spec: VectorSpec) -> Result<Self> {
        if query.is_empty() {
            return Err(Error::EmptyQuery);
        }
        let alphabet_size = scheme.size();
        if let Some((position, &s)) = query
            .iter()
            .enumerate()
            .find(|(_, &s)| usize::from(s) >= alphabet_size)
        {
            return Err(Error::SymbolOutOfAlphabet {
                symbol: char::from(s),
                position,
            });
        }

        let p = spec.lanes();
        let seg_len = segment_count(query.len(), p);
        let bias = i32::from(scheme.bias());
        let mut data = vec![0u16; alphabet_size * seg_len * p];
        for (symbol, block) in data.chunks_exact_mut(seg_len * p).enumerate() {
            for (segment, lanes) in block.chunks_exact_mut(p).enumerate() {
                for (lane, slot) in lanes.iter_mut().enumerate() {
                    if let Some(&residue) = query.get(stripe_position(segment, lane, seg_len)) {
                        *slot = (bias + scheme.substitution(symbol as u8, residue)) as u16;
                    }
                }
            }
        }

        Ok(Self {
            spec,
            seg_len,
            query_len: query.len(),
            scheme: scheme.clone(),
            data,
        })
    }

    pub fn spec(&self) -> VectorSpec {
        self.spec
    }

    pub fn lanes(&self) -> usize {
        self.spec.lanes()
    }

    pub fn seg_len(&self) -> usize {
        self.seg_len
    }

    pub fn query_len(&self) -> usize {
        self.query_len
    }

    pub fn bias(&self) -> u16 {
        self.scheme.bias()
    }

    pub fn scheme(&self) -> &ScoringScheme {
        &self.scheme
    }

    /// Lanes of the profile vector for reference symbol `symbol`, segment `segment`.
    #[inline]
    pub fn vector(&self, symbol: u8, segment: usize) -> &[u16] {
        let p = self.spec.lanes();
        let start = (usize::from(symbol) * self.seg_len + segment) * p;
        &self.data[start..start + p]
    }
}
