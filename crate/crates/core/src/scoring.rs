//! Substitution scores and affine gap penalties.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

pub const MIN_SUBSTITUTION: i32 = -127;
pub const MAX_SUBSTITUTION: i32 = 127;

/// Scoring for local alignment with affine gaps.
///
/// A gap of length `L` costs `gap_open + (L - 1) * gap_extend`. The bias is the
/// smallest non-negative offset that makes every substitution score
/// non-negative; striped kernels add it with the profile and subtract it
/// again so that all vector arithmetic stays unsigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoringScheme {
    alphabet: Alphabet,
    size: usize,
    table: Vec<i8>,
    gap_open: u16,
    gap_extend: u16,
    bias: u16,
}

impl ScoringScheme {
    /// Uniform match/mismatch scoring. The wildcard (if any) scores
    /// `mismatch` against every index, itself included.
    pub fn match_mismatch(
        alphabet: Alphabet,
        match_score: i32,
        mismatch: i32,
        gap_open: u32,
        gap_extend: u32,
    ) -> Result<Self> {
        let n = alphabet.len();
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| if a == b { match_score } else { mismatch })
                    .collect()
            })
            .collect::<Vec<Vec<i32>>>();
        Self::from_rows(alphabet, &rows, mismatch, gap_open, gap_extend)
    }

    /// Builds a scheme from a full `len x len` matrix over the regular symbols.
    pub fn from_rows(
        alphabet: Alphabet,
        rows: &[Vec<i32>],
        wildcard_score: i32,
        gap_open: u32,
        gap_extend: u32,
    ) -> Result<Self> {
        let n = alphabet.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidScoring(format!(
                "substitution matrix must be {n}x{n}"
            )));
        }
        if gap_extend < 1 || gap_open < gap_extend {
            return Err(Error::InvalidScoring(format!(
                "gap penalties must satisfy gap_open >= gap_extend >= 1 (got {gap_open}, {gap_extend})"
            )));
        }
        if gap_open > u32::from(u16::MAX) {
            return Err(Error::InvalidScoring(format!(
                "gap_open {gap_open} is too large"
            )));
        }
        let check = |v: i32| -> Result<i8> {
            if (MIN_SUBSTITUTION..=MAX_SUBSTITUTION).contains(&v) {
                Ok(v as i8)
            } else {
                Err(Error::InvalidScoring(format!(
                    "substitution score {v} outside [{MIN_SUBSTITUTION}, {MAX_SUBSTITUTION}]"
                )))
            }
        };
        let wildcard = check(wildcard_score)?;

        let size = alphabet.encoded_size();
        let mut table = vec![wildcard; size * size];
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                table[a * size + b] = check(v)?;
            }
        }
        let min = table.iter().copied().min().map_or(0, i32::from);
        let bias = (-min).max(0) as u16;

        Ok(Self {
            alphabet,
            size,
            table,
            gap_open: gap_open as u16,
            gap_extend: gap_extend as u16,
            bias,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of encoded symbol indices the table covers.
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn substitution(&self, a: u8, b: u8) -> i32 {
        i32::from(self.table[usize::from(a) * self.size + usize::from(b)])
    }

    pub fn gap_open(&self) -> u16 {
        self.gap_open
    }

    pub fn gap_extend(&self) -> u16 {
        self.gap_extend
    }

    pub fn bias(&self) -> u16 {
        self.bias
    }

    pub fn max_substitution(&self) -> i32 {
        self.table.iter().copied().max().map_or(0, i32::from)
    }

    pub fn with_gaps(&self, gap_open: u32, gap_extend: u32) -> Result<Self> {
        let n = self.alphabet.len();
        let rows = (0..n as u8)
            .map(|a| (0..n as u8).map(|b| self.substitution(a, b)).collect())
            .collect::<Vec<Vec<i32>>>();
        let wildcard = match self.alphabet.wildcard_index() {
            Some(w) => self.substitution(w, 0),
            None => 0,
        };
        Self::from_rows(self.alphabet.clone(), &rows, wildcard, gap_open, gap_extend)
    }
}

/// A substitution matrix as read from a plain-text file.
///
/// The first significant line lists the symbols separated by whitespace,
/// followed by one line of integers per symbol (row = first symbol). Blank
/// lines and lines starting with `#` are skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionMatrix {
    pub symbols: Vec<u8>,
    pub rows: Vec<Vec<i32>>,
}

impl SubstitutionMatrix {
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, reason: String| Error::MalformedMatrix { line, reason };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or_else(|| bad(1, "empty matrix".into()))?;
        let mut symbols = Vec::new();
        for token in header.split_whitespace() {
            match token.as_bytes() {
                [s] if s.is_ascii_graphic() => symbols.push(s.to_ascii_uppercase()),
                _ => {
                    return Err(bad(
                        header_line,
                        format!("symbol {token:?} is not a single printable character"),
                    ))
                }
            }
        }

        let n = symbols.len();
        let mut rows = Vec::with_capacity(n);
        for (line, content) in lines {
            if rows.len() == n {
                return Err(bad(line, format!("more than {n} rows")));
            }
            let row = content
                .split_whitespace()
                .map(|t| {
                    t.parse::<i32>()
                        .map_err(|_| bad(line, format!("{t:?} is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(bad(
                    line,
                    format!("expected {n} scores, found {}", row.len()),
                ));
            }
            if let Some(v) = row
                .iter()
                .find(|v| !(MIN_SUBSTITUTION..=MAX_SUBSTITUTION).contains(*v))
            {
                return Err(bad(line, format!("score {v} out of range")));
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(bad(
                text.lines().count().max(1),
                format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        Ok(Self { symbols, rows })
    }

    /// Alphabet for this matrix. `X` becomes the wildcard unless the matrix
    /// already scores it explicitly.
    pub fn alphabet(&self) -> Result<Alphabet> {
        let wildcard = (!self.symbols.contains(&b'X')).then_some(b'X');
        Alphabet::new(&self.symbols, wildcard)
    }

    pub fn into_scheme(
        self,
        wildcard_score: i32,
        gap_open: u32,
        gap_extend: u32,
    ) -> Result<ScoringScheme> {
        let alphabet = self.alphabet().map_err(|e| match e {
            Error::InvalidScoring(reason) => Error::MalformedMatrix { line: 1, reason },
            other => other,
        })?;
        ScoringScheme::from_rows(alphabet, &self.rows, wildcard_score, gap_open, gap_extend)
    }
}
