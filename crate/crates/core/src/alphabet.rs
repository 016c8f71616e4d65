//! Residue alphabets and sequence encoding.
//!
//! Symbols are mapped to dense indices `0..len()`. An optional wildcard takes
//! the index right after the last symbol; scoring schemes give it the
//! mismatch score against everything.

use crate::error::{Error, Result};

const UNMAPPED: u8 = u8::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    wildcard: Option<u8>,
    lookup: [u8; 256],
}

impl Alphabet {
    /// Builds an alphabet from ASCII symbols. Duplicates, non-graphic bytes
    /// and a wildcard that is also a regular symbol are rejected.
    pub fn new(symbols: &[u8], wildcard: Option<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidScoring("alphabet has no symbols".into()));
        }
        // One index is reserved for UNMAPPED and possibly one for the wildcard.
        if symbols.len() >= usize::from(UNMAPPED) {
            return Err(Error::InvalidScoring(
                "alphabet has too many symbols".into(),
            ));
        }
        let mut lookup = [UNMAPPED; 256];
        for (index, &symbol) in symbols.iter().enumerate() {
            if !symbol.is_ascii_graphic() {
                return Err(Error::InvalidScoring(format!(
                    "alphabet symbol {:?} is not a printable ASCII character",
                    char::from(symbol)
                )));
            }
            if lookup[usize::from(symbol)] != UNMAPPED {
                return Err(Error::InvalidScoring(format!(
                    "duplicate alphabet symbol {:?}",
                    char::from(symbol)
                )));
            }
            lookup[usize::from(symbol)] = index as u8;
        }
        if let Some(w) = wildcard {
            if !w.is_ascii_graphic() || lookup[usize::from(w)] != UNMAPPED {
                return Err(Error::InvalidScoring(format!(
                    "wildcard {:?} collides with the alphabet",
                    char::from(w)
                )));
            }
            lookup[usize::from(w)] = symbols.len() as u8;
        }
        Ok(Self {
            symbols: symbols.to_vec(),
            wildcard,
            lookup,
        })
    }

    /// `ACGT` with `N` as the wildcard.
    pub fn dna() -> Self {
        Self::new(b"ACGT", Some(b'N')).expect("static alphabet is valid")
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn wildcard(&self) -> Option<u8> {
        self.wildcard
    }

    /// Number of regular symbols (wildcard excluded).
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of distinct encoded indices, wildcard included.
    pub fn encoded_size(&self) -> usize {
        self.symbols.len() + usize::from(self.wildcard.is_some())
    }

    pub fn wildcard_index(&self) -> Option<u8> {
        self.wildcard.map(|_| self.symbols.len() as u8)
    }

    pub fn index_of(&self, symbol: u8) -> Option<u8> {
        match self.lookup[usize::from(symbol)] {
            UNMAPPED => None,
            index => Some(index),
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.index_of(symbol).is_some()
    }

    pub fn encode(&self, sequence: &[u8]) -> Result<Vec<u8>> {
        sequence
            .iter()
            .enumerate()
            .map(|(position, &symbol)| {
                self.index_of(symbol).ok_or(Error::SymbolOutOfAlphabet {
                    symbol: char::from(symbol),
                    position,
                })
            })
            .collect()
    }

    pub fn decode(&self, encoded: &[u8]) -> Vec<u8> {
        encoded
            .iter()
            .map(|&i| match self.symbols.get(usize::from(i)) {
                Some(&s) => s,
                None => self.wildcard.unwrap_or(b'?'),
            })
            .collect()
    }
}

impl std::fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Alphabet")
            .field("symbols", &String::from_utf8_lossy(&self.symbols))
            .field("wildcard", &self.wildcard.map(char::from))
            .finish()
    }
}
