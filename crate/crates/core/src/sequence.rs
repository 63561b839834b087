//! Alphabets, sequences and k-sequences.

use std::fmt;

use crate::error::{Error, Result};

/// The reserved gap (space) symbol.
pub const GAP: u8 = b'-';

fn is_symbol(b: u8) -> bool {
    b.is_ascii_graphic() && b != GAP
}

/// An ordered set of printable ASCII symbols, never containing [`GAP`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<u8>,
    index: Box<[Option<u8>; 256]>,
}

impl Alphabet {
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > 255 {
            return Err(Error::InvalidAlphabet("more than 255 symbols".into()));
        }
        let mut index = Box::new([None; 256]);
        for (i, &s) in symbols.iter().enumerate() {
            if !is_symbol(s) {
                return Err(Error::InvalidAlphabet(format!(
                    "{:?} is not a printable non-gap symbol",
                    s as char
                )));
            }
            if index[s as usize].replace(i as u8).is_some() {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate symbol {:?}",
                    s as char
                )));
            }
        }
        Ok(Alphabet {
            symbols: symbols.to_vec(),
            index,
        })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.index[symbol as usize].is_some()
    }

    /// Position of `symbol`; the gap maps to `len()`.
    pub fn index_of(&self, symbol: u8) -> Option<usize> {
        if symbol == GAP {
            Some(self.symbols.len())
        } else {
            self.index[symbol as usize].map(usize::from)
        }
    }
}

/// A finite string of symbols. The empty sequence is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Sequence(Vec<u8>);

impl Sequence {
    /// Builds a sequence of printable, non-gap ASCII symbols.
    pub fn new(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let symbols = symbols.into();
        if let Some(&bad) = symbols.iter().find(|&&b| !is_symbol(b)) {
            return Err(Error::InvalidSymbol {
                symbol: bad as char,
            });
        }
        Ok(Sequence(symbols))
    }

    pub fn empty() -> Self {
        Sequence(Vec::new())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based symbol access, `s(j)`.
    pub fn at(&self, j: usize) -> u8 {
        self.0[j - 1]
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&b| alphabet.contains(b))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl std::str::FromStr for Sequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Sequence::new(s.as_bytes())
    }
}

/// An ordered tuple of `k >= 1` sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KSequence {
    seqs: Vec<Sequence>,
}

impl KSequence {
    pub fn new(seqs: Vec<Sequence>) -> Result<Self> {
        if seqs.is_empty() {
            return Err(Error::EmptyKSequence);
        }
        Ok(KSequence { seqs })
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(seqs: &[&str]) -> Result<Self> {
        seqs.iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>>>()
            .and_then(KSequence::new)
    }

    pub fn k(&self) -> usize {
        self.seqs.len()
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.seqs
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> &Sequence {
        &self.seqs[i]
    }

    /// The length vector `n`.
    pub fn lengths(&self) -> Vec<usize> {
        self.seqs.iter().map(Sequence::len).collect()
    }

    /// `N`, the total number of symbols.
    pub fn total_len(&self) -> usize {
        self.seqs.iter().map(Sequence::len).sum()
    }

    /// True when every sequence is empty.
    pub fn is_empty(&self) -> bool {
        self.seqs.iter().all(Sequence::is_empty)
    }

    /// The sub-tuple `S_I` for 0-based, strictly increasing indices.
    pub fn subset(&self, indices: &[usize]) -> Result<KSequence> {
        check_index_set(indices, self.k())?;
        KSequence::new(indices.iter().map(|&i| self.seqs[i].clone()).collect())
    }

    /// Fails with `AlphabetMismatch` on the first foreign symbol.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        for (i, s) in self.seqs.iter().enumerate() {
            if let Some(&b) = s.as_bytes().iter().find(|&&b| !alphabet.contains(b)) {
                return Err(Error::AlphabetMismatch {
                    sequence: i + 1,
                    symbol: b as char,
                });
            }
        }
        Ok(())
    }
}

/// Validates a 0-based index set: non-empty, strictly increasing, `< k`.
pub(crate) fn check_index_set(indices: &[usize], k: usize) -> Result<()> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let mut prev: Option<usize> = None;
    for &i in indices {
        if i >= k || prev.is_some_and(|p| p >= i) {
            return Err(Error::IndexOutOfRange { index: i + 1, k });
        }
        prev = Some(i);
    }
    Ok(())
}

/// Number of unordered pairs among `k` items.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Pairs `(h, i)`, `h < i`, in the order `(0,1), (0,2), .., (0,k-1), (1,2), ..`.
pub fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |h| (h + 1..k).map(move |i| (h, i)))
}

/// Position of pair `(h, i)`, `h < i`, in [`pairs`] order.
pub fn pair_index(h: usize, i: usize, k: usize) -> usize {
    debug_assert!(h < i && i < k);
    h * (2 * k - h - 1) / 2 + (i - h - 1)
}
