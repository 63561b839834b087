//! k-vectors: prefix cursors, column bit vectors, and mixed-radix index spaces.
//!
//! Index vectors are enumerated in lexicographic order where the *last*
//! coordinate is the most significant one, so `[1,0]` comes before `[0,1]`.
//! Every vector then appears after all vectors componentwise below it, which
//! is the order the dynamic programs fill their tables in.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::pair_count;

/// Prefix cursor `j = [j_1, .., j_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector(pub Vec<usize>);

impl IndexVector {
    pub fn zeros(k: usize) -> Self {
        IndexVector(vec![0; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &IndexVector) -> bool {
        self.k() == other.k() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `j - b`; fails if some `b_i = 1` meets `j_i = 0`.
    pub fn minus(&self, b: &BitVector) -> Result<IndexVector> {
        if b.k() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: b.k(),
            });
        }
        self.0
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                if b.get(i) {
                    j.checked_sub(1)
                        .ok_or(Error::BitExceedsIndex { position: i + 1 })
                } else {
                    Ok(j)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(IndexVector)
    }

    /// True when `self` precedes `other` in lexicographic order.
    pub fn precedes(&self, other: &IndexVector) -> bool {
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return a < b;
            }
        }
        false
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A k-vector of bits. Bit `i` is stored in bit `i` of a `u64` mask, so the
/// numeric order of masks is the lexicographic order of bit vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    mask: u64,
    k: u8,
}

/// Largest supported k for bit-vector columns.
pub const MAX_K: usize = 64;

impl BitVector {
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() > MAX_K {
            return Err(Error::DimensionMismatch {
                expected: MAX_K,
                got: bits.len(),
            });
        }
        let mut mask = 0u64;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                _ => return Err(Error::parse(0, format!("bit value {b} is not 0 or 1"))),
            }
        }
        Ok(BitVector {
            mask,
            k: bits.len() as u8,
        })
    }

    pub fn from_mask(mask: u64, k: usize) -> Self {
        debug_assert!(k <= MAX_K && (k == MAX_K || mask >> k == 0));
        BitVector { mask, k: k as u8 }
    }

    pub fn ones(k: usize) -> Self {
        let mask = if k == MAX_K {
            u64::MAX
        } else {
            (1u64 << k) - 1
        };
        BitVector::from_mask(mask, k)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn get(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn count_ones(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.k()).map(|i| self.get(i) as u8).collect()
    }

    /// Componentwise `self <= j`.
    pub fn le(&self, j: &IndexVector) -> bool {
        self.k() == j.k() && (0..self.k()).all(|i| !self.get(i) || j.0[i] >= 1)
    }

    /// Number of pairs `h < i` with `b_h = 1` or `b_i = 1`: how much this
    /// column adds to the summed widths of all induced pairwise alignments.
    pub fn pair_norm(&self) -> usize {
        pair_norm(self.mask, self.k())
    }
}

/// [`BitVector::pair_norm`] on a raw mask.
pub fn pair_norm(mask: u64, k: usize) -> usize {
    let zeros = k - mask.count_ones() as usize;
    pair_count(k) - pair_count(zeros)
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_bits())
    }
}

/// Every index vector `j <= n` in lexicographic order.
pub fn iterate_index_vectors(n: &[usize]) -> IndexVectorIter {
    IndexVectorIter {
        bound: n.to_vec(),
        next: Some(vec![0; n.len()]),
    }
}

/// Odometer over `{ j : j <= n }`, first coordinate fastest.
#[derive(Debug, Clone)]
pub struct IndexVectorIter {
    bound: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for IndexVectorIter {
    type Item = IndexVector;

    fn next(&mut self) -> Option<IndexVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (x, &b) in succ.iter_mut().zip(&self.bound) {
            if *x < b {
                *x += 1;
                carried = false;
                break;
            }
            *x = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(IndexVector(current))
    }
}

/// Dense row-major layout over a box `[0, r_0) x .. x [0, r_{d-1})` with the
/// first coordinate varying fastest.
///
/// Offsets increase with the lexicographic order of coordinates, so a cell's
/// predecessors under any componentwise decrement live at smaller offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSpace {
    radices: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl IndexSpace {
    /// `None` if the cell count overflows `usize`.
    pub fn new(radices: Vec<usize>) -> Option<Self> {
        let mut strides = Vec::with_capacity(radices.len());
        let mut len = 1usize;
        for &r in &radices {
            strides.push(len);
            len = len.checked_mul(r)?;
        }
        Some(IndexSpace {
            radices,
            strides,
            len,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dims(&self) -> usize {
        self.radices.len()
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn offset(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.radices.len());
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    /// Advances `coords` to the next cell; returns false after the last one.
    pub fn advance(&self, coords: &mut [usize]) -> bool {
        for (x, &r) in coords.iter_mut().zip(&self.radices) {
            *x += 1;
            if *x < r {
                return true;
            }
            *x = 0;
        }
        false
    }
}

/// Product of `(n_i + 1)`, saturating.
pub fn prefix_cells(n: &[usize]) -> u128 {
    n.iter()
        .fold(1u128, |acc, &x| acc.saturating_mul(x as u128 + 1))
}
