//! The table engine behind every exact algorithm.
//!
//! Coordinates are `(L, v)`: `m` length coordinates (fastest varying) then
//! the `k` prefix coordinates. A column shape `b` (a nonzero k-bit mask)
//! moves from `(L - dec(b), v - b)` to `(L, v)`. Because every move lowers
//! the dense offset, one forward sweep fills the table.

use crate::error::{Error, Result};
use crate::kvec::{BitVector, IndexSpace};
use crate::matrix::{MatrixArray, ScoringMatrix};
use crate::sequence::{pair_count, pairs, KSequence};

/// Integer column costs for one k-sequence, one table per pair.
#[derive(Debug, Clone)]
pub(crate) struct ColumnCosts {
    size: usize,
    gap: usize,
    seqs: Vec<Vec<u8>>,
    pair_list: Vec<(usize, usize)>,
    tables: Vec<Vec<i64>>,
    /// Costs are these integers divided by `unit`.
    pub unit: i64,
}

impl ColumnCosts {
    pub fn uniform(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<Self> {
        let table: Vec<i64> = gamma.table().concat();
        Ok(ColumnCosts {
            size: gamma.size(),
            gap: gamma.gap_index(),
            seqs: gamma.encode(seqs)?,
            pair_list: pairs(seqs.k()).collect(),
            tables: vec![table; pair_count(seqs.k())],
            unit: gamma.unit(),
        })
    }

    pub fn from_array(seqs: &KSequence, gammas: &MatrixArray) -> Result<Self> {
        if gammas.k() != seqs.k() {
            return Err(Error::ArityMismatch {
                k: seqs.k(),
                expected: pair_count(seqs.k()),
                got: gammas.matrices().len(),
            });
        }
        let first = &gammas.matrices()[0];
        let (unit, mult) = gammas.common_unit()?;
        let tables = gammas
            .matrices()
            .iter()
            .zip(&mult)
            .map(|(g, &f)| {
                g.table()
                    .concat()
                    .into_iter()
                    .map(|x| {
                        x.checked_mul(f)
                            .ok_or(Error::Overflow("combining matrix units"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColumnCosts {
            size: first.size(),
            gap: first.gap_index(),
            seqs: first.encode(seqs)?,
            pair_list: pairs(seqs.k()).collect(),
            tables,
            unit,
        })
    }

    /// Multiplies pair `p`'s table by `weights[p]`; the unit is unchanged.
    pub fn weighted(&self, weights: &[i64]) -> Result<Self> {
        let tables = self
            .tables
            .iter()
            .zip(weights)
            .map(|(t, &w)| {
                t.iter()
                    .map(|&x| {
                        x.checked_mul(w)
                            .ok_or(Error::Overflow("weighting pair costs"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColumnCosts {
            tables,
            ..self.clone()
        })
    }

    pub fn with_unit(mut self, unit: i64) -> Self {
        self.unit = unit;
        self
    }

    /// Upper bound on one column's cost.
    pub fn max_column_cost(&self) -> i64 {
        self.tables
            .iter()
            .map(|t| t.iter().copied().max().unwrap_or(0))
            .fold(0i64, |a, b| a.saturating_add(b))
    }

    /// Least cost of aligning pair `p` alone, for each exact width
    /// `0..=n_h + n_i`; `None` where no alignment has that width.
    pub fn pair_width_minima(&self, p: usize) -> Vec<Option<i64>> {
        let (h, i) = self.pair_list[p];
        let (s, t) = (&self.seqs[h], &self.seqs[i]);
        let table = &self.tables[p];
        let c = |x: usize, y: usize| table[x * self.size + y];
        let (rows, cols, widths) = (s.len() + 1, t.len() + 1, s.len() + t.len() + 1);
        let at = |a: usize, b: usize, w: usize| (a * cols + b) * widths + w;
        let mut dp: Vec<Option<i64>> = vec![None; rows * cols * widths];
        dp[0] = Some(0);
        for a in 0..rows {
            for b in 0..cols {
                for w in 1..=a + b {
                    let mut steps = [None; 3];
                    if a > 0 && b > 0 {
                        steps[0] = dp[at(a - 1, b - 1, w - 1)]
                            .map(|x| x + c(s[a - 1] as usize, t[b - 1] as usize));
                    }
                    if a > 0 {
                        steps[1] =
                            dp[at(a - 1, b, w - 1)].map(|x| x + c(s[a - 1] as usize, self.gap));
                    }
                    if b > 0 {
                        steps[2] =
                            dp[at(a, b - 1, w - 1)].map(|x| x + c(self.gap, t[b - 1] as usize));
                    }
                    dp[at(a, b, w)] = steps.into_iter().flatten().min();
                }
            }
        }
        (0..widths).map(|w| dp[at(rows - 1, cols - 1, w)]).collect()
    }

    /// Cost of the column `b · S(v)`.
    #[inline]
    pub fn cost(&self, v: &[usize], mask: u32) -> i64 {
        let mut sym = [0usize; super::MAX_EXACT_K];
        for (i, s) in sym.iter_mut().enumerate().take(self.seqs.len()) {
            *s = if mask >> i & 1 == 1 {
                self.seqs[i][v[i] - 1] as usize
            } else {
                self.gap
            };
        }
        self.pair_list
            .iter()
            .zip(&self.tables)
            .map(|(&(h, i), t)| t[sym[h] * self.size + sym[i]])
            .sum()
    }
}

/// A filled table. Cell 0 is the empty prefix; any other cell with no
/// recorded column shape is infeasible.
pub(crate) struct Table {
    space: IndexSpace,
    m: usize,
    k: usize,
    values: Vec<i64>,
    choice: Vec<u32>,
    delta: Vec<usize>,
}

impl Table {
    pub fn cells(&self) -> u64 {
        self.space.len() as u64
    }

    pub fn offset(&self, lengths: &[usize], v: &[usize]) -> usize {
        debug_assert_eq!(lengths.len(), self.m);
        debug_assert_eq!(v.len(), self.k);
        let s = self.space.strides();
        lengths.iter().zip(s).map(|(x, s)| x * s).sum::<usize>()
            + v.iter()
                .zip(&s[self.m..])
                .map(|(x, s)| x * s)
                .sum::<usize>()
    }

    pub fn feasible(&self, off: usize) -> bool {
        off == 0 || self.choice[off] != 0
    }

    pub fn value(&self, off: usize) -> Option<i64> {
        self.feasible(off).then(|| self.values[off])
    }

    /// Column shapes of an optimal path to `off`, first column first.
    pub fn traceback(&self, mut off: usize) -> Vec<BitVector> {
        debug_assert!(self.feasible(off));
        let mut cols = Vec::new();
        while off != 0 {
            let mask = self.choice[off];
            cols.push(BitVector::from_mask(mask as u64, self.k));
            off -= self.delta[mask as usize];
        }
        cols.reverse();
        cols
    }
}

/// Fills the table over `v <= n` and `L < len_radices`.
///
/// `len_dec(b)` gives the length decrement of shape `b`; `cost(v, b)` the
/// integer cost of column `b · S(v)`. Among equal-cost predecessors the
/// largest mask wins.
pub(crate) fn fill<D, C>(
    n: &[usize],
    len_radices: &[usize],
    len_dec: D,
    max_column_cost: i64,
    cost: C,
) -> Result<Table>
where
    D: Fn(u32) -> Vec<usize>,
    C: Fn(&[usize], u32) -> i64,
{
    let k = n.len();
    let m = len_radices.len();
    debug_assert!((1..=super::MAX_EXACT_K).contains(&k));
    let columns: i128 = n.iter().map(|&x| x as i128).sum();
    if (max_column_cost as i128) * columns >= i64::MAX as i128 {
        return Err(Error::Overflow("bounding alignment cost"));
    }
    let radices: Vec<usize> = len_radices
        .iter()
        .copied()
        .chain(n.iter().map(|x| x + 1))
        .collect();
    let space = IndexSpace::new(radices).ok_or(Error::ResourceCapExceeded {
        estimate: u128::MAX,
        cap: usize::MAX as u128,
    })?;
    let strides = space.strides().to_vec();
    let masks = 1usize << k;

    let mut dec = vec![0usize; masks * m];
    let mut delta = vec![0usize; masks];
    for mask in 1..masks {
        let d = len_dec(mask as u32);
        debug_assert_eq!(d.len(), m);
        dec[mask * m..(mask + 1) * m].copy_from_slice(&d);
        delta[mask] = d.iter().zip(&strides).map(|(x, s)| x * s).sum::<usize>()
            + (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| strides[m + i])
                .sum::<usize>();
    }

    let len_space = IndexSpace::new(len_radices.to_vec()).expect("sub-box of a valid space");
    let layer = len_space.len();
    let mut values = vec![0i64; space.len()];
    let mut choice = vec![0u32; space.len()];
    let mut v = vec![0usize; k];
    let mut lc = vec![0usize; m];
    let mut cands: Vec<(u32, i64)> = Vec::with_capacity(masks);
    let mut base = 0usize;
    loop {
        cands.clear();
        for mask in (1..masks).rev() {
            if (0..k).all(|i| mask >> i & 1 == 0 || v[i] > 0) {
                cands.push((mask as u32, cost(&v, mask as u32)));
            }
        }
        lc.iter_mut().for_each(|x| *x = 0);
        for l in 0..layer {
            let off = base + l;
            if off != 0 {
                let mut best: Option<(i64, u32)> = None;
                for &(mask, c) in &cands {
                    let d = &dec[mask as usize * m..(mask as usize + 1) * m];
                    if lc.iter().zip(d).any(|(have, need)| have < need) {
                        continue;
                    }
                    let pred = off - delta[mask as usize];
                    if pred != 0 && choice[pred] == 0 {
                        continue;
                    }
                    let cand = values[pred] + c;
                    if best.map_or(true, |(b, _)| cand < b) {
                        best = Some((cand, mask));
                    }
                }
                if let Some((val, mask)) = best {
                    values[off] = val;
                    choice[off] = mask;
                }
            }
            len_space.advance(&mut lc);
        }
        base += layer;
        let mut carried = true;
        for (x, &bound) in v.iter_mut().zip(n) {
            if *x < bound {
                *x += 1;
                carried = false;
                break;
            }
            *x = 0;
        }
        if carried {
            break;
        }
    }
    debug_assert_eq!(base, space.len());
    Ok(Table {
        space,
        m,
        k,
        values,
        choice,
        delta,
    })
}
