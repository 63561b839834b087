//! Deciding whether some alignment has a prescribed vector of induced pair
//! widths, and the intersection-pattern matrix such a vector defines.

use super::engine::fill;
use super::{ExactOptions, MAX_EXACT_K};
use crate::error::{Error, Result};
use crate::kvec::{prefix_cells, BitVector};
use crate::sequence::{pair_count, pairs};

/// Answer of [`eail_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EailOutcome {
    /// Column shapes of an alignment with exactly the requested widths.
    Yes(Vec<BitVector>),
    No,
}

impl EailOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, EailOutcome::Yes(_))
    }
}

/// `lengths` must hold one entry per pair with `L_hi <= n_h + n_i`.
pub(crate) fn check_lengths(n: &[usize], lengths: &[usize]) -> Result<()> {
    if n.len() < 2 {
        return Err(Error::TooFewSequences {
            needed: 2,
            got: n.len(),
        });
    }
    if lengths.len() != pair_count(n.len()) {
        return Err(Error::LengthVectorOutOfRange(format!(
            "{} entries given, {} pairs expected",
            lengths.len(),
            pair_count(n.len())
        )));
    }
    for ((h, i), &l) in pairs(n.len()).zip(lengths) {
        if l > n[h] + n[i] {
            return Err(Error::LengthVectorOutOfRange(format!(
                "L({},{}) = {l} exceeds {}",
                h + 1,
                i + 1,
                n[h] + n[i]
            )));
        }
    }
    Ok(())
}

/// Every pair can hold between 0 and `min(n_h, n_i)` aligned symbol pairs,
/// so `max(n_h, n_i) <= L_hi`. Vectors failing this are never realizable.
pub(crate) fn realizable_bounds(n: &[usize], lengths: &[usize]) -> bool {
    pairs(n.len())
        .zip(lengths)
        .all(|((h, i), &l)| l >= n[h].max(n[i]))
}

/// `M(h,h) = n_h` and `M(h,i) = n_h + n_i - L_hi`: the number of columns
/// where rows `h` and `i` both carry a symbol.
pub fn eail_to_rip(n: &[usize], lengths: &[usize]) -> Result<Vec<Vec<i64>>> {
    check_lengths(n, lengths)?;
    let k = n.len();
    let mut m = vec![vec![0i64; k]; k];
    for (h, row) in m.iter_mut().enumerate() {
        row[h] = n[h] as i64;
    }
    for ((h, i), &l) in pairs(k).zip(lengths) {
        let shared = (n[h] + n[i]) as i64 - l as i64;
        m[h][i] = shared;
        m[i][h] = shared;
    }
    Ok(m)
}

/// Decides whether an alignment of sequences with lengths `n` can have
/// induced pair widths exactly `lengths`.
///
/// Exhaustive over the box of partial lengths, so exponential in `k`.
pub fn eail_check(n: &[usize], lengths: &[usize], opts: &ExactOptions) -> Result<EailOutcome> {
    check_lengths(n, lengths)?;
    if n.len() > MAX_EXACT_K {
        return Err(Error::TooManySequences {
            max: MAX_EXACT_K,
            got: n.len(),
        });
    }
    if n.iter().all(|&x| x == 0) {
        return Ok(if lengths.iter().all(|&l| l == 0) {
            EailOutcome::Yes(Vec::new())
        } else {
            EailOutcome::No
        });
    }
    if !realizable_bounds(n, lengths) {
        return Ok(EailOutcome::No);
    }
    opts.guard(
        lengths
            .iter()
            .fold(prefix_cells(n), |acc, &l| acc.saturating_mul(l as u128 + 1)),
    )?;
    let pair_list: Vec<(usize, usize)> = pairs(n.len()).collect();
    let radices: Vec<usize> = lengths.iter().map(|l| l + 1).collect();
    let table = fill(
        n,
        &radices,
        |b| {
            pair_list
                .iter()
                .map(|&(h, i)| usize::from(b >> h & 1 == 1 || b >> i & 1 == 1))
                .collect()
        },
        0,
        |_, _| 0,
    )?;
    let off = table.offset(lengths, n);
    Ok(if table.feasible(off) {
        EailOutcome::Yes(table.traceback(off))
    } else {
        EailOutcome::No
    })
}
