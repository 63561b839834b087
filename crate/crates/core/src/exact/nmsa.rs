//! Length-normalized criteria: V1 (SP over width), V2 (sum of normalized
//! pair scores) and V3 (SP over summed pair widths).

use num_integer::Integer;
use rayon::prelude::*;

use super::eail::{check_lengths, realizable_bounds};
use super::engine::{fill, ColumnCosts};
use super::{check_k, empty_result, ExactMethod, ExactOptions, ExactResult};
use crate::alignment::alignment_from_bitvectors;
use crate::error::{Error, Result};
use crate::kvec::{pair_norm, prefix_cells, BitVector};
use crate::matrix::ScoringMatrix;
use crate::rational::Rational;
use crate::sequence::{pairs, KSequence};

/// Least V1 score: SP divided by alignment width.
pub fn nmsa1_exact(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ExactResult> {
    nmsa1_with(seqs, gamma, &ExactOptions::default())
}

/// Least V2 score: the sum over pairs of the pair's cost divided by its
/// induced width.
pub fn nmsa2_exact(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ExactResult> {
    nmsa2_with(seqs, gamma, &ExactOptions::default())
}

/// Least V3 score: SP divided by the summed widths of the induced pairs.
pub fn nmsa3_exact(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ExactResult> {
    nmsa3_with(seqs, gamma, &ExactOptions::default())
}

/// Width-stratified table: one extra coordinate counting columns, each
/// column advancing it by `step(b)`. Picks the least `D(n, L) / L` over
/// `L >= 1`, ties to the smallest `L`.
fn stratified(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
    max_len: usize,
    step: impl Fn(u32) -> usize,
    method: ExactMethod,
) -> Result<ExactResult> {
    check_k(seqs)?;
    if seqs.is_empty() {
        return Ok(empty_result(seqs, method));
    }
    let n = seqs.lengths();
    opts.guard((max_len as u128 + 1).saturating_mul(prefix_cells(&n)))?;
    let costs = ColumnCosts::uniform(seqs, gamma)?;
    let table = fill(
        &n,
        &[max_len + 1],
        |b| vec![step(b)],
        costs.max_column_cost(),
        |v, b| costs.cost(v, b),
    )?;
    let mut best: Option<(Rational, usize)> = None;
    for l in 1..=max_len {
        let off = table.offset(&[l], &n);
        if let Some(d) = table.value(off) {
            let cand = Rational::new(d as i128, l as i128 * costs.unit as i128)?;
            if best.map_or(true, |(b, _)| cand < b) {
                best = Some((cand, l));
            }
        }
    }
    let (value, l) = best.expect("a non-empty k-sequence has an alignment");
    let alignment = alignment_from_bitvectors(seqs, &table.traceback(table.offset(&[l], &n)))?;
    Ok(ExactResult {
        value,
        alignment,
        method,
        cells: table.cells(),
    })
}

pub(crate) fn nmsa1_with(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    stratified(
        seqs,
        gamma,
        opts,
        seqs.total_len(),
        |_| 1,
        ExactMethod::Nmsa1,
    )
}

pub(crate) fn nmsa3_with(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    let k = seqs.k();
    let max_len = k.saturating_sub(1) * seqs.total_len();
    stratified(
        seqs,
        gamma,
        opts,
        max_len,
        |b| pair_norm(b as u64, k),
        ExactMethod::Nmsa3,
    )
}

/// Induced-length vectors in odometer order over `0..=n_h + n_i` per pair.
struct LengthSpace {
    radices: Vec<usize>,
    count: usize,
}

impl LengthSpace {
    fn new(n: &[usize]) -> Self {
        let radices: Vec<usize> = pairs(n.len()).map(|(h, i)| n[h] + n[i] + 1).collect();
        let count = radices.iter().product();
        LengthSpace { radices, count }
    }

    fn estimate(n: &[usize]) -> u128 {
        pairs(n.len())
            .fold(1u128, |acc, (h, i)| {
                acc.saturating_mul((n[h] + n[i] + 1) as u128)
            })
            .saturating_mul(prefix_cells(n))
    }

    fn decode(&self, mut idx: usize) -> Vec<usize> {
        self.radices
            .iter()
            .map(|&r| {
                let x = idx % r;
                idx /= r;
                x
            })
            .collect()
    }
}

type Candidate = (Rational, usize, Vec<BitVector>);

/// `Σ_p min cost of pair p at width L_p / L_p`: no alignment with induced
/// widths `lengths` scores below this. `None` when some pair cannot have
/// its width.
fn lower_bound(
    minima: &[Vec<Option<i64>>],
    lengths: &[usize],
    unit: i64,
) -> Result<Option<Rational>> {
    let mut total = Rational::ZERO;
    for (m, &l) in minima.iter().zip(lengths) {
        let Some(cost) = m[l] else {
            return Ok(None);
        };
        if l > 0 {
            total += Rational::new(cost as i128, l as i128 * unit as i128)?;
        }
    }
    Ok(Some(total))
}

/// Cells used, plus the best value and its columns when any alignment fits.
type InnerOutcome = (u64, Option<(Rational, Vec<BitVector>)>);

/// Inner table for one target length vector: the least `Σ_p cost_p / L_p`
/// over alignments whose induced widths are exactly `lengths`.
fn solve_for_lengths(n: &[usize], base: &ColumnCosts, lengths: &[usize]) -> Result<InnerOutcome> {
    let mut lambda: i64 = 1;
    for &l in lengths.iter().filter(|&&l| l > 0) {
        lambda = lambda.lcm(&(l as i64));
    }
    let weights: Vec<i64> = lengths
        .iter()
        .map(|&l| if l == 0 { 0 } else { lambda / l as i64 })
        .collect();
    let unit = base
        .unit
        .checked_mul(lambda)
        .ok_or(Error::Overflow("scaling by induced lengths"))?;
    let costs = base.weighted(&weights)?.with_unit(unit);
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
        costs.max_column_cost(),
        |v, b| costs.cost(v, b),
    )?;
    let off = table.offset(lengths, n);
    let found = match table.value(off) {
        Some(d) => Some((
            Rational::new(d as i128, unit as i128)?,
            table.traceback(off),
        )),
        None => None,
    };
    Ok((table.cells(), found))
}

/// The V2-optimal alignment among those whose induced pair widths equal
/// `lengths` (pair order), or `None` when no alignment has those widths.
pub fn nmsa2_for_lengths(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    lengths: &[usize],
) -> Result<Option<ExactResult>> {
    check_k(seqs)?;
    let n = seqs.lengths();
    check_lengths(&n, lengths)?;
    ExactOptions::default().guard(lengths.iter().fold(prefix_cells(&n), |acc, &l| {
        acc.saturating_mul(l as u128 + 1)
    }))?;
    let base = ColumnCosts::uniform(seqs, gamma)?;
    let (cells, found) = solve_for_lengths(&n, &base, lengths)?;
    found
        .map(|(value, cols)| {
            Ok(ExactResult {
                value,
                alignment: alignment_from_bitvectors(seqs, &cols)?,
                method: ExactMethod::Nmsa2,
                cells,
            })
        })
        .transpose()
}

pub(crate) fn nmsa2_with(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    check_k(seqs)?;
    if seqs.is_empty() {
        return Ok(empty_result(seqs, ExactMethod::Nmsa2));
    }
    let n = seqs.lengths();
    opts.guard(LengthSpace::estimate(&n))?;
    let space = LengthSpace::new(&n);
    let base = ColumnCosts::uniform(seqs, gamma)?;
    let pick = |a: Option<Candidate>, b: Option<Candidate>| match (a, b) {
        (Some(a), Some(b)) => Some(if (b.0, b.1) < (a.0, a.1) { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    };
    let run = |idx: &usize| -> Result<(u64, Option<Candidate>)> {
        let lengths = space.decode(*idx);
        let (cells, found) = solve_for_lengths(&n, &base, &lengths)?;
        Ok((cells, found.map(|(v, cols)| (v, *idx, cols))))
    };
    let sweep = |batch: &[usize]| {
        batch
            .par_iter()
            .map(run)
            .try_reduce(|| (0, None), |(ca, a), (cb, b)| Ok((ca + cb, pick(a, b))))
    };
    let mut order: Vec<usize> = (0..space.count)
        .filter(|&idx| !opts.dominance_skip || realizable_bounds(&n, &space.decode(idx)))
        .collect();
    let (cells, best) = if opts.bound_pruning {
        let minima: Vec<Vec<Option<i64>>> = (0..space.radices.len())
            .map(|p| base.pair_width_minima(p))
            .collect();
        let mut bounded: Vec<(Rational, usize)> = Vec::with_capacity(order.len());
        for idx in order {
            if let Some(lb) = lower_bound(&minima, &space.decode(idx), base.unit)? {
                bounded.push((lb, idx));
            }
        }
        bounded.sort();
        let batch_len = 4 * rayon::current_num_threads().max(1);
        let (mut cells, mut best): (u64, Option<Candidate>) = (0, None);
        for chunk in bounded.chunks(batch_len) {
            let live: Vec<usize> = chunk
                .iter()
                .filter(|(lb, _)| best.as_ref().map_or(true, |b| *lb <= b.0))
                .map(|&(_, idx)| idx)
                .collect();
            if live.is_empty() {
                break;
            }
            let (c, found) = sweep(&live)?;
            cells += c;
            best = pick(best, found);
        }
        (cells, best)
    } else {
        order.shrink_to_fit();
        sweep(&order)?
    };
    let (value, _, cols) = best.expect("a non-empty k-sequence has an alignment");
    Ok(ExactResult {
        value,
        alignment: alignment_from_bitvectors(seqs, &cols)?,
        method: ExactMethod::Nmsa2,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::Alignment;
    use crate::score::{score_v1, score_v2, score_v3};
    use crate::sequence::Alphabet;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn gamma() -> ScoringMatrix {
        ScoringMatrix::uniform(Alphabet::new(b"abc").unwrap(), 9, 10).unwrap()
    }

    fn delta() -> ScoringMatrix {
        ScoringMatrix::uniform(Alphabet::new(b"abc").unwrap(), 7, 9).unwrap()
    }

    fn abc() -> KSequence {
        KSequence::from_strs(&["a", "b", "c"]).unwrap()
    }

    fn perms() -> KSequence {
        KSequence::from_strs(&["abc", "acb", "cba"]).unwrap()
    }

    #[test]
    fn trio_gamma_optima() {
        let v1 = nmsa1_exact(&abc(), &gamma()).unwrap();
        assert_eq!(v1.value, r(20, 1));
        assert_eq!(v1.alignment.width(), 3);
        let v2 = nmsa2_exact(&abc(), &gamma()).unwrap();
        assert_eq!(v2.value, r(27, 1));
        assert_eq!(v2.alignment.width(), 1);
        let v3 = nmsa3_exact(&abc(), &gamma()).unwrap();
        assert_eq!(v3.value, r(9, 1));
    }

    #[test]
    fn trio_delta_optima() {
        // The three displayed alignments are not optimal here; all values
        // below are confirmed by exhaustive enumeration.
        let d = delta();
        let best = Alignment::from_strs(&["a-bc", "acb-", "-cba"]).unwrap();
        let v2 = nmsa2_exact(&perms(), &d).unwrap();
        assert_eq!(v2.value, r(61, 4));
        assert!(v2.value < r(81, 5));
        assert_eq!(v2.alignment, best);
        assert_eq!(score_v2(&d, &v2.alignment).unwrap(), v2.value);
        let v3 = nmsa3_exact(&perms(), &d).unwrap();
        assert_eq!(v3.value, r(61, 12));
        assert!(v3.value < r(49, 9));
        assert_eq!(score_v3(&d, &v3.alignment).unwrap(), v3.value);
        let v1 = nmsa1_exact(&perms(), &d).unwrap();
        assert_eq!(v1.value, r(68, 5));
        assert_eq!(score_v1(&d, &v1.alignment).unwrap(), v1.value);
    }

    #[test]
    fn cell_counts_follow_closed_forms() {
        let s = perms();
        let cells = 4u64 * 4 * 4;
        assert_eq!(nmsa1_exact(&s, &delta()).unwrap().cells, 10 * cells);
        assert_eq!(nmsa3_exact(&s, &delta()).unwrap().cells, 19 * cells);
    }

    #[test]
    fn identical_sequences_score_zero() {
        let s = KSequence::from_strs(&["ab", "ab", "ab"]).unwrap();
        let g = gamma();
        assert_eq!(nmsa1_exact(&s, &g).unwrap().value, Rational::ZERO);
        assert_eq!(nmsa2_exact(&s, &g).unwrap().value, Rational::ZERO);
        assert_eq!(nmsa3_exact(&s, &g).unwrap().value, Rational::ZERO);
    }

    #[test]
    fn empty_input() {
        let s = KSequence::from_strs(&["", "", ""]).unwrap();
        for f in [nmsa1_exact, nmsa2_exact, nmsa3_exact] {
            let res = f(&s, &gamma()).unwrap();
            assert_eq!(res.value, Rational::ZERO);
            assert_eq!(res.alignment.width(), 0);
        }
    }

    #[test]
    fn skips_and_pruning_are_result_invariant() {
        let opts = |dominance_skip, bound_pruning| ExactOptions {
            dominance_skip,
            bound_pruning,
            ..ExactOptions::default()
        };
        let ab = ScoringMatrix::uniform(Alphabet::new(b"ab").unwrap(), 3, 2).unwrap();
        let cases = [
            (
                KSequence::from_strs(&["ab", "ba", "a"]).unwrap(),
                ab.clone(),
            ),
            (KSequence::from_strs(&["abb", "", "ba"]).unwrap(), ab),
            (
                KSequence::from_strs(&["abc", "acb", "cba"]).unwrap(),
                delta(),
            ),
        ];
        for (s, g) in &cases {
            let plain = nmsa2_with(s, g, &opts(false, false)).unwrap();
            let skip = nmsa2_with(s, g, &opts(true, false)).unwrap();
            for r in [
                &skip,
                &nmsa2_with(s, g, &opts(false, true)).unwrap(),
                &nmsa2_with(s, g, &opts(true, true)).unwrap(),
            ] {
                assert_eq!(r.value, plain.value);
                assert_eq!(r.alignment, plain.alignment);
            }
            assert!(skip.cells < plain.cells);
        }
    }

    #[test]
    fn fixed_lengths() {
        let d = delta();
        // F's induced widths: (1,2) 4, (1,3) 5, (2,3) 4
        let f = nmsa2_for_lengths(&perms(), &d, &[4, 5, 4])
            .unwrap()
            .unwrap();
        assert!(f.value <= r(81, 5));
        assert!(nmsa2_for_lengths(&perms(), &d, &[2, 3, 3])
            .unwrap()
            .is_none());
        assert!(matches!(
            nmsa2_for_lengths(&perms(), &d, &[7, 3, 3]),
            Err(Error::LengthVectorOutOfRange(_))
        ));
    }
}
