//! Sum-of-pairs alignment, with one matrix or one matrix per pair.

use super::engine::{fill, ColumnCosts};
use super::{check_k, empty_result, ExactMethod, ExactOptions, ExactResult};
use crate::alignment::alignment_from_bitvectors;
use crate::error::Result;
use crate::kvec::prefix_cells;
use crate::matrix::{MatrixArray, ScoringMatrix};
use crate::rational::Rational;
use crate::sequence::KSequence;

/// Least SP score over all alignments of `seqs`.
pub fn msa_exact(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ExactResult> {
    msa_with(seqs, gamma, &ExactOptions::default())
}

/// Least SP score with pair `(h,i)` scored by its own matrix.
pub fn msa_exact_array(seqs: &KSequence, gammas: &MatrixArray) -> Result<ExactResult> {
    msa_array_with(seqs, gammas, &ExactOptions::default())
}

pub(crate) fn msa_with(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    check_k(seqs)?;
    let costs = ColumnCosts::uniform(seqs, gamma)?;
    run(seqs, &costs, opts, ExactMethod::Msa)
}

pub(crate) fn msa_array_with(
    seqs: &KSequence,
    gammas: &MatrixArray,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    check_k(seqs)?;
    let costs = ColumnCosts::from_array(seqs, gammas)?;
    run(seqs, &costs, opts, ExactMethod::MsaArray)
}

fn run(
    seqs: &KSequence,
    costs: &ColumnCosts,
    opts: &ExactOptions,
    method: ExactMethod,
) -> Result<ExactResult> {
    let n = seqs.lengths();
    if seqs.is_empty() {
        return Ok(empty_result(seqs, method));
    }
    opts.guard(prefix_cells(&n))?;
    let table = fill(
        &n,
        &[],
        |_| Vec::new(),
        costs.max_column_cost(),
        |v, b| costs.cost(v, b),
    )?;
    let target = table.offset(&[], &n);
    let value = table
        .value(target)
        .expect("the full prefix is always reachable");
    let alignment = alignment_from_bitvectors(seqs, &table.traceback(target))?;
    Ok(ExactResult {
        value: Rational::new(value as i128, costs.unit as i128)?,
        alignment,
        method,
        cells: table.cells(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::{score_sp, score_sp_array};
    use crate::sequence::Alphabet;

    fn abc() -> Alphabet {
        Alphabet::new(b"abc").unwrap()
    }

    #[test]
    fn trio_single_column() {
        let g = ScoringMatrix::uniform(abc(), 9, 10).unwrap();
        let s = KSequence::from_strs(&["a", "b", "c"]).unwrap();
        let r = msa_exact(&s, &g).unwrap();
        assert_eq!(r.value, Rational::from_integer(27));
        assert_eq!(r.alignment.width(), 1);
        assert_eq!(r.cells, 8);
    }

    #[test]
    fn small_cases() {
        let lev = ScoringMatrix::levenshtein(abc());
        let s = KSequence::from_strs(&["ab", ""]).unwrap();
        assert_eq!(
            msa_exact(&s, &lev).unwrap().value,
            Rational::from_integer(2)
        );
        let s = KSequence::from_strs(&["a", "a", "a"]).unwrap();
        assert_eq!(msa_exact(&s, &lev).unwrap().value, Rational::ZERO);
        let s = KSequence::from_strs(&["", ""]).unwrap();
        let r = msa_exact(&s, &lev).unwrap();
        assert_eq!(r.value, Rational::ZERO);
        assert_eq!(r.alignment.width(), 0);
        assert!(msa_exact(&KSequence::from_strs(&["a"]).unwrap(), &lev).is_err());
    }

    #[test]
    fn rescoring_reproduces_value() {
        let g = ScoringMatrix::uniform(abc(), 3, 2).unwrap();
        let s = KSequence::from_strs(&["abca", "acb", "cbaa"]).unwrap();
        let r = msa_exact(&s, &g).unwrap();
        r.alignment.check_sequences(&s).unwrap();
        assert_eq!(score_sp(&g, &r.alignment).unwrap(), r.value);
    }

    #[test]
    fn array_matches_uniform_and_rescores() {
        let g = ScoringMatrix::uniform(abc(), 3, 2).unwrap();
        let s = KSequence::from_strs(&["abc", "acb", "cba"]).unwrap();
        let uniform = msa_exact_array(&s, &MatrixArray::uniform(&g, 3)).unwrap();
        assert_eq!(uniform.value, msa_exact(&s, &g).unwrap().value);
        let arr = MatrixArray::new(
            3,
            vec![
                g.scale(Rational::new(1, 2).unwrap()).unwrap(),
                g.clone(),
                g.scale(Rational::new(1, 3).unwrap()).unwrap(),
            ],
        )
        .unwrap();
        let r = msa_exact_array(&s, &arr).unwrap();
        assert_eq!(score_sp_array(&arr, &r.alignment).unwrap(), r.value);
    }

    #[test]
    fn guard_trips_before_allocation() {
        let g = ScoringMatrix::levenshtein(abc());
        let s = KSequence::from_strs(&["abc", "abc", "abc"]).unwrap();
        let opts = ExactOptions::with_max_cells(63);
        assert_eq!(
            msa_with(&s, &g, &opts).unwrap_err(),
            crate::error::Error::ResourceCapExceeded {
                estimate: 64,
                cap: 63
            }
        );
    }
}
