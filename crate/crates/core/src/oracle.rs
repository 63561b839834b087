//! Brute-force reference: enumerate every alignment and keep the best.
//!
//! Alignments are generated as sequences of nonzero column shapes by a
//! depth-first search that tries shapes from the all-ones mask down. Nothing
//! is pruned or memoized, so the enumeration is trivially exhaustive.

use serde::Serialize;

use crate::alignment::Alignment;
use crate::error::{Error, Result};
use crate::matrix::{MatrixArray, ScoringMatrix};
use crate::rational::Rational;
use crate::score::{score, score_sp_array, Criterion};
use crate::sequence::{KSequence, GAP};

/// Limits for an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Abort once more than this many alignments would be produced.
    pub max_alignments: u64,
    /// Refuse inputs whose widest alignment exceeds this.
    pub max_width: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_alignments: 10_000_000,
            max_width: usize::MAX,
        }
    }
}

/// Every alignment of `seqs`, each exactly once.
pub fn enumerate_alignments(seqs: &KSequence, budget: EnumerationBudget) -> AlignmentIter<'_> {
    AlignmentIter {
        seqs,
        n: seqs.lengths(),
        full: if seqs.k() >= 64 {
            u64::MAX
        } else {
            (1u64 << seqs.k()) - 1
        },
        pos: vec![0; seqs.k()],
        cols: Vec::new(),
        cursor: Vec::new(),
        emitted: 0,
        budget,
        state: State::Fresh,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator returned by [`enumerate_alignments`]. Yields one error and
/// stops when the budget runs out.
#[derive(Debug, Clone)]
pub struct AlignmentIter<'a> {
    seqs: &'a KSequence,
    n: Vec<usize>,
    full: u64,
    pos: Vec<usize>,
    cols: Vec<u64>,
    /// Next shape to try at each depth; 0 once exhausted.
    cursor: Vec<u64>,
    emitted: u64,
    budget: EnumerationBudget,
    state: State,
}

impl AlignmentIter<'_> {
    /// Alignments produced so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn fits(&self, mask: u64) -> bool {
        (0..self.n.len()).all(|i| mask >> i & 1 == 0 || self.pos[i] < self.n[i])
    }

    fn apply(&mut self, mask: u64, forward: bool) {
        for (i, p) in self.pos.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                if forward {
                    *p += 1;
                } else {
                    *p -= 1;
                }
            }
        }
    }

    fn build(&self) -> Alignment {
        let k = self.n.len();
        let mut rows = vec![Vec::with_capacity(self.cols.len()); k];
        let mut at = vec![0usize; k];
        for &mask in &self.cols {
            for (i, row) in rows.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    row.push(self.seqs.get(i).as_bytes()[at[i]]);
                    at[i] += 1;
                } else {
                    row.push(GAP);
                }
            }
        }
        Alignment::from_rows_unchecked(rows)
    }

    fn emit(&mut self) -> Option<Result<Alignment>> {
        if self.emitted == self.budget.max_alignments {
            self.state = State::Done;
            return Some(Err(Error::BudgetExceeded(format!(
                "more than {} alignments",
                self.budget.max_alignments
            ))));
        }
        self.emitted += 1;
        Some(Ok(self.build()))
    }
}

impl Iterator for AlignmentIter<'_> {
    type Item = Result<Alignment>;

    fn next(&mut self) -> Option<Result<Alignment>> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                let width: usize = self.n.iter().sum();
                if width > self.budget.max_width {
                    self.state = State::Done;
                    return Some(Err(Error::BudgetExceeded(format!(
                        "alignments may reach width {width}, limit {}",
                        self.budget.max_width
                    ))));
                }
                if width == 0 {
                    self.state = State::Done;
                    return self.emit();
                }
                self.state = State::Running;
                self.cursor.push(self.full);
            }
            State::Running => {}
        }
        loop {
            let depth = self.cols.len();
            let mask = self.cursor[depth];
            if mask == 0 {
                if depth == 0 {
                    self.state = State::Done;
                    return None;
                }
                self.cursor.pop();
                let last = self.cols.pop().expect("depth > 0");
                self.apply(last, false);
                continue;
            }
            self.cursor[depth] = mask - 1;
            if !self.fits(mask) {
                continue;
            }
            self.cols.push(mask);
            self.apply(mask, true);
            if self.pos == self.n {
                let out = self.emit();
                self.cols.pop();
                self.apply(mask, false);
                return out;
            }
            self.cursor.push(self.full);
        }
    }
}

/// What the oracle minimizes.
#[derive(Debug, Clone, Copy)]
pub enum Objective<'a> {
    Score(Criterion, &'a ScoringMatrix),
    SpArray(&'a MatrixArray),
}

impl Objective<'_> {
    fn eval(&self, a: &Alignment) -> Result<Rational> {
        match *self {
            Objective::Score(c, g) => score(c, g, a),
            Objective::SpArray(arr) => score_sp_array(arr, a),
        }
    }
}

/// Minimum found by enumeration, with the first alignment attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: Rational,
    pub alignment: Alignment,
    pub alignments_enumerated: u64,
}

/// Exact minimum of `objective` over all alignments of `seqs`.
pub fn brute_force_optimum(
    seqs: &KSequence,
    objective: Objective<'_>,
    budget: EnumerationBudget,
) -> Result<OracleResult> {
    let mut all = brute_force_many(seqs, &[objective], budget)?;
    Ok(all.pop().expect("one objective"))
}

/// Minima of several objectives from a single enumeration.
pub fn brute_force_many(
    seqs: &KSequence,
    objectives: &[Objective<'_>],
    budget: EnumerationBudget,
) -> Result<Vec<OracleResult>> {
    let mut best: Vec<Option<(Rational, Alignment)>> = vec![None; objectives.len()];
    let mut iter = enumerate_alignments(seqs, budget);
    for a in iter.by_ref() {
        let a = a?;
        for (slot, obj) in best.iter_mut().zip(objectives) {
            let v = obj.eval(&a)?;
            if slot.as_ref().map_or(true, |(b, _)| v < *b) {
                *slot = Some((v, a.clone()));
            }
        }
    }
    let count = iter.emitted();
    Ok(best
        .into_iter()
        .map(|slot| {
            let (value, alignment) = slot.expect("every k-sequence has an alignment");
            OracleResult {
                value,
                alignment,
                alignments_enumerated: count,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Alphabet;
    use std::collections::HashSet;

    fn all(s: &[&str]) -> Vec<Alignment> {
        let seqs = KSequence::from_strs(s).unwrap();
        enumerate_alignments(&seqs, EnumerationBudget::default())
            .collect::<Result<Vec<_>>>()
            .unwrap()
    }

    /// Ordered set partitions: F(k) = Σ_{i=1..k} C(k,i) F(k-i), F(0) = 1.
    fn fubini(k: usize) -> usize {
        let mut f = vec![1usize; k + 1];
        for m in 1..=k {
            let mut binom = 1usize;
            let mut total = 0;
            for i in 1..=m {
                binom = binom * (m - i + 1) / i;
                total += binom * f[m - i];
            }
            f[m] = total;
        }
        f[k]
    }

    #[test]
    fn two_singletons() {
        let got: Vec<String> = all(&["a", "b"]).iter().map(|a| a.to_string()).collect();
        let want: Vec<String> = [["a", "b"], ["-a", "b-"], ["a-", "-b"]]
            .iter()
            .map(|r| Alignment::from_strs(r).unwrap().to_string())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn fubini_counts() {
        assert_eq!([fubini(1), fubini(2), fubini(3)], [1, 3, 13]);
        for k in 1..=4 {
            let s: Vec<String> = (0..k).map(|_| "a".to_string()).collect();
            let refs: Vec<&str> = s.iter().map(String::as_str).collect();
            assert_eq!(all(&refs).len(), fubini(k));
        }
    }

    #[test]
    fn empty_input_has_one_alignment() {
        let a = all(&["", ""]);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].width(), 0);
    }

    #[test]
    fn no_duplicates_and_all_valid() {
        let seqs = KSequence::from_strs(&["ab", "b", "ba"]).unwrap();
        let got = all(&["ab", "b", "ba"]);
        let set: HashSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len());
        for a in &got {
            a.check_sequences(&seqs).unwrap();
        }
    }

    #[test]
    fn budget_is_enforced() {
        let seqs = KSequence::from_strs(&["a", "b", "c"]).unwrap();
        let budget = EnumerationBudget {
            max_alignments: 5,
            ..EnumerationBudget::default()
        };
        let items: Vec<_> = enumerate_alignments(&seqs, budget).collect();
        assert_eq!(items.len(), 6);
        assert!(matches!(items[5], Err(Error::BudgetExceeded(_))));
        let narrow = EnumerationBudget {
            max_width: 2,
            ..EnumerationBudget::default()
        };
        assert!(brute_force_optimum(
            &seqs,
            Objective::Score(
                Criterion::Sp,
                &ScoringMatrix::levenshtein(Alphabet::new(b"abc").unwrap())
            ),
            narrow
        )
        .is_err());
    }

    #[test]
    fn trio_optima() {
        let abc = Alphabet::new(b"abc").unwrap();
        let gamma = ScoringMatrix::uniform(abc.clone(), 9, 10).unwrap();
        let seqs = KSequence::from_strs(&["a", "b", "c"]).unwrap();
        let v1 = brute_force_optimum(
            &seqs,
            Objective::Score(Criterion::V1, &gamma),
            EnumerationBudget::default(),
        )
        .unwrap();
        assert_eq!(v1.value, Rational::from_integer(20));
        assert_eq!(v1.alignments_enumerated, 13);

        let delta = ScoringMatrix::uniform(abc.clone(), 7, 9).unwrap();
        let perms = KSequence::from_strs(&["abc", "acb", "cba"]).unwrap();
        let v3 = brute_force_optimum(
            &perms,
            Objective::Score(Criterion::V3, &delta),
            EnumerationBudget::default(),
        )
        .unwrap();
        assert_eq!(v3.value, Rational::new(61, 12).unwrap());
        assert_eq!(v3.alignments_enumerated, 16081);

        let zero = ScoringMatrix::new(abc, &vec![vec![0; 4]; 4]).unwrap();
        let sp = brute_force_optimum(
            &perms,
            Objective::Score(Criterion::Sp, &zero),
            EnumerationBudget::default(),
        )
        .unwrap();
        assert_eq!(sp.value, Rational::ZERO);
    }
}
