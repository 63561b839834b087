//! Alignment scores: A and N for pairs, SP and its normalized variants for
//! k rows.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alignment::Alignment;
use crate::error::{Error, Result};
use crate::matrix::{MatrixArray, ScoringMatrix};
use crate::rational::Rational;
use crate::sequence::pairs;

/// The scoring criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    /// Unweighted pairwise cost.
    A,
    /// Pairwise cost over alignment width.
    N,
    /// Sum of pairs.
    Sp,
    /// SP over alignment width.
    V1,
    /// Sum of the N-scores of the induced pairs.
    V2,
    /// SP over the summed widths of the induced pairs.
    V3,
}

impl Criterion {
    pub const ALL: [Criterion; 6] = [
        Criterion::A,
        Criterion::N,
        Criterion::Sp,
        Criterion::V1,
        Criterion::V2,
        Criterion::V3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::A => "a",
            Criterion::N => "n",
            Criterion::Sp => "sp",
            Criterion::V1 => "v1",
            Criterion::V2 => "v2",
            Criterion::V3 => "v3",
        }
    }

    /// A and N are only defined for two sequences.
    pub fn is_pairwise(self) -> bool {
        matches!(self, Criterion::A | Criterion::N)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parse(0, format!("unknown criterion {s:?}")))
    }
}

/// Rows as matrix indices; rejects symbols outside the alphabet.
fn encode(gamma: &ScoringMatrix, a: &Alignment) -> Result<Vec<Vec<usize>>> {
    a.rows()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .map(|&b| {
                    gamma.alphabet().index_of(b).ok_or(Error::AlphabetMismatch {
                        sequence: r + 1,
                        symbol: b as char,
                    })
                })
                .collect()
        })
        .collect()
}

fn require_pair(a: &Alignment) -> Result<()> {
    if a.k() != 2 {
        return Err(Error::WrongRowCount { rows: a.k() });
    }
    Ok(())
}

fn units(total: i128, unit: i64) -> Rational {
    Rational::new(total, unit as i128).expect("unit is positive")
}

/// Integer cost of a 2-row alignment, in matrix units.
fn pair_cost(gamma: &ScoringMatrix, s: &[usize], t: &[usize]) -> i128 {
    s.iter()
        .zip(t)
        .map(|(&x, &y)| gamma.cost_idx(x, y) as i128)
        .sum()
}

/// Sum of the column costs.
pub fn score_a(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    require_pair(a)?;
    let rows = encode(gamma, a)?;
    Ok(units(pair_cost(gamma, &rows[0], &rows[1]), gamma.unit()))
}

/// A-score over width; 0 for the empty alignment.
pub fn score_n(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    let total = score_a(gamma, a)?;
    Ok(if a.width() == 0 {
        Rational::ZERO
    } else {
        total / Rational::from_integer(a.width() as i128)
    })
}

/// SP cost in integer matrix units, summed column by column.
pub(crate) fn sp_units(gamma: &ScoringMatrix, a: &Alignment) -> Result<i128> {
    let rows = encode(gamma, a)?;
    let mut total = 0i128;
    let mut col = vec![0usize; a.k()];
    for j in 0..a.width() {
        for (c, row) in col.iter_mut().zip(&rows) {
            *c = row[j];
        }
        for h in 0..col.len() {
            for i in h + 1..col.len() {
                total += gamma.cost_idx(col[h], col[i]) as i128;
            }
        }
    }
    Ok(total)
}

/// Sum-of-pairs score, summed column by column with `γ(-,-) = 0`.
pub fn score_sp(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    Ok(units(sp_units(gamma, a)?, gamma.unit()))
}

/// Sum-of-pairs score as the sum of A-scores of the induced pairwise
/// alignments. Always equal to [`score_sp`].
pub fn score_sp_by_pairs(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    let mut total = Rational::ZERO;
    for (h, i) in pairs(a.k()) {
        total += score_a(gamma, &a.induced(&[h, i])?)?;
    }
    Ok(total)
}

/// Sum of pair scores, each pair under its own matrix.
pub fn score_sp_array(gammas: &MatrixArray, a: &Alignment) -> Result<Rational> {
    if gammas.k() != a.k() {
        return Err(Error::ArityMismatch {
            k: a.k(),
            expected: gammas.matrices().len(),
            got: crate::sequence::pair_count(a.k()),
        });
    }
    let mut total = Rational::ZERO;
    for (h, i) in pairs(a.k()) {
        let gamma = gammas.get(h, i);
        let rows = encode(gamma, a)?;
        total += units(pair_cost(gamma, &rows[h], &rows[i]), gamma.unit());
    }
    Ok(total)
}

/// Widths of the induced pairwise alignments, in pair order.
pub fn induced_lengths(a: &Alignment) -> Vec<usize> {
    pairs(a.k())
        .map(|(h, i)| a.induced_pair_width(h, i))
        .collect()
}

/// SP over width; 0 for the empty alignment.
pub fn score_v1(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    Ok(Rational::ratio_or_zero(
        sp_units(gamma, a)?,
        a.width() as i128 * gamma.unit() as i128,
    ))
}

/// Sum over pairs of the N-score of the induced pairwise alignment.
pub fn score_v2(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    let rows = encode(gamma, a)?;
    let mut total = Rational::ZERO;
    for (h, i) in pairs(a.k()) {
        let width = a.induced_pair_width(h, i);
        let cost = pair_cost(gamma, &rows[h], &rows[i]);
        total += Rational::ratio_or_zero(cost, width as i128 * gamma.unit() as i128);
    }
    Ok(total)
}

/// SP over the summed widths of the induced pairs; 0 for the empty
/// alignment.
pub fn score_v3(gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    let widths: usize = induced_lengths(a).iter().sum();
    Ok(Rational::ratio_or_zero(
        sp_units(gamma, a)?,
        widths as i128 * gamma.unit() as i128,
    ))
}

/// Dispatches on `criterion`.
pub fn score(criterion: Criterion, gamma: &ScoringMatrix, a: &Alignment) -> Result<Rational> {
    match criterion {
        Criterion::A => score_a(gamma, a),
        Criterion::N => score_n(gamma, a),
        Criterion::Sp => score_sp(gamma, a),
        Criterion::V1 => score_v1(gamma, a),
        Criterion::V2 => score_v2(gamma, a),
        Criterion::V3 => score_v3(gamma, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn aln(rows: &[&str]) -> Alignment {
        Alignment::from_strs(rows).unwrap()
    }

    #[test]
    fn pair_scores() {
        let g = gamma();
        assert_eq!(score_a(&g, &aln(&["a", "b"])).unwrap(), r(9, 1));
        assert_eq!(score_a(&g, &aln(&["a-", "-c"])).unwrap(), r(20, 1));
        assert_eq!(score_n(&g, &aln(&["a-", "-c"])).unwrap(), r(10, 1));
        assert_eq!(score_a(&g, &Alignment::empty(2)).unwrap(), Rational::ZERO);
        assert_eq!(score_n(&g, &Alignment::empty(2)).unwrap(), Rational::ZERO);
        let lev = ScoringMatrix::levenshtein(Alphabet::new(b"ab").unwrap());
        assert_eq!(score_n(&lev, &aln(&["aa", "ab"])).unwrap(), r(1, 2));
        assert_eq!(
            score_a(&g, &aln(&["a", "b", "c"])),
            Err(Error::WrongRowCount { rows: 3 })
        );
    }

    #[test]
    fn trio_gamma_values() {
        let g = gamma();
        let a = aln(&["a", "b", "c"]);
        let b = aln(&["a-", "b-", "-c"]);
        let c = aln(&["a--", "-b-", "--c"]);
        assert_eq!(score_sp(&g, &a).unwrap(), r(27, 1));
        assert_eq!(score_sp(&g, &b).unwrap(), r(49, 1));
        assert_eq!(score_v1(&g, &a).unwrap(), r(27, 1));
        assert_eq!(score_v1(&g, &b).unwrap(), r(49, 2));
        assert_eq!(score_v1(&g, &c).unwrap(), r(20, 1));
        assert_eq!(score_v2(&g, &a).unwrap(), r(27, 1));
        assert_eq!(score_v2(&g, &b).unwrap(), r(29, 1));
        assert_eq!(score_v2(&g, &c).unwrap(), r(30, 1));
        assert_eq!(score_v3(&g, &a).unwrap(), r(9, 1));
        assert_eq!(score_v3(&g, &b).unwrap(), r(49, 5));
        assert_eq!(score_v3(&g, &c).unwrap(), r(10, 1));
    }

    #[test]
    fn trio_delta_values() {
        let d = delta();
        let dd = aln(&["abc", "acb", "cba"]);
        let ee = aln(&["abc-", "a-cb", "cba-"]);
        let ff = aln(&["abc--", "a-cb-", "--cba"]);
        assert_eq!(score_v1(&d, &dd).unwrap(), r(49, 3));
        assert_eq!(score_v2(&d, &dd).unwrap(), r(49, 3));
        assert_eq!(score_v3(&d, &dd).unwrap(), r(49, 9));
        assert_eq!(score_v2(&d, &ee).unwrap(), r(103, 6));
        assert_eq!(score_v3(&d, &ee).unwrap(), r(64, 11));
        assert_eq!(score_v2(&d, &ff).unwrap(), r(81, 5));
        assert_eq!(score_v3(&d, &ff).unwrap(), r(72, 13));
    }

    #[test]
    fn empty_alignment_scores_zero() {
        let g = gamma();
        let e = Alignment::empty(3);
        for c in [Criterion::Sp, Criterion::V1, Criterion::V2, Criterion::V3] {
            assert_eq!(score(c, &g, &e).unwrap(), Rational::ZERO);
        }
    }

    #[test]
    fn sp_routes_agree() {
        let g = gamma();
        let x = aln(&["ab-c", "a-bc", "-c-a"]);
        assert_eq!(
            score_sp(&g, &x).unwrap(),
            score_sp_by_pairs(&g, &x).unwrap()
        );
    }

    #[test]
    fn arrays() {
        let g = gamma();
        let x = aln(&["ab-c", "a-bc", "-c-a"]);
        let uniform = MatrixArray::uniform(&g, 3);
        assert_eq!(
            score_sp_array(&uniform, &x).unwrap(),
            score_sp(&g, &x).unwrap()
        );
        let lengths = induced_lengths(&x);
        let by_len = MatrixArray::scaled_by_lengths(&g, &lengths).unwrap();
        assert_eq!(
            score_sp_array(&by_len, &x).unwrap(),
            score_v2(&g, &x).unwrap()
        );

        let doubled = g.scale(Rational::from_integer(2)).unwrap();
        let arr = MatrixArray::new(3, vec![doubled, g.clone(), g.clone()]).unwrap();
        let pair12 = score_a(&g, &x.induced(&[0, 1]).unwrap()).unwrap();
        assert_eq!(
            score_sp_array(&arr, &x).unwrap(),
            score_sp(&g, &x).unwrap() + pair12
        );
        assert!(matches!(
            score_sp_array(&MatrixArray::uniform(&g, 2), &x),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn foreign_symbols_are_rejected() {
        assert_eq!(
            score_sp(&gamma(), &aln(&["a", "x"])),
            Err(Error::AlphabetMismatch {
                sequence: 2,
                symbol: 'x'
            })
        );
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.name().parse::<Criterion>().unwrap(), c);
        }
        assert!("v4".parse::<Criterion>().is_err());
    }
}
