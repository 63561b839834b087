//! Star approximations.
//!
//! A star fixes a center sequence and one pairwise alignment (an arm) of
//! every other sequence against it. The pipeline picks the cheapest star,
//! optionally splits substitution columns that are no cheaper than an
//! indel, and threads the arms into one multiple alignment that induces each
//! arm exactly.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::alignment::Alignment;
use crate::classify::classify_matrix;
use crate::error::{Error, Result};
use crate::matrix::ScoringMatrix;
use crate::pairwise::{dist_a, dist_n};
use crate::rational::Rational;
use crate::score::{score_a, score_n, score_sp, score_v2};
use crate::sequence::{pairs, KSequence, GAP};

/// The pairwise criterion a star is optimized for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StarCriterion {
    A,
    N,
}

/// A center and one arm per other sequence.
///
/// Arm rows follow sequence order: the arm of `h` is `[s_h; s_c]` when
/// `h < c` and `[s_c; s_h]` when `h > c`, so it reads like the induced
/// alignment of rows `{h, c}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Star {
    center: usize,
    /// `(h, arm)` for every `h != center`, ascending.
    arms: Vec<(usize, Alignment)>,
}

impl Star {
    /// Checks that the arms cover every non-center sequence once and
    /// degap to the right sequences.
    pub fn new(seqs: &KSequence, center: usize, mut arms: Vec<(usize, Alignment)>) -> Result<Star> {
        let k = seqs.k();
        if center >= k {
            return Err(Error::IncoherentStar(format!(
                "center {} out of range",
                center + 1
            )));
        }
        arms.sort_by_key(|(h, _)| *h);
        let want: Vec<usize> = (0..k).filter(|&h| h != center).collect();
        let got: Vec<usize> = arms.iter().map(|(h, _)| *h).collect();
        if want != got {
            return Err(Error::IncoherentStar(
                "arms must cover each non-center sequence once".into(),
            ));
        }
        for (h, arm) in &arms {
            if arm.k() != 2 {
                return Err(Error::IncoherentStar(format!(
                    "arm {} has {} rows",
                    h + 1,
                    arm.k()
                )));
            }
            let (hr, cr) = if *h < center { (0, 1) } else { (1, 0) };
            if arm.degapped(cr) != *seqs.get(center) {
                return Err(Error::IncoherentStar(format!(
                    "arm {} does not degap to the center",
                    h + 1
                )));
            }
            if arm.degapped(hr) != *seqs.get(*h) {
                return Err(Error::IncoherentStar(format!(
                    "arm {} does not degap to sequence {}",
                    h + 1,
                    h + 1
                )));
            }
        }
        Ok(Star { center, arms })
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn arms(&self) -> &[(usize, Alignment)] {
        &self.arms
    }

    pub fn k(&self) -> usize {
        self.arms.len() + 1
    }

    /// `cStar`: the summed arm scores.
    pub fn cost(&self, gamma: &ScoringMatrix, criterion: StarCriterion) -> Result<Rational> {
        let mut total = Rational::ZERO;
        for (_, arm) in &self.arms {
            total += match criterion {
                StarCriterion::A => score_a(gamma, arm)?,
                StarCriterion::N => score_n(gamma, arm)?,
            };
        }
        Ok(total)
    }
}

/// The star whose arms are pairwise optimal and whose summed arm cost is
/// least; ties go to the smallest center.
pub fn optimal_star(
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    criterion: StarCriterion,
) -> Result<Star> {
    let k = seqs.k();
    if k < 2 {
        return Err(Error::TooFewSequences { needed: 2, got: k });
    }
    gamma.encode(seqs)?;
    let pair_list: Vec<(usize, usize)> = pairs(k).collect();
    let optima = pair_list
        .par_iter()
        .map(|&(h, i)| {
            let r = match criterion {
                StarCriterion::A => dist_a(seqs.get(h), seqs.get(i), gamma)?,
                StarCriterion::N => dist_n(seqs.get(h), seqs.get(i), gamma)?,
            };
            Ok((r.value, r.alignment))
        })
        .collect::<Result<Vec<_>>>()?;
    let lookup = |h: usize, i: usize| {
        let (lo, hi) = (h.min(i), h.max(i));
        &optima[crate::sequence::pair_index(lo, hi, k)]
    };
    let mut best: Option<(Rational, usize)> = None;
    for c in 0..k {
        let total: Rational = (0..k).filter(|&h| h != c).map(|h| lookup(h, c).0).sum();
        if best.map_or(true, |(b, _)| total < b) {
            best = Some((total, c));
        }
    }
    let (_, center) = best.expect("k >= 2");
    let arms = (0..k)
        .filter(|&h| h != center)
        .map(|h| (h, lookup(h, center).1.clone()))
        .collect();
    Ok(Star { center, arms })
}

/// True when column `(s, t)` pairs two symbols and dropping either one is
/// no dearer than substituting.
fn splittable(gamma: &ScoringMatrix, s: u8, t: u8) -> bool {
    s != GAP && t != GAP && gamma.cost(t, GAP).min(gamma.cost(s, GAP)) <= gamma.cost(s, t)
}

/// Replaces every splittable column `[s; t]` by `[s -; - t]`.
pub fn split_alignment(a: &Alignment, gamma: &ScoringMatrix) -> Result<Alignment> {
    if a.k() != 2 {
        return Err(Error::WrongRowCount { rows: a.k() });
    }
    for (r, row) in a.rows().iter().enumerate() {
        if let Some(&b) = row
            .iter()
            .find(|&&b| gamma.alphabet().index_of(b).is_none())
        {
            return Err(Error::AlphabetMismatch {
                sequence: r + 1,
                symbol: b as char,
            });
        }
    }
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for (&s, &t) in a.row(0).iter().zip(a.row(1)) {
        if splittable(gamma, s, t) {
            top.extend([s, GAP]);
            bottom.extend([GAP, t]);
        } else {
            top.push(s);
            bottom.push(t);
        }
    }
    Ok(Alignment::from_rows_unchecked(vec![top, bottom]))
}

/// Splits every arm of `star`.
pub fn star_splitting(star: &Star, gamma: &ScoringMatrix) -> Result<Star> {
    let arms = star
        .arms
        .iter()
        .map(|(h, arm)| Ok((*h, split_alignment(arm, gamma)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Star {
        center: star.center,
        arms,
    })
}

/// One arm seen from the center: the symbol matched to each center
/// position, and the symbols inserted before each center position (index
/// `|s_c|` holds the tail).
struct Threaded {
    matched: Vec<u8>,
    inserted: Vec<Vec<u8>>,
}

fn thread_arm(arm: &Alignment, center_row: usize, center_len: usize) -> Threaded {
    let other_row = 1 - center_row;
    let mut matched = vec![GAP; center_len];
    let mut inserted = vec![Vec::new(); center_len + 1];
    let mut p = 0;
    for (&c, &o) in arm.row(center_row).iter().zip(arm.row(other_row)) {
        if c == GAP {
            inserted[p].push(o);
        } else {
            matched[p] = o;
            p += 1;
        }
    }
    Threaded { matched, inserted }
}

/// A multiple alignment inducing every arm of `star` exactly.
///
/// Center positions are walked in order. Before each center column, and
/// after the last one, the symbols each arm inserts there are emitted as
/// columns of their own, arm by arm in sequence order.
pub fn compatible_align(star: &Star) -> Result<Alignment> {
    let k = star.k();
    let c = star.center;
    let center_seq: Vec<u8> = match star.arms.first() {
        Some((h, arm)) => arm.degapped(if *h < c { 1 } else { 0 }).as_bytes().to_vec(),
        None => return Err(Error::TooFewSequences { needed: 2, got: 1 }),
    };
    let mut threads: Vec<(usize, Threaded)> = Vec::with_capacity(k - 1);
    for (h, arm) in &star.arms {
        let cr = if *h < c { 1 } else { 0 };
        if arm.degapped(cr).as_bytes() != center_seq.as_slice() {
            return Err(Error::IncoherentStar(format!(
                "arm {} disagrees on the center sequence",
                h + 1
            )));
        }
        threads.push((*h, thread_arm(arm, cr, center_seq.len())));
    }
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); k];
    let gap_column = |rows: &mut Vec<Vec<u8>>, h: usize, sym: u8| {
        for (r, row) in rows.iter_mut().enumerate() {
            row.push(if r == h { sym } else { GAP });
        }
    };
    for p in 0..=center_seq.len() {
        for (h, t) in &threads {
            for &sym in &t.inserted[p] {
                gap_column(&mut rows, *h, sym);
            }
        }
        if p < center_seq.len() {
            rows[c].push(center_seq[p]);
            for (h, t) in &threads {
                rows[*h].push(t.matched[p]);
            }
        }
    }
    Ok(Alignment::from_rows_unchecked(rows))
}

/// Proven bound of an approximation result relative to the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Guarantee {
    Two,
    Six,
    Twelve,
    None,
}

impl Guarantee {
    pub fn factor(self) -> Option<i64> {
        match self {
            Guarantee::Two => Some(2),
            Guarantee::Six => Some(6),
            Guarantee::Twelve => Some(12),
            Guarantee::None => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Guarantee::Two => "2",
            Guarantee::Six => "6",
            Guarantee::Twelve => "12",
            Guarantee::None => "none",
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Guarantee {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApproxResult {
    pub alignment: Alignment,
    pub value: Rational,
    pub center: usize,
    pub guarantee: Guarantee,
    /// Summed arm cost of the star before splitting.
    pub star_cost: Rational,
    /// Whether arms were split before threading.
    pub split: bool,
}

/// SP approximation. Within a factor 2 of the optimum when γ ∈ M^C (arms
/// kept as they are) and 6 when γ ∈ M^W (arms split first). Other
/// matrices get the split pipeline and no guarantee.
pub fn approx_msa(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ApproxResult> {
    let class = classify_matrix(gamma);
    let star = optimal_star(seqs, gamma, StarCriterion::A)?;
    let star_cost = star.cost(gamma, StarCriterion::A)?;
    let (split, guarantee) = if class.in_mc {
        (false, Guarantee::Two)
    } else if class.in_mw {
        (true, Guarantee::Six)
    } else {
        (true, Guarantee::None)
    };
    let used = if split {
        star_splitting(&star, gamma)?
    } else {
        star.clone()
    };
    let alignment = compatible_align(&used)?;
    Ok(ApproxResult {
        value: score_sp(gamma, &alignment)?,
        alignment,
        center: star.center,
        guarantee,
        star_cost,
        split,
    })
}

/// V2 approximation from a star of pairwise N-optimal arms, split before
/// threading. Within a factor 12 when γ ∈ M^N.
pub fn approx_nmsa2(seqs: &KSequence, gamma: &ScoringMatrix) -> Result<ApproxResult> {
    let class = classify_matrix(gamma);
    let star = optimal_star(seqs, gamma, StarCriterion::N)?;
    let star_cost = star.cost(gamma, StarCriterion::N)?;
    let alignment = compatible_align(&star_splitting(&star, gamma)?)?;
    Ok(ApproxResult {
        value: score_v2(gamma, &alignment)?,
        alignment,
        center: star.center,
        guarantee: if class.in_mn {
            Guarantee::Twelve
        } else {
            Guarantee::None
        },
        star_cost,
        split: true,
    })
}
