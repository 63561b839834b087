//! Pairwise distances: the edit distance d_A, the widest A-optimal
//! alignment, its normalized-score heuristic, and the normalized distance
//! d_N.

use serde::Serialize;

use crate::alignment::Alignment;
use crate::error::{Error, Result};
use crate::exact::{solve_exact, ExactOptions};
use crate::matrix::ScoringMatrix;
use crate::rational::Rational;
use crate::score::Criterion;
use crate::sequence::{KSequence, Sequence, GAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairwiseResult {
    pub value: Rational,
    pub alignment: Alignment,
    /// DP cells filled.
    pub cells: u64,
}

/// Per-cell state: least cost and the greatest width reaching it.
#[derive(Clone, Copy)]
struct Cell {
    cost: i64,
    width: usize,
}

struct Grid {
    cols: usize,
    cells: Vec<Cell>,
    s: Vec<usize>,
    t: Vec<usize>,
}

/// Moves in tie-break order: substitution, then insertion of `t(j)`, then
/// deletion of `s(i)`.
const MOVES: [(usize, usize); 3] = [(1, 1), (0, 1), (1, 0)];

fn encode(gamma: &ScoringMatrix, s: &Sequence, which: usize) -> Result<Vec<usize>> {
    s.as_bytes()
        .iter()
        .map(|&b| {
            gamma
                .alphabet()
                .index_of(b)
                .filter(|_| b != GAP)
                .ok_or(Error::AlphabetMismatch {
                    sequence: which,
                    symbol: b as char,
                })
        })
        .collect()
}

impl Grid {
    fn step_cost(&self, gamma: &ScoringMatrix, i: usize, j: usize, mv: (usize, usize)) -> i64 {
        let g = gamma.gap_index();
        let a = if mv.0 == 1 { self.s[i - 1] } else { g };
        let b = if mv.1 == 1 { self.t[j - 1] } else { g };
        gamma.cost_idx(a, b)
    }

    fn build(s: &Sequence, t: &Sequence, gamma: &ScoringMatrix) -> Result<Grid> {
        let s = encode(gamma, s, 1)?;
        let t = encode(gamma, t, 2)?;
        let (rows, cols) = (s.len() + 1, t.len() + 1);
        let mut grid = Grid {
            cols,
            cells: vec![Cell { cost: 0, width: 0 }; rows * cols],
            s,
            t,
        };
        for i in 0..rows {
            for j in 0..cols {
                if i == 0 && j == 0 {
                    continue;
                }
                let mut best: Option<Cell> = None;
                for mv in MOVES {
                    if i < mv.0 || j < mv.1 {
                        continue;
                    }
                    let p = grid.cells[(i - mv.0) * cols + (j - mv.1)];
                    let cand = Cell {
                        cost: p.cost + grid.step_cost(gamma, i, j, mv),
                        width: p.width + 1,
                    };
                    best = Some(match best {
                        None => cand,
                        Some(b) if cand.cost < b.cost => cand,
                        Some(b) if cand.cost == b.cost && cand.width > b.width => Cell {
                            cost: b.cost,
                            width: cand.width,
                        },
                        Some(b) => b,
                    });
                }
                grid.cells[i * cols + j] = best.expect("some move is always available");
            }
        }
        Ok(grid)
    }

    fn at(&self, i: usize, j: usize) -> Cell {
        self.cells[i * self.cols + j]
    }

    /// Walks back from the corner along cost-optimal moves. With
    /// `widest`, only moves that also keep the maximal width are taken.
    fn traceback(&self, gamma: &ScoringMatrix, widest: bool) -> Alignment {
        let (mut i, mut j) = (self.s.len(), self.t.len());
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        let sym = |x: usize| gamma.alphabet().symbols()[x];
        while i > 0 || j > 0 {
            let here = self.at(i, j);
            let mv = MOVES
                .into_iter()
                .find(|&mv| {
                    if i < mv.0 || j < mv.1 {
                        return false;
                    }
                    let p = self.at(i - mv.0, j - mv.1);
                    p.cost + self.step_cost(gamma, i, j, mv) == here.cost
                        && (!widest || p.width + 1 == here.width)
                })
                .expect("an optimal predecessor exists");
            top.push(if mv.0 == 1 { sym(self.s[i - 1]) } else { GAP });
            bottom.push(if mv.1 == 1 { sym(self.t[j - 1]) } else { GAP });
            i -= mv.0;
            j -= mv.1;
        }
        top.reverse();
        bottom.reverse();
        Alignment::from_rows_unchecked(vec![top, bottom])
    }

    fn corner(&self) -> Cell {
        self.at(self.s.len(), self.t.len())
    }

    fn cell_count(&self) -> u64 {
        self.cells.len() as u64
    }
}

fn in_units(cost: i64, gamma: &ScoringMatrix) -> Rational {
    Rational::new(cost as i128, gamma.unit() as i128).expect("unit is positive")
}

/// Edit distance under γ with an optimal alignment.
pub fn dist_a(s: &Sequence, t: &Sequence, gamma: &ScoringMatrix) -> Result<PairwiseResult> {
    let grid = Grid::build(s, t, gamma)?;
    Ok(PairwiseResult {
        value: in_units(grid.corner().cost, gamma),
        alignment: grid.traceback(gamma, false),
        cells: grid.cell_count(),
    })
}

/// `L(s, t)`: the greatest width of an A-optimal alignment.
pub fn max_optimal_length(s: &Sequence, t: &Sequence, gamma: &ScoringMatrix) -> Result<usize> {
    Ok(Grid::build(s, t, gamma)?.corner().width)
}

/// `d_A / L(s, t)` with the widest A-optimal alignment as witness; 0 for
/// two empty sequences. At most twice `d_N`.
pub fn heuristic_n(s: &Sequence, t: &Sequence, gamma: &ScoringMatrix) -> Result<PairwiseResult> {
    let grid = Grid::build(s, t, gamma)?;
    let c = grid.corner();
    Ok(PairwiseResult {
        value: Rational::ratio_or_zero(c.cost as i128, c.width as i128 * gamma.unit() as i128),
        alignment: grid.traceback(gamma, true),
        cells: grid.cell_count(),
    })
}

/// Normalized edit distance: least A-score over width.
pub fn dist_n(s: &Sequence, t: &Sequence, gamma: &ScoringMatrix) -> Result<PairwiseResult> {
    dist_n_with(s, t, gamma, &ExactOptions::default())
}

pub fn dist_n_with(
    s: &Sequence,
    t: &Sequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<PairwiseResult> {
    let pair = KSequence::new(vec![s.clone(), t.clone()])?;
    let r = solve_exact(Criterion::N, &pair, gamma, opts)?;
    Ok(PairwiseResult {
        value: r.value,
        alignment: r.alignment,
        cells: r.cells,
    })
}
