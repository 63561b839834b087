//! Exact dynamic programs over the prefix lattice of a k-sequence.
//!
//! All of them share one table engine. A cell is a prefix cursor `v`,
//! optionally extended by length coordinates that count columns, and its
//! value is the least integer cost of aligning the prefix `S(1:v)` so that
//! the length coordinates come out exactly. Cells that no alignment reaches
//! are marked infeasible.

mod eail;
mod engine;
mod msa;
mod nmsa;

use serde::Serialize;

pub use eail::{eail_check, eail_to_rip, EailOutcome};
pub use msa::{msa_exact, msa_exact_array};
pub use nmsa::{nmsa1_exact, nmsa2_exact, nmsa2_for_lengths, nmsa3_exact};

use crate::alignment::Alignment;
use crate::error::{Error, Result};
use crate::matrix::{MatrixArray, ScoringMatrix};
use crate::rational::Rational;
use crate::score::Criterion;
use crate::sequence::KSequence;

/// Default cap on the estimated number of table cells.
pub const DEFAULT_MAX_CELLS: u128 = 100_000_000;

/// Exact algorithms enumerate all `2^k - 1` column shapes per cell.
pub const MAX_EXACT_K: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactMethod {
    Msa,
    MsaArray,
    Nmsa1,
    Nmsa2,
    Nmsa3,
}

/// Optimal value with an alignment attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: Rational,
    pub alignment: Alignment,
    pub method: ExactMethod,
    /// Table cells filled, summed over every table built.
    pub cells: u64,
}

/// Limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Abort before allocating when the estimated cell count exceeds this.
    pub max_cells: u128,
    /// Skip induced-length vectors that cannot be realized by any
    /// alignment before running their table. Never changes the result.
    pub dominance_skip: bool,
    /// Visit induced-length vectors in order of a pairwise lower bound and
    /// stop once the bound exceeds the best value found. Never changes the
    /// result.
    pub bound_pruning: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            max_cells: DEFAULT_MAX_CELLS,
            dominance_skip: true,
            bound_pruning: true,
        }
    }
}

impl ExactOptions {
    pub fn with_max_cells(max_cells: u128) -> Self {
        ExactOptions {
            max_cells,
            ..ExactOptions::default()
        }
    }

    pub(crate) fn guard(&self, estimate: u128) -> Result<()> {
        if estimate > self.max_cells {
            return Err(Error::ResourceCapExceeded {
                estimate,
                cap: self.max_cells,
            });
        }
        Ok(())
    }
}

/// Solves `criterion` exactly. A and N are the two-sequence cases of SP
/// and V1.
pub fn solve_exact(
    criterion: Criterion,
    seqs: &KSequence,
    gamma: &ScoringMatrix,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    if criterion.is_pairwise() && seqs.k() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: seqs.k(),
        });
    }
    match criterion {
        Criterion::A | Criterion::Sp => msa::msa_with(seqs, gamma, opts),
        Criterion::N | Criterion::V1 => nmsa::nmsa1_with(seqs, gamma, opts),
        Criterion::V2 => nmsa::nmsa2_with(seqs, gamma, opts),
        Criterion::V3 => nmsa::nmsa3_with(seqs, gamma, opts),
    }
}

/// SP under a per-pair matrix array, with explicit limits.
pub fn solve_exact_array(
    seqs: &KSequence,
    gammas: &MatrixArray,
    opts: &ExactOptions,
) -> Result<ExactResult> {
    msa::msa_array_with(seqs, gammas, opts)
}

/// Shared input checks: `2 <= k <= MAX_EXACT_K`.
pub(crate) fn check_k(seqs: &KSequence) -> Result<()> {
    if seqs.k() < 2 {
        return Err(Error::TooFewSequences {
            needed: 2,
            got: seqs.k(),
        });
    }
    if seqs.k() > MAX_EXACT_K {
        return Err(Error::TooManySequences {
            max: MAX_EXACT_K,
            got: seqs.k(),
        });
    }
    Ok(())
}

/// The answer for a k-sequence of empty sequences.
pub(crate) fn empty_result(seqs: &KSequence, method: ExactMethod) -> ExactResult {
    ExactResult {
        value: Rational::ZERO,
        alignment: Alignment::empty(seqs.k()),
        method,
        cells: 1,
    }
}
