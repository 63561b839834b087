//! Multiple sequence alignment under sum-of-pairs and length-normalized
//! criteria.
//!
//! The crate provides
//!
//! * sequences, alignments and scoring matrices ([`sequence`],
//!   [`alignment`], [`matrix`], [`classify`]);
//! * the six scores A, N, SP, V1, V2 and V3 ([`score`]);
//! * exact pairwise distances ([`pairwise`]);
//! * exact k-sequence dynamic programs ([`exact`]);
//! * star-based approximations ([`approx`]);
//! * a brute-force enumerator used as a reference ([`oracle`]).
//!
//! Scores are exact [`Rational`]s. Matrices are stored as integers over a
//! common unit so every table runs in integer arithmetic.

pub mod alignment;
pub mod approx;
pub mod classify;
pub mod error;
pub mod exact;
pub mod kvec;
pub mod matrix;
pub mod oracle;
pub mod pairwise;
pub mod rational;
pub mod score;
pub mod sequence;

pub use alignment::{
    alignment_from_bitvectors, column_from_bits, induced_alignment, validate_alignment, Alignment,
};
pub use approx::{
    approx_msa, approx_nmsa2, compatible_align, optimal_star, split_alignment, star_splitting,
    ApproxResult, Guarantee, Star, StarCriterion,
};
pub use classify::{classify_matrix, MatrixClass, MatrixClassReport, Violation};
pub use error::{Error, Result};
pub use exact::{
    eail_check, eail_to_rip, msa_exact, msa_exact_array, nmsa1_exact, nmsa2_exact,
    nmsa2_for_lengths, nmsa3_exact, solve_exact, solve_exact_array, EailOutcome, ExactMethod,
    ExactOptions, ExactResult,
};
pub use kvec::{iterate_index_vectors, BitVector, IndexVector};
pub use matrix::{MatrixArray, ScoringMatrix};
pub use oracle::{
    brute_force_many, brute_force_optimum, enumerate_alignments, EnumerationBudget, Objective,
    OracleResult,
};
pub use pairwise::{dist_a, dist_n, dist_n_with, heuristic_n, max_optimal_length, PairwiseResult};
pub use rational::{Rational, Rounding};
pub use score::{
    induced_lengths, score, score_a, score_n, score_sp, score_sp_array, score_sp_by_pairs,
    score_v1, score_v2, score_v3, Criterion,
};
pub use sequence::{Alphabet, KSequence, Sequence, GAP};
