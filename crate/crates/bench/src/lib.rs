//! Seeded instance generators shared by the benches.

use nmsa_core::{Alphabet, KSequence, ScoringMatrix, Sequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DNA: &[u8] = b"ACGT";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` uniform random sequences of exactly `len` symbols.
pub fn random_kseq(rng: &mut impl Rng, alphabet: &[u8], k: usize, len: usize) -> KSequence {
    let seqs = (0..k)
        .map(|_| {
            let s: Vec<u8> = (0..len)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                .collect();
            Sequence::new(s).expect("alphabet symbols are valid")
        })
        .collect();
    KSequence::new(seqs).expect("k >= 1")
}

/// Mismatch 1, gap 1.
pub fn levenshtein(alphabet: &[u8]) -> ScoringMatrix {
    ScoringMatrix::uniform(Alphabet::new(alphabet).unwrap(), 1, 1).unwrap()
}

/// Symmetric, zero diagonal, off-diagonal entries in `1..=9`.
#[allow(clippy::needless_range_loop)]
pub fn random_matrix(rng: &mut impl Rng, alphabet: &[u8]) -> ScoringMatrix {
    let n = alphabet.len() + 1;
    let mut t = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(1..=9);
            t[i][j] = v;
            t[j][i] = v;
        }
    }
    ScoringMatrix::new(Alphabet::new(alphabet).unwrap(), &t).unwrap()
}
