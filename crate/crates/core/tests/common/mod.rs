//! Seeded generators shared by the integration tests and the acceptance
//! runner.
#![allow(dead_code)]

use nmsa_core::{
    classify_matrix, Alignment, Alphabet, KSequence, MatrixClass, ScoringMatrix, Sequence, GAP,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ab() -> Alphabet {
    Alphabet::new(b"ab").unwrap()
}

pub fn random_seq(rng: &mut TestRng, alphabet: &Alphabet, max_len: usize) -> Sequence {
    let len = rng.gen_range(0..=max_len);
    let bytes: Vec<u8> = (0..len)
        .map(|_| *alphabet.symbols().choose(rng).unwrap())
        .collect();
    Sequence::new(bytes).unwrap()
}

pub fn random_kseq(rng: &mut TestRng, alphabet: &Alphabet, k: usize, max_len: usize) -> KSequence {
    KSequence::new((0..k).map(|_| random_seq(rng, alphabet, max_len)).collect()).unwrap()
}

/// Every k-sequence over `alphabet` with lengths up to `max_len`.
pub fn all_kseqs(alphabet: &Alphabet, k: usize, max_len: usize) -> Vec<KSequence> {
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                alphabet.symbols().iter().map(move |&c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<u8>>| {
                words.iter().map(move |w| {
                    let mut p = prefix.clone();
                    p.push(w.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|ws| {
            KSequence::new(ws.into_iter().map(|w| Sequence::new(w).unwrap()).collect()).unwrap()
        })
        .collect()
}

/// Any non-negative integer matrix, diagonal and symmetry unconstrained.
pub fn random_matrix(rng: &mut TestRng, alphabet: &Alphabet, max_entry: i64) -> ScoringMatrix {
    let size = alphabet.len() + 1;
    let table: Vec<Vec<i64>> = (0..size)
        .map(|_| (0..size).map(|_| rng.gen_range(0..=max_entry)).collect())
        .collect();
    ScoringMatrix::new(alphabet.clone(), &table).unwrap()
}

/// Rejection-samples a matrix lying in `class`.
#[allow(clippy::needless_range_loop)]
pub fn random_in_class(
    rng: &mut TestRng,
    alphabet: &Alphabet,
    class: MatrixClass,
) -> ScoringMatrix {
    let size = alphabet.len() + 1;
    for _ in 0..100_000 {
        let gaps: Vec<i64> = (0..alphabet.len()).map(|_| rng.gen_range(1..=6)).collect();
        let symmetric = class == MatrixClass::C || rng.gen_bool(0.5);
        let mut t = vec![vec![0i64; size]; size];
        for a in 0..alphabet.len() {
            t[a][size - 1] = gaps[a];
            t[size - 1][a] = gaps[a];
            for b in 0..alphabet.len() {
                if a != b && (!symmetric || a < b) {
                    t[a][b] = rng.gen_range(1..=12);
                    if symmetric {
                        t[b][a] = t[a][b];
                    }
                }
            }
        }
        let m = ScoringMatrix::new(alphabet.clone(), &t).unwrap();
        if classify_matrix(&m).contains(class) {
            return m;
        }
    }
    panic!("no {class} matrix found");
}

/// A uniformly stepped random alignment of `seqs`.
pub fn random_alignment(rng: &mut TestRng, seqs: &KSequence) -> Alignment {
    let k = seqs.k();
    let n = seqs.lengths();
    let mut pos = vec![0usize; k];
    let mut rows = vec![Vec::new(); k];
    while pos != n {
        let open: Vec<usize> = (0..k).filter(|&i| pos[i] < n[i]).collect();
        let mut mask: Vec<bool> = vec![false; k];
        while !mask.iter().any(|&b| b) {
            for &i in &open {
                mask[i] = rng.gen_bool(0.5);
            }
        }
        for i in 0..k {
            if mask[i] {
                rows[i].push(seqs.get(i).as_bytes()[pos[i]]);
                pos[i] += 1;
            } else {
                rows[i].push(GAP);
            }
        }
    }
    Alignment::from_rows(rows).unwrap()
}
