mod common;

use common::*;
use nmsa_core::{
    brute_force_many, brute_force_optimum, dist_a, dist_n, msa_exact, msa_exact_array, nmsa1_exact,
    nmsa2_exact, nmsa3_exact, score, Criterion, EnumerationBudget, KSequence, MatrixArray,
    Objective, ScoringMatrix, Sequence,
};

const CRITERIA: [Criterion; 4] = [Criterion::Sp, Criterion::V1, Criterion::V2, Criterion::V3];

fn check(seqs: &KSequence, gamma: &ScoringMatrix) {
    let objectives: Vec<Objective> = CRITERIA
        .iter()
        .map(|&c| Objective::Score(c, gamma))
        .collect();
    let truth = brute_force_many(seqs, &objectives, EnumerationBudget::default()).unwrap();
    let exact = [
        msa_exact(seqs, gamma).unwrap(),
        nmsa1_exact(seqs, gamma).unwrap(),
        nmsa2_exact(seqs, gamma).unwrap(),
        nmsa3_exact(seqs, gamma).unwrap(),
    ];
    for ((c, t), e) in CRITERIA.iter().zip(&truth).zip(&exact) {
        assert_eq!(e.value, t.value, "{c} on {seqs:?} under {gamma:?}");
        e.alignment.check_sequences(seqs).unwrap();
        assert_eq!(
            score(*c, gamma, &e.alignment).unwrap(),
            e.value,
            "{c} rescoring"
        );
    }
}

#[test]
fn exhaustive_k3_len2_binary() {
    let mut r = rng(11);
    let matrices: Vec<ScoringMatrix> = (0..5).map(|_| random_matrix(&mut r, &ab(), 9)).collect();
    for seqs in all_kseqs(&ab(), 3, 2) {
        for g in &matrices {
            check(&seqs, g);
        }
    }
}

#[test]
fn random_instances_len3() {
    let mut r = rng(12);
    for _ in 0..50 {
        let g = random_matrix(&mut r, &ab(), 9);
        let seqs = random_kseq(&mut r, &ab(), 3, 3);
        check(&seqs, &g);
    }
}

#[test]
fn four_sequences() {
    let mut r = rng(13);
    for _ in 0..4 {
        let g = random_matrix(&mut r, &ab(), 5);
        let seqs = random_kseq(&mut r, &ab(), 4, 2);
        check(&seqs, &g);
    }
}

#[test]
fn matrix_array_matches_oracle() {
    let mut r = rng(14);
    for _ in 0..20 {
        let seqs = random_kseq(&mut r, &ab(), 3, 2);
        let arr =
            MatrixArray::new(3, (0..3).map(|_| random_matrix(&mut r, &ab(), 7)).collect()).unwrap();
        let t = brute_force_optimum(
            &seqs,
            Objective::SpArray(&arr),
            EnumerationBudget::default(),
        )
        .unwrap();
        assert_eq!(msa_exact_array(&seqs, &arr).unwrap().value, t.value);
    }
}

#[test]
fn pairwise_matches_oracle_exhaustively() {
    let mut r = rng(15);
    let g = random_matrix(&mut r, &ab(), 9);
    let words: Vec<Sequence> = all_kseqs(&ab(), 1, 4)
        .into_iter()
        .map(|s| s.get(0).clone())
        .collect();
    for s in &words {
        for t in &words {
            let pair = KSequence::new(vec![s.clone(), t.clone()]).unwrap();
            let truth = brute_force_many(
                &pair,
                &[
                    Objective::Score(Criterion::A, &g),
                    Objective::Score(Criterion::N, &g),
                ],
                EnumerationBudget::default(),
            )
            .unwrap();
            assert_eq!(
                dist_a(s, t, &g).unwrap().value,
                truth[0].value,
                "A {s:?} {t:?}"
            );
            assert_eq!(
                dist_n(s, t, &g).unwrap().value,
                truth[1].value,
                "N {s:?} {t:?}"
            );
        }
    }
}

#[test]
#[ignore]
fn exhaustive_k3_len3_binary() {
    let mut r = rng(16);
    let matrices: Vec<ScoringMatrix> = (0..5).map(|_| random_matrix(&mut r, &ab(), 9)).collect();
    for seqs in all_kseqs(&ab(), 3, 3) {
        for g in &matrices {
            check(&seqs, g);
        }
    }
}
