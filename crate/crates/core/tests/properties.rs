mod common;

use common::*;
use nmsa_core::{
    alignment_from_bitvectors, classify_matrix, induced_alignment, induced_lengths,
    iterate_index_vectors, msa_exact, nmsa1_exact, score, score_sp, score_sp_array,
    score_sp_by_pairs, score_v2, validate_alignment, Alignment, Criterion, KSequence, MatrixArray,
    Rational, ScoringMatrix,
};
use proptest::prelude::*;

/// A seed-driven instance: sequences, a matrix and two alignments of them.
#[derive(Debug, Clone)]
struct Instance {
    seqs: KSequence,
    gamma: ScoringMatrix,
    a: Alignment,
    b: Alignment,
}

fn instance(max_k: usize, max_len: usize) -> impl Strategy<Value = Instance> {
    (any::<u64>(), 1..=max_k).prop_map(move |(seed, k)| {
        let mut r = rng(seed);
        let seqs = random_kseq(&mut r, &ab(), k, max_len);
        let gamma = random_matrix(&mut r, &ab(), 9);
        let a = random_alignment(&mut r, &seqs);
        let b = random_alignment(&mut r, &seqs);
        Instance { seqs, gamma, a, b }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sp_two_ways_agree(inst in instance(5, 5)) {
        prop_assert_eq!(score_sp(&inst.gamma, &inst.a).unwrap(), score_sp_by_pairs(&inst.gamma, &inst.a).unwrap());
    }

    #[test]
    fn v2_is_sp_under_length_scaled_array(inst in instance(5, 5)) {
        let k = inst.seqs.k();
        prop_assume!(k >= 2);
        let arr = MatrixArray::scaled_by_lengths(&inst.gamma, &induced_lengths(&inst.a)).unwrap();
        prop_assert_eq!(arr.k(), k);
        prop_assert_eq!(score_v2(&inst.gamma, &inst.a).unwrap(), score_sp_array(&arr, &inst.a).unwrap());
    }

    #[test]
    fn scaling_preserves_order(inst in instance(4, 4), num in 1i128..20, den in 1i128..20) {
        let scaled = inst.gamma.scale(Rational::new(num, den).unwrap()).unwrap();
        let k = inst.seqs.k();
        for c in Criterion::ALL {
            if c.is_pairwise() != (k == 2) {
                continue;
            }
            let before = score(c, &inst.gamma, &inst.a).unwrap().cmp(&score(c, &inst.gamma, &inst.b).unwrap());
            let after = score(c, &scaled, &inst.a).unwrap().cmp(&score(c, &scaled, &inst.b).unwrap());
            prop_assert_eq!(before, after, "{}", c);
        }
    }

    #[test]
    fn bitvector_round_trip(inst in instance(5, 5)) {
        let back = alignment_from_bitvectors(&inst.seqs, &inst.a.column_bits()).unwrap();
        prop_assert_eq!(back, inst.a.clone());
        prop_assert!(validate_alignment(inst.a.rows().to_vec(), &inst.seqs).is_ok());
    }

    #[test]
    fn induced_alignments_are_valid(inst in instance(5, 5), pick in any::<u64>()) {
        let k = inst.seqs.k();
        let idx: Vec<usize> = (0..k).filter(|i| pick >> i & 1 == 1).collect();
        prop_assume!(!idx.is_empty());
        let sub = induced_alignment(&inst.a, &idx).unwrap();
        prop_assert!(sub.check_sequences(&inst.seqs.subset(&idx).unwrap()).is_ok());
        for h in 0..k {
            prop_assert_eq!(induced_alignment(&inst.a, &[h]).unwrap().degapped(0), inst.seqs.get(h).clone());
        }
    }

    #[test]
    fn weak_class_contains_normalized_class(seed in any::<u64>()) {
        let g = random_matrix(&mut rng(seed), &ab(), 6);
        let r = classify_matrix(&g);
        prop_assert!(!r.in_mn || r.in_mw);
    }

    #[test]
    fn v1_optimum_below_sp_optimum(seed in any::<u64>()) {
        let mut r = rng(seed);
        let seqs = random_kseq(&mut r, &ab(), 3, 3);
        let g = random_matrix(&mut r, &ab(), 9);
        let sp = msa_exact(&seqs, &g).unwrap();
        let v1 = nmsa1_exact(&seqs, &g).unwrap();
        prop_assert!(v1.value <= sp.value);
    }
}

#[test]
fn index_vectors_are_topological() {
    for n in [vec![2, 1, 3], vec![0, 2], vec![1, 1, 1, 1]] {
        let all: Vec<_> = iterate_index_vectors(&n).collect();
        let count: usize = n.iter().map(|x| x + 1).product();
        assert_eq!(all.len(), count);
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), count);
        for (p, a) in all.iter().enumerate() {
            for b in &all[p + 1..] {
                assert!(!b.le(a) || a == b, "{b:?} after {a:?}");
            }
        }
    }
}

#[test]
fn empty_alignment_scores_zero() {
    let seqs = KSequence::from_strs(&["", ""]).unwrap();
    let a = Alignment::empty(2);
    let g = ScoringMatrix::levenshtein(ab());
    for c in Criterion::ALL {
        assert_eq!(score(c, &g, &a).unwrap(), Rational::ZERO, "{c}");
    }
    assert!(a.check_sequences(&seqs).is_ok());
}
