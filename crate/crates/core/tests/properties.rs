mod common;

use halftwist::word_problem::normal_form;
use halftwist::{
    classify, comb, equal, in_a_n, is_trivial, positive_equal, random_half_twist_power,
    verify_power, BraidWord, Classification, FreeWord,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_relation_move, w};

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |e| w(n, &e))
    })
}

fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |e| w(n, &e))
}

fn positive_on(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(1..n as i32, len).prop_map(move |e| w(n, &e))
}

fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    let syl = (1..=rank as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(syl, 0..=max_len).prop_map(move |s| FreeWord::reduce(rank, s))
}

fn scramble(word: &BraidWord, seed: u64, moves: usize) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = word.clone();
    for _ in 0..moves {
        x = random_relation_move(&mut rng, &x);
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn invert_is_an_involution(x in word_strategy(6, 30)) {
        prop_assert_eq!(x.invert().invert(), x.clone());
        prop_assert_eq!(x.invert().exponent_sum(), -x.exponent_sum());
        prop_assert_eq!(x.conjugate(&BraidWord::identity(x.strands())).unwrap(), x.free_cancel());
    }

    #[test]
    fn free_cancel_leaves_no_pairs(x in word_strategy(5, 40)) {
        let c = x.free_cancel();
        for pair in c.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
        prop_assert!(equal(&c, &x).unwrap());
    }

    #[test]
    fn crossing_sum_is_exponent_sum(x in word_strategy(6, 40)) {
        let m = x.crossing_matrix();
        prop_assert_eq!(m.off_diagonal_sum(), x.exponent_sum());
        for i in 1..=x.strands() {
            prop_assert_eq!(m.get(i, i), 0);
        }
        if x.permutation().is_identity() {
            prop_assert!(m.is_symmetric());
        }
    }

    #[test]
    fn invariants_survive_relation_moves(x in word_strategy(6, 25), seed in any::<u64>()) {
        let y = scramble(&x, seed, 15);
        prop_assert_eq!(y.crossing_matrix(), x.crossing_matrix());
        prop_assert_eq!(y.permutation(), x.permutation());
        prop_assert!(equal(&x, &y).unwrap());
        prop_assert!(is_trivial(&x.concat(&y.invert()).unwrap()));
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word_on(5, 15), v in word_on(5, 15)) {
        let uv = u.concat(&v).unwrap().permutation();
        let (pu, pv) = (u.permutation(), v.permutation());
        for s in 1..=5 {
            prop_assert_eq!(uv.image(s), pv.image(pu.image(s)));
        }
    }

    #[test]
    fn delete_strand_respects_concatenation(u in word_on(5, 15), v in word_on(5, 15), s in 1usize..=5) {
        let whole = u.concat(&v).unwrap().delete_strand(s).unwrap();
        let after = u.permutation().image(s);
        let parts = u.delete_strand(s).unwrap().concat(&v.delete_strand(after).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn normal_form_is_a_valid_rewrite(x in word_strategy(6, 30)) {
        let back = normal_form(&x).to_word();
        prop_assert!(equal(&x, &back).unwrap());
        prop_assert_eq!(normal_form(&back), normal_form(&x));
    }

    #[test]
    fn positive_equal_agrees_with_equal(
        (u, v, y) in (3usize..=4).prop_flat_map(|n| (1usize..=7).prop_flat_map(move |len| {
            (positive_on(n, len), positive_on(n, len), any::<u64>())
        }))
    ) {
        prop_assert_eq!(positive_equal(&u, &v).unwrap(), equal(&u, &v).unwrap());
        // Push one side through relation moves so equal pairs occur too.
        let mut rng = ChaCha8Rng::seed_from_u64(y);
        let mut z = u.clone();
        for _ in 0..10 {
            let cand = random_relation_move(&mut rng, &z);
            if cand.is_positive() && cand.len() == u.len() {
                z = cand;
            }
        }
        prop_assert!(positive_equal(&u, &z).unwrap());
        prop_assert!(equal(&u, &z).unwrap());
    }

    #[test]
    fn equality_is_an_equivalence(x in word_on(4, 12), s1 in any::<u64>(), s2 in any::<u64>()) {
        let y = scramble(&x, s1, 10);
        let z = scramble(&y, s2, 10);
        prop_assert!(equal(&x, &x).unwrap());
        prop_assert_eq!(equal(&x, &y).unwrap(), equal(&y, &x).unwrap());
        prop_assert!(equal(&x, &y).unwrap() && equal(&y, &z).unwrap() && equal(&x, &z).unwrap());
    }

    #[test]
    fn embed_is_a_homomorphism(u in free_word(4, 6), v in free_word(4, 6)) {
        let lhs = u.mul(&v).embed();
        let rhs = u.embed().concat(&v.embed()).unwrap();
        prop_assert!(equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn embed_lands_in_combed_braids(u in free_word(5, 6)) {
        let b = u.embed();
        prop_assert!(b.permutation().is_identity());
        prop_assert!(is_trivial(&b.delete_strand(1).unwrap()));
        prop_assert!(in_a_n(&b));
    }

    #[test]
    fn cyclic_reduce_reassembles(u in free_word(4, 12)) {
        let (core, conj) = u.cyclic_reduce();
        prop_assert_eq!(core.len() + 2 * conj.len(), u.len());
        prop_assert_eq!(conj.mul(&core).mul(&conj.inverse()), u.clone());
        if core.len() >= 2 {
            prop_assert_ne!(core.syllables()[0], -core.syllables()[core.len() - 1]);
        }
    }

    #[test]
    fn generator_power_conjugator_round_trips(q in free_word(4, 8), g in 1usize..=4, k in -4i64..=4) {
        prop_assume!(k != 0);
        let target = FreeWord::generator_power(4, g, k);
        let x = q.inverse().mul(&target).mul(&q);
        let found = x.conjugate_to_generator_power(g, k).expect("constructed as a conjugate");
        prop_assert_eq!(found.inverse().mul(&target).mul(&found), x);
    }

    #[test]
    fn comb_inverts_embed(u in free_word(5, 6)) {
        prop_assert_eq!(comb(&u.embed()).unwrap(), u);
    }

    #[test]
    fn comb_survives_relation_moves(u in free_word(4, 6), seed in any::<u64>()) {
        let b = scramble(&u.embed(), seed, 25);
        prop_assert!(in_a_n(&b));
        let f = comb(&b).unwrap();
        prop_assert_eq!(&f, &u);
        prop_assert!(equal(&f.embed(), &b).unwrap());
    }

    #[test]
    fn comb_is_multiplicative(u in free_word(4, 5), v in free_word(4, 5), s in any::<u64>()) {
        let bu = scramble(&u.embed(), s, 10);
        let bv = scramble(&v.embed(), s.wrapping_add(1), 10);
        let joint = comb(&bu.concat(&bv).unwrap()).unwrap();
        prop_assert_eq!(joint, comb(&bu).unwrap().mul(&comb(&bv).unwrap()));
    }

    #[test]
    fn constructed_instances_are_recognised(
        n in 2usize..=6, k in -6i64..=6, len in 0usize..=10, seed in any::<u64>()
    ) {
        prop_assume!(k != 0);
        let inst = random_half_twist_power(n, k, len, seed);
        prop_assert_eq!(inst.word.exponent_sum(), k);
        prop_assert!(verify_power(&inst.word, k, &inst.root, &inst.conjugator));
        match classify(&inst.word) {
            Classification::Power { k: got, root, conjugator } => {
                prop_assert_eq!(got, k);
                prop_assert!(verify_power(&inst.word, k, &root, &conjugator));
                prop_assert!(equal(&root, &inst.root).unwrap());
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn classification_is_conjugation_coherent(
        n in 3usize..=5, k in 1i64..=4, len in 0usize..=6, seed in any::<u64>(), q in word_on(5, 6)
    ) {
        let inst = random_half_twist_power(n, k, len, seed);
        let q = w(n, &q.to_signed().into_iter().filter(|e| e.unsigned_abs() < n as u32).collect::<Vec<_>>());
        let moved = inst.word.conjugate(&q).unwrap();
        prop_assert_eq!(moved.exponent_sum(), inst.word.exponent_sum());
        let (a, b) = (classify(&inst.word), classify(&moved));
        if let (Classification::Power { k: ka, .. }, Classification::Power { k: kb, .. }) = (&a, &b) {
            prop_assert_eq!(ka, kb);
        } else {
            prop_assert!(false, "{:?} / {:?}", a, b);
        }
    }

    #[test]
    fn every_power_verdict_carries_a_valid_certificate(x in word_strategy(5, 14)) {
        match classify(&x) {
            Classification::Power { k, root, conjugator } => {
                prop_assert_eq!(k, x.exponent_sum());
                prop_assert!(verify_power(&x, k, &root, &conjugator));
            }
            Classification::Identity => prop_assert!(is_trivial(&x)),
            Classification::NotPower { .. } => {}
            Classification::Undecided { .. } => prop_assert!(false, "budget hit on a short word"),
        }
    }
}
