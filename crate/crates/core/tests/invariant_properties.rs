use coloredjones::braid::BraidWord;
use coloredjones::homology::pairing_jones;
use coloredjones::invariants::{colored_jones, framing_exponent};
use coloredjones::ring::{Exponent, LaurentPoly, Specialization};
use coloredjones::verma::{evaluate_word, simple_module_trace, word_trace};
use coloredjones::Execution;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn knot(n: usize, seed: u64, max_len: usize) -> BraidWord {
    BraidWord::random_knot(n, max_len, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn shifted(p: &LaurentPoly, e: i64) -> LaurentPoly {
    p.mul_monomial(&1.into(), Exponent::new(e as i32, 0, 0))
}

fn word_on(n: usize) -> impl Strategy<Value = BraidWord> {
    let k = n as i64 - 1;
    prop::collection::vec(prop_oneof![1..=k, -k..=-1], 0..=6).prop_map(move |v| BraidWord::from_signed(n, &v).unwrap())
}

fn small_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=3).prop_flat_map(word_on)
}

fn word_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=3).prop_flat_map(|n| (word_on(n), word_on(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn word_times_inverse_is_identity(w in small_word(), r in 0u32..=3) {
        let a = evaluate_word(&w, r, Execution::default()).unwrap();
        let b = evaluate_word(&w.inverse(), r, Execution::default()).unwrap();
        prop_assert!(a.mul(&b).is_identity());
    }

    #[test]
    fn traces_are_conjugation_invariant((w, g) in word_pair(), r in 0u32..=3) {
        let e = Execution::default();
        prop_assert_eq!(word_trace(&w.conjugate(&g), r, e).unwrap(), word_trace(&w, r, e).unwrap());
    }

    #[test]
    fn both_trace_paths_agree(n in 1usize..=3, seed in any::<u64>(), color in 2u32..=3) {
        let w = knot(n, seed, 6);
        let l = color - 1;
        let rep = colored_jones(&w, color, Execution::default()).unwrap();
        let simple = simple_module_trace(&w, l, Execution::default()).unwrap();
        prop_assert_eq!(shifted(&simple, framing_exponent(&w, l)), rep.jones);
    }

    #[test]
    fn mirror_inverts_q(n in 1usize..=3, seed in any::<u64>(), color in 2u32..=3) {
        let w = knot(n, seed, 6);
        let a = colored_jones(&w, color, Execution::default()).unwrap().jones;
        let b = colored_jones(&w.mirror(), color, Execution::default()).unwrap().jones;
        prop_assert_eq!(b, a.invert_q());
    }

    #[test]
    fn pairing_path_agrees(n in 1usize..=3, seed in any::<u64>(), color in 2u32..=3) {
        let w = knot(n, seed, 6);
        let e = Execution::default();
        prop_assert_eq!(pairing_jones(&w, color, e).unwrap(), colored_jones(&w, color, e).unwrap().jones);
    }

    #[test]
    fn markov_moves_preserve_jones(n in 1usize..=3, seed in any::<u64>(), color in 2u32..=3) {
        let w = knot(n, seed, 5);
        let e = Execution::default();
        let (_, v) = w.markov_move(seed);
        prop_assert_eq!(colored_jones(&v, color, e).unwrap().jones, colored_jones(&w, color, e).unwrap().jones);
    }

    #[test]
    fn weights_beyond_top_vanish(n in 2usize..=3, seed in any::<u64>(), l in 1u32..=2) {
        let w = knot(n, seed, 6);
        let r = n as u32 * l + 1;
        let t = word_trace(&w, r, Execution::default()).unwrap();
        prop_assert!(t.specialize(&Specialization::Augment(l)).is_zero());
    }

    #[test]
    fn report_is_consistent(n in 1usize..=3, seed in any::<u64>(), color in 2u32..=3) {
        let w = knot(n, seed, 6);
        let rep = colored_jones(&w, color, Execution::default()).unwrap();
        prop_assert!(rep.per_r[0].graded_trace.is_one());
        for d in &rep.per_r {
            let classical = d.lefschetz_abelianized.specialize(&Specialization::Classical);
            prop_assert_eq!(classical.as_constant(), Some(d.lefschetz_classical.clone()));
            prop_assert_eq!(d.nonzero_monomials, d.lefschetz_abelianized.num_terms());
        }
    }

    #[test]
    fn execution_modes_agree(n in 1usize..=3, seed in any::<u64>()) {
        let w = knot(n, seed, 6);
        prop_assert_eq!(
            colored_jones(&w, 3, Execution::Sequential).unwrap(),
            colored_jones(&w, 3, Execution::Parallel).unwrap()
        );
    }
}
