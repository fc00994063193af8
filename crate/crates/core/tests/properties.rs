//! Randomized laws for the group arithmetic, the statistics, and the four
//! FC characterizations. Elements are sampled as products of random
//! generator words, so every group element of moderate length is reachable.

use affinesym::cells::shi_partition;
use affinesym::pattern::{
    find_321_instance, is_321_avoiding, normalize_triple, pair_criterion_holds,
};
use affinesym::roots::{inversion_set, root_criterion_holds};
use affinesym::word::is_fully_commutative;
use affinesym::{AffinePermutation, CoxeterWord, ExtendedAffinePermutation};
use proptest::prelude::*;

fn element_with_rank(n: usize) -> impl Strategy<Value = AffinePermutation> {
    prop::collection::vec(1..=n, 0..=12)
        .prop_map(move |letters| CoxeterWord::new(n, letters).unwrap().evaluate())
}

fn element() -> impl Strategy<Value = AffinePermutation> {
    (3usize..=6).prop_flat_map(element_with_rank)
}

fn element_pair() -> impl Strategy<Value = (AffinePermutation, AffinePermutation)> {
    (3usize..=6).prop_flat_map(|n| (element_with_rank(n), element_with_rank(n)))
}

fn element_triple(
) -> impl Strategy<Value = (AffinePermutation, AffinePermutation, AffinePermutation)> {
    (3usize..=6).prop_flat_map(|n| {
        (
            element_with_rank(n),
            element_with_rank(n),
            element_with_rank(n),
        )
    })
}

proptest! {
    #[test]
    fn window_revalidates(w in element()) {
        let rebuilt = AffinePermutation::from_window(w.window().to_vec()).unwrap();
        prop_assert_eq!(&rebuilt, &w);
    }

    #[test]
    fn display_parse_round_trip(w in element()) {
        let back: AffinePermutation = w.to_string().parse().unwrap();
        prop_assert_eq!(&back, &w);
    }

    #[test]
    fn word_display_parse_round_trip(n in 3usize..=6, letters in prop::collection::vec(1usize..=6, 0..=12)) {
        let letters: Vec<usize> = letters.into_iter().map(|l| (l - 1) % n + 1).collect();
        let word = CoxeterWord::new(n, letters).unwrap();
        let back = CoxeterWord::parse(n, &word.to_string()).unwrap();
        prop_assert_eq!(&back, &word);
    }

    #[test]
    fn compose_is_associative((u, v, w) in element_triple()) {
        prop_assert_eq!(&u.compose(&v).compose(&w), &u.compose(&v.compose(&w)));
    }

    #[test]
    fn identity_and_inverse_laws(w in element()) {
        let e = AffinePermutation::identity(w.rank()).unwrap();
        prop_assert_eq!(&e.compose(&w), &w);
        prop_assert_eq!(&w.compose(&e), &w);
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert!(w.inverse().compose(&w).is_identity());
        prop_assert_eq!(&w.inverse().inverse(), &w);
    }

    #[test]
    fn apply_respects_structure((u, v) in element_pair(), t in -20i64..=20) {
        let n = u.rank() as i64;
        prop_assert_eq!(u.apply(t + n), u.apply(t) + n);
        prop_assert_eq!(u.compose(&v).apply(t), u.apply(v.apply(t)));
        prop_assert_eq!(u.inverse().apply(u.apply(t)), t);
    }

    #[test]
    fn length_laws((u, v) in element_pair()) {
        prop_assert_eq!(u.length(), u.inverse().length());
        prop_assert_eq!(u.length(), u.inversion_count());
        let both = u.compose(&v).length();
        prop_assert!(both <= u.length() + v.length());
        prop_assert_eq!((both + u.length() + v.length()) % 2, 0);
    }

    #[test]
    fn descent_iff_length_drop(w in element()) {
        for i in 1..=w.rank() {
            let right = w.right_multiply(i).length();
            if w.is_right_descent(i) {
                prop_assert_eq!(right + 1, w.length());
            } else {
                prop_assert_eq!(right, w.length() + 1);
            }
            let left = w.left_multiply(i).length();
            if w.inverse().is_right_descent(i) {
                prop_assert_eq!(left + 1, w.length());
            } else {
                prop_assert_eq!(left, w.length() + 1);
            }
        }
    }

    #[test]
    fn canonical_word_evaluates_back(w in element()) {
        let word = w.canonical_reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert!(word.is_reduced());
        prop_assert_eq!(&word.evaluate(), &w);
    }

    #[test]
    fn witness_is_a_genuine_instance(w in element()) {
        if let Some((a, b, c)) = find_321_instance(&w) {
            let n = w.rank() as i64;
            prop_assert!(a < b && b < c);
            prop_assert!(w.apply(a) > w.apply(b) && w.apply(b) > w.apply(c));
            prop_assert!(1 <= b && b <= n);
            prop_assert!(c - b <= n - 1 && b - a <= n - 1);
            prop_assert_eq!(normalize_triple(&w, a, b, c).unwrap(), (a, b, c));
        } else {
            prop_assert!(is_321_avoiding(&w));
        }
    }

    #[test]
    fn inversion_set_matches_length(w in element()) {
        let inv = inversion_set(&w);
        prop_assert_eq!(inv.len(), w.length());
        for root in &inv {
            prop_assert!(root.is_positive());
            prop_assert!(root.is_real());
        }
    }

    #[test]
    fn extended_laws(z in -4i64..=4, body in element()) {
        let ext = ExtendedAffinePermutation::new(z, body.clone());
        let back = ExtendedAffinePermutation::from_window(ext.window()).unwrap();
        prop_assert_eq!(&back, &ext);
        prop_assert!(ext.compose(&ext.inverse()).is_identity());
        prop_assert_eq!(ext.length(), body.length());
        prop_assert_eq!(ext.is_321_avoiding(), is_321_avoiding(&body));
        let n = body.rank() as i64;
        for t in -3..=3 {
            prop_assert_eq!(ext.apply(t + n), ext.apply(t) + n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characterizations_agree(w in element()) {
        let by_word = is_fully_commutative(&w).unwrap();
        prop_assert_eq!(is_321_avoiding(&w), by_word);
        prop_assert_eq!(pair_criterion_holds(&w), by_word);
        prop_assert_eq!(root_criterion_holds(&w), by_word);
        prop_assert_eq!(shi_partition(&w).first() <= 2, by_word);
    }

    #[test]
    fn sigma_is_inverse_invariant(w in element()) {
        let sigma = shi_partition(&w);
        prop_assert_eq!(sigma.total() as usize, w.rank());
        prop_assert_eq!(&shi_partition(&w.inverse()), &sigma);
    }
}
