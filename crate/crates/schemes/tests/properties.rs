//! Randomized property tests: representation round trips and agreement of
//! every gallery algorithm with its independent oracle.

use proptest::prelude::*;

use schemes::basic::{ana, cata, refold_identity};
use schemes::fix::{mu_to_nu, nu_to_mu, Fuel};
use schemes::functors::{conv_list, conv_list_inv, take_colist, ListF, ListSig};
use schemes::gallery;
use schemes::godel::{decode_expr, encode_expr_checked, Expr, Term, DEFAULT_MAX_BITS};
use schemes::oracles;

fn small_lists() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1000i64..=1000, 0..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn list_conversion_round_trips(xs in small_lists()) {
        prop_assert_eq!(conv_list_inv(&conv_list(&xs)), xs);
    }

    #[test]
    fn data_codata_round_trips(xs in small_lists()) {
        let m = conv_list(&xs);
        let n = mu_to_nu(m.clone());
        let back = nu_to_mu(&n, Fuel(1000)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn refold_identity_is_identity(xs in small_lists()) {
        let m = conv_list(&xs);
        prop_assert_eq!(refold_identity(m.clone()).unwrap(), m);
    }

    #[test]
    fn qsort_agrees_with_sort(xs in small_lists()) {
        prop_assert_eq!(
            gallery::qsort(&xs, Fuel(10_000)).unwrap(),
            oracles::sort_oracle(&xs)
        );
    }

    #[test]
    fn lis_agrees_with_brute_force(xs in prop::collection::vec(-50i64..=50, 0..10)) {
        prop_assert_eq!(gallery::lis(&xs), oracles::lis_brute(&xs));
    }

    #[test]
    fn lcs_agrees_with_dp(a in "[ab]{0,6}", b in "[ab]{0,6}") {
        prop_assert_eq!(
            gallery::lcs(a.as_bytes(), b.as_bytes()),
            oracles::lcs_dp(a.as_bytes(), b.as_bytes())
        );
    }

    #[test]
    fn rld_agrees_with_expansion(
        pairs in prop::collection::vec(
            (0u64..6, prop::sample::select(vec!['a', 'b', 'c'])),
            0..8,
        )
    ) {
        prop_assert_eq!(gallery::rld(&pairs), oracles::rld_expand(&pairs));
    }

    #[test]
    fn merge_agrees_with_two_finger_walk(
        xs in small_lists(), ys in small_lists()
    ) {
        let xs = oracles::sort_oracle(&xs);
        let ys = oracles::sort_oracle(&ys);
        prop_assert_eq!(gallery::merge_sorted(&xs, &ys), oracles::merge_oracle(&xs, &ys));
    }

    #[test]
    fn insert_keeps_sorted(x in -1000i64..=1000, xs in small_lists()) {
        let xs = oracles::sort_oracle(&xs);
        let mut expect = xs.clone();
        expect.push(x);
        expect.sort();
        prop_assert_eq!(gallery::insert_sorted(x, &xs), expect);
    }

    #[test]
    fn wc_agrees_with_split_whitespace(s in "[ab \t\n]{0,30}") {
        prop_assert_eq!(gallery::wc(&s), oracles::wc_oracle(&s));
    }

    #[test]
    fn fib_and_factorial_agree_with_iteration(n in 0u64..20) {
        prop_assert_eq!(gallery::fib(n), oracles::fib_iter(n));
        prop_assert_eq!(gallery::factorial(n), oracles::factorial_iter(n));
    }

    #[test]
    // The encodings are exponent towers: a literal n costs 11^(2^(2|n|+1))
    // at the expression level, so only small literals fit the size ceiling.
    fn literal_expressions_round_trip(n in -5i64..=5) {
        let e = Expr::FromT(Box::new(Term::Lit(n)));
        let code = encode_expr_checked(&e, DEFAULT_MAX_BITS).unwrap();
        prop_assert_eq!(decode_expr(&code).unwrap(), e);
    }

    #[test]
    fn unfold_then_take_matches_range(n in 0u64..60) {
        let down = ana::<ListSig<i64>, u64>(
            |k| if k == 0 { ListF::Nil } else { ListF::Cons(k as i64, k - 1) },
            n,
        );
        let expect: Vec<i64> = (1..=n as i64).rev().collect();
        prop_assert_eq!(take_colist(&down, n as usize + 5), expect);
    }

    #[test]
    fn length_fold_matches_len(xs in small_lists()) {
        let length = |layer: ListF<i64, usize>| match layer {
            ListF::Nil => 0,
            ListF::Cons(_, n) => n + 1,
        };
        prop_assert_eq!(cata(length, conv_list(&xs)), xs.len());
    }
}
