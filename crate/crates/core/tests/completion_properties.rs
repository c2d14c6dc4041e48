use proptest::prelude::*;
use siv_core::enumerate::{complete_from_mask, pairs};
use siv_core::io::{parse_sk, write_sk};
use siv_core::{
    quotient_decomposition, switch_at, switching_equivalent, x_set, y_set, SignedComplete,
};

fn arb_target(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedComplete> {
    (min_n..=max_n).prop_flat_map(|n| {
        let m = pairs(n).len();
        (Just(n), 0..1u64 << m).prop_map(|(n, s)| complete_from_mask(n, s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn x_and_y_are_switching_invariant(t in arb_target(4, 9), s in prop::collection::vec(1usize..=9, 0..9)) {
        let s: Vec<usize> = s.into_iter().filter(|&v| v <= t.order()).collect();
        let u = t.switch_at(&s).unwrap();
        prop_assert_eq!(x_set(&u).unwrap(), x_set(&t).unwrap());
        prop_assert_eq!(y_set(&u).unwrap(), y_set(&t).unwrap());
    }

    #[test]
    fn decomposition_reassembles(t in arb_target(4, 9)) {
        let d = quotient_decomposition(&t).unwrap();
        let back = d.reassemble();
        prop_assert_eq!(&back, &switch_at(&t.to_graph(), &d.switching_set).unwrap());
        prop_assert!(switching_equivalent(&back, &t.to_graph()).is_equivalent());
        // every X edge lies inside a part, every other pair across two parts
        let x = x_set(&t).unwrap();
        let part_of = |v: usize| d.parts.iter().position(|p| p.contains(&v)).unwrap();
        for e in t.pairs() {
            let (u, v) = e.ends();
            prop_assert_eq!(x.contains(&e), part_of(u) == part_of(v));
        }
    }

    #[test]
    fn sk_round_trip(t in arb_target(1, 9)) {
        prop_assert_eq!(parse_sk(&write_sk(&t)).unwrap(), t);
    }
}
