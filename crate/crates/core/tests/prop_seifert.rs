mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use taut_core::foliation::{decide_horizontal, verify_witness};
use taut_core::{Fiber, H1Order, SeifertInvariants};

fn pairs(max_alpha: i64, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-30i64..30, 1i64..=max_alpha), count)
        .prop_map(|v| v.into_iter().filter(|&(b, a)| common::gcd(b as i128, a as i128) == 1).collect())
}

fn raw(max_alpha: i64) -> impl Strategy<Value = SeifertInvariants> {
    (-6i64..4, pairs(max_alpha, 0..6)).prop_map(|(b, p)| SeifertInvariants::from_pairs(b, &p).unwrap())
}

/// Normalized with at least three fibers, `b` near the interesting window.
fn normalized(max_alpha: i64) -> impl Strategy<Value = SeifertInvariants> {
    let fiber = (2i64..=max_alpha).prop_flat_map(|a| (1..a, Just(a)));
    (proptest::collection::vec(fiber, 3..6), -6i64..1).prop_filter_map("coprime", |(fs, b)| {
        if fs.iter().any(|&(x, y)| common::gcd(x as i128, y as i128) != 1) {
            return None;
        }
        Some(SeifertInvariants::from_pairs(b, &fs).unwrap().normalize())
    })
}

fn h1_small(o: H1Order) -> Option<i128> {
    match o {
        H1Order::Finite(x) => Some(i128::try_from(x).unwrap()),
        H1Order::Infinite => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn normalize_is_idempotent_and_keeps_invariants(si in raw(12)) {
        let n = si.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.euler_number(), si.euler_number());
        prop_assert_eq!(n.h1_order(), si.h1_order());
        let (b, f) = common::small(&si);
        let (ob, of) = common::normalize(b, &f);
        prop_assert_eq!(common::small(&n), (ob, of));
    }

    #[test]
    fn euler_matches_oracle(si in raw(12)) {
        let (b, f) = common::small(&si);
        let (num, den) = common::euler(b, &f);
        let e = si.euler_number();
        prop_assert_eq!((e.numer().clone(), e.denom().clone()), (BigInt::from(num), BigInt::from(den)));
    }

    #[test]
    fn reversal_is_an_involution(si in raw(12)) {
        let n = si.normalize();
        prop_assert_eq!(n.reverse_orientation().reverse_orientation(), n.clone());
        prop_assert_eq!(si.reverse_orientation().reverse_orientation().normalize(), n.clone());
        prop_assert_eq!(n.reverse_orientation().euler_number(), -n.euler_number());
        prop_assert_eq!(si.reverse_orientation().normalize(), n.reverse_orientation());
    }

    #[test]
    fn three_routes_to_h1(si in raw(12)) {
        let n = si.normalize();
        let (b, f) = common::small(&n);
        let det = common::h1_by_det(b, &f);
        prop_assert_eq!(h1_small(n.h1_order()), det);
        prop_assert_eq!(h1_small(n.h1_order_snf()), det);
        prop_assert_eq!(h1_small(si.h1_order_snf()), det);
    }

    #[test]
    fn fiber_order_is_irrelevant(si in raw(12), seed in any::<u64>()) {
        let mut fs: Vec<Fiber> = si.fibers().to_vec();
        let len = fs.len().max(1);
        fs.rotate_left(seed as usize % len);
        if seed & 1 == 1 {
            fs.reverse();
        }
        let p = SeifertInvariants::new(si.b().clone(), fs);
        prop_assert_eq!(p.normalize(), si.normalize());
        prop_assert_eq!(p.euler_number(), si.euler_number());
        prop_assert_eq!(decide_horizontal(&p.normalize()), decide_horizontal(&si.normalize()));
    }

    #[test]
    fn orientation_duality(si in normalized(12)) {
        let d = decide_horizontal(&si);
        let r = decide_horizontal(&si.reverse_orientation());
        prop_assert_eq!(d.is_horizontal(), r.is_horizontal());
        if d.condition() == Some(3) {
            prop_assert_eq!(r.condition(), Some(2));
        }
        if d.condition() == Some(2) {
            prop_assert_eq!(r.condition(), Some(3));
        }
    }

    #[test]
    fn witness_bound_is_exhaustive(si in normalized(12)) {
        let (b, f) = common::small(&si);
        let d = decide_horizontal(&si);
        prop_assert_eq!(d.condition(), common::horizontal(b, &f), "{}", si);
        if let Some(w) = d.witness() {
            prop_assert!(verify_witness(&si, w));
            prop_assert!(w.m <= si.max_alpha());
            let target = if w.reversed { si.reverse_orientation() } else { si.clone() };
            let (_, tf) = common::small(&target);
            let mmax = 2 * tf.iter().map(|x| x.1).max().unwrap().pow(2);
            let first = common::witness_exists(&tf, mmax).unwrap();
            prop_assert_eq!((BigInt::from(first.0), BigInt::from(first.1)), (w.m.clone(), w.a.clone()));
        }
    }

    #[test]
    fn display_parse_round_trip(si in raw(12)) {
        prop_assert_eq!(si.to_string().parse::<SeifertInvariants>().unwrap(), si);
    }
}
