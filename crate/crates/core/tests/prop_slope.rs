mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use taut_core::slope::{
    apply_slope_map, compose_slope_maps, fixed_unit_fraction_slopes, whitehead_steps, CoordOrder, FixedSlopes, Slope,
    SlopeMap,
};

fn small(x: &BigInt) -> i128 {
    x.try_into().unwrap()
}

/// Products of elementary matrices, so always unimodular.
fn matrix() -> impl Strategy<Value = [[i128; 2]; 2]> {
    proptest::collection::vec((0u8..3, -4i128..=4), 1..5).prop_map(|steps| {
        let mut m = [[1, 0], [0, 1]];
        for (kind, t) in steps {
            let e = match kind {
                0 => [[1, t], [0, 1]],
                1 => [[1, 0], [t, 1]],
                _ => [[0, 1], [1, 0]],
            };
            m = common::mat_mul(e, m);
        }
        m
    })
}

fn order() -> impl Strategy<Value = CoordOrder> {
    prop_oneof![Just(CoordOrder::MeridianFirst), Just(CoordOrder::LongitudeFirst)]
}

fn map() -> impl Strategy<Value = SlopeMap> {
    (matrix(), order()).prop_map(|(m, o)| {
        let b = |x: i128| BigInt::from(x);
        SlopeMap::new([[b(m[0][0]), b(m[0][1])], [b(m[1][0]), b(m[1][1])]], o).unwrap()
    })
}

fn slope() -> impl Strategy<Value = Slope> {
    (-40i64..40, 0i64..40).prop_filter_map("primitive", |(a, c)| Slope::ml(a, c).ok())
}

fn entries(f: &SlopeMap) -> [[i128; 2]; 2] {
    let m = f.matrix();
    [[small(&m[0][0]), small(&m[0][1])], [small(&m[1][0]), small(&m[1][1])]]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn maps_preserve_intersection(f in map(), s in slope(), t in slope()) {
        let before = s.intersection(&t);
        let after = apply_slope_map(&f, &s).intersection(&apply_slope_map(&f, &t));
        prop_assert_eq!(after.magnitude(), before.magnitude());
    }

    #[test]
    fn action_matches_oracle(f in map(), s in slope()) {
        let m = f.in_order(CoordOrder::MeridianFirst);
        let (a, c) = common::act(entries(&m), small(s.a()), small(s.c()));
        let img = apply_slope_map(&f, &s);
        let (x, y) = (small(img.a()), small(img.c()));
        prop_assert!((x, y) == (a, c) || (x, y) == (-a, -c));
    }

    #[test]
    fn composition_is_associative(f in map(), g in map(), h in map(), s in slope()) {
        let fg = compose_slope_maps(&[f.clone(), g.clone()]).unwrap();
        let gh = compose_slope_maps(&[g.clone(), h.clone()]).unwrap();
        let left = compose_slope_maps(&[fg, h.clone()]).unwrap();
        let right = compose_slope_maps(&[f.clone(), gh]).unwrap();
        prop_assert_eq!(&left, &right);
        let stepwise = apply_slope_map(&h, &apply_slope_map(&g, &apply_slope_map(&f, &s)));
        prop_assert_eq!(apply_slope_map(&left, &s), stepwise);
    }

    #[test]
    fn determinant_is_multiplicative(f in map(), g in map()) {
        let fg = compose_slope_maps(&[f.clone(), g.clone()]).unwrap();
        prop_assert_eq!(fg.det(), f.det() * g.det());
        let id = compose_slope_maps(&[f.clone(), f.inverse()]).unwrap();
        prop_assert_eq!(id.in_order(CoordOrder::MeridianFirst), SlopeMap::identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn fixed_unit_fractions_by_brute_force(f in map()) {
        let brute: Vec<i64> = (-1000i64..=1000)
            .filter(|&k| {
                let img = apply_slope_map(&f, &Slope::ml(1, k).unwrap());
                small(img.a()).abs() == 1
            })
            .collect();
        match fixed_unit_fraction_slopes(&f) {
            FixedSlopes::All => prop_assert_eq!(brute.len(), 2001),
            FixedSlopes::Finite(set) => {
                let inside: Vec<i64> = set.iter().map(|k| i64::try_from(k).unwrap()).filter(|k| k.abs() <= 1000).collect();
                prop_assert_eq!(inside, brute);
            }
        }
    }
}

#[test]
fn whitehead_attaching_step() {
    let [first, _, _] = whitehead_steps();
    for n in -10i64..=10 {
        let img = apply_slope_map(&first, &Slope::ml(1, n).unwrap());
        let (m, b) = (small(img.a()), small(img.c()));
        assert!((m, b) == ((n - 2) as i128, 1) || (m, b) == ((2 - n) as i128, -1), "n = {n}: {img}");
    }
}
