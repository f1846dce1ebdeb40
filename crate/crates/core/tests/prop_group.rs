mod common;

use proptest::prelude::*;
use taut_core::group::{free_reduce, GroupPresentation, Letter, Word};
use taut_core::lo::{coarse_obstruction, pretzel_exterior_relators, present_two_bridge_cover, Sign};

fn word(gens: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..gens, -3i64..=3), 0..14)
        .prop_map(|v| Word::new(v.into_iter().filter(|&(_, e)| e != 0).map(|(gen, exp)| Letter { gen, exp })))
}

/// Cyclically reduced: no two cyclically adjacent letters share a generator.
fn cyclic_word(gens: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..gens, prop_oneof![-3i64..=-1, 1i64..=3]), 1..14).prop_map(|v| {
        let mut out: Vec<Letter> = Vec::new();
        for (gen, exp) in v {
            if out.last().is_none_or(|l| l.gen != gen) {
                out.push(Letter { gen, exp });
            }
        }
        while out.len() > 1 && out[0].gen == out[out.len() - 1].gen {
            out.pop();
        }
        Word::new(out)
    })
}

fn presentation() -> impl Strategy<Value = GroupPresentation> {
    (2usize..6).prop_flat_map(|n| {
        proptest::collection::vec(cyclic_word(n), 1..6).prop_map(move |rels| {
            let names = (0..n).map(|i| format!("g{i}")).collect();
            GroupPresentation::new(names, rels).unwrap()
        })
    })
}

fn survivors(p: &GroupPresentation) -> Vec<String> {
    coarse_obstruction(p)
        .unwrap()
        .survivors()
        .iter()
        .map(|s| s.iter().map(Sign::symbol).collect())
        .collect()
}

fn map_relators(p: &GroupPresentation, f: impl Fn(&Word) -> Word) -> GroupPresentation {
    p.with_relators(p.relators().iter().map(f).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn free_reduction(w in word(4)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        let pairs: Vec<(usize, i64)> = r.letters().iter().map(|l| (l.gen, l.exp)).collect();
        prop_assert_eq!(pairs, common::naive_reduce(&common::expand(&w)));
        prop_assert!(free_reduce(&w.concat(&w.inverse())).is_empty());
    }

    #[test]
    fn obstruction_matches_oracle(p in presentation(), extra in word(2)) {
        prop_assert_eq!(survivors(&p), common::sign_survivors(&p));
        let mut rels = p.relators().to_vec();
        rels.push(extra);
        let q = p.with_relators(rels).unwrap();
        prop_assert_eq!(survivors(&q), common::sign_survivors(&q));
    }

    #[test]
    fn obstruction_ignores_names(p in presentation()) {
        let names = p.generators().iter().map(|g| format!("{g}_renamed")).collect();
        prop_assert_eq!(survivors(&p.renamed(names).unwrap()), survivors(&p));
    }

    #[test]
    fn obstruction_ignores_rotation_and_inversion(p in presentation(), k in 0usize..10) {
        let base = survivors(&p);
        prop_assert_eq!(survivors(&map_relators(&p, |w| w.rotate(k))), base.clone());
        prop_assert_eq!(survivors(&map_relators(&p, Word::inverse)), base);
    }

    #[test]
    fn obstruction_ignores_exponent_size(p in presentation(), k in 1i64..5) {
        let scaled = map_relators(&p, |w| Word::new(w.letters().iter().map(|l| Letter { gen: l.gen, exp: l.exp * k })));
        prop_assert_eq!(survivors(&scaled), survivors(&p));
    }

    #[test]
    fn pretzel_relators_multiply_to_one(k in -6i64..=6, l in -6i64..=6, m in -6i64..=6) {
        let prod = Word::product(pretzel_exterior_relators(k, l, m).iter());
        prop_assert!(free_reduce(&prod).is_empty());
        prop_assert!(common::naive_reduce(&common::expand(&prod)).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn prime_power_covers_are_rational_homology_spheres(k in 1i64..=5, l in 1i64..=5, n in prop::sample::select(vec![2usize, 3, 4, 5, 7, 8, 9])) {
        let p = present_two_bridge_cover(k, l, n).unwrap();
        prop_assert_eq!(common::rank(&common::abelianization(&p)), n);
    }
}
