//! Property tests of the public API: algebraic identities of the exact
//! rationals, serde round-trips of the on-disk types, covariance of the
//! hull machinery under relabeling, and the bookkeeping identities of the
//! construction shape.

use std::collections::BTreeMap;

use lexlift::{
    convex_hull, gale_evenness_facets, is_general_position, pipeline_shape, Label,
    PointConfiguration, Rat,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-1000i64..=1000, prop_oneof![1i64..=60, -60i64..=-1])
        .prop_map(|(n, d)| Rat::new(n.into(), d.into()).expect("denominator is nonzero"))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (prop_oneof![1i64..=1000, -1000i64..=-1], prop_oneof![1i64..=60, -60i64..=-1])
        .prop_map(|(n, d)| Rat::new(n.into(), d.into()).expect("denominator is nonzero"))
}

fn config(dim: usize, n: usize) -> impl Strategy<Value = PointConfiguration> {
    proptest::collection::vec(-50i64..=50, dim * n).prop_map(move |coords| {
        let rows: Vec<(Label, &[i64])> = coords
            .chunks(dim)
            .enumerate()
            .map(|(i, chunk)| (i as Label + 1, chunk))
            .collect();
        PointConfiguration::from_int_rows(dim, &rows).expect("labels 1..=n are distinct")
    })
}

fn permutation(n: usize) -> impl Strategy<Value = BTreeMap<Label, Label>> {
    Just((1..=n as Label).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| (1..).zip(images).collect())
}

fn inverse(map: &BTreeMap<Label, Label>) -> BTreeMap<Label, Label> {
    map.iter().map(|(&from, &to)| (to, from)).collect()
}

proptest! {
    #[test]
    fn adding_then_subtracting_is_the_identity(a in rat(), b in rat()) {
        prop_assert_eq!(a.clone() + b.clone() - b, a);
    }

    #[test]
    fn multiplying_then_dividing_is_the_identity(a in rat(), b in nonzero_rat()) {
        prop_assert_eq!(a.clone() * b.clone() / b, a);
    }

    #[test]
    fn rationals_round_trip_through_json(a in rat()) {
        let text = serde_json::to_string(&a).expect("rationals serialize");
        prop_assert!(text.starts_with('"') && text.ends_with('"'));
        let back: Rat = serde_json::from_str(&text).expect("serialized rationals parse");
        prop_assert_eq!(back, a);
    }

    #[test]
    fn configurations_round_trip_through_json(config in config(3, 6)) {
        let text = serde_json::to_string(&config).expect("configurations serialize");
        let back: PointConfiguration =
            serde_json::from_str(&text).expect("serialized configurations parse");
        prop_assert_eq!(back, config);
    }

    #[test]
    fn relabeling_by_a_permutation_then_its_inverse_is_the_identity(
        config in config(2, 7),
        perm in permutation(7),
    ) {
        let back = config
            .relabeled(&perm)
            .and_then(|c| c.relabeled(&inverse(&perm)))
            .expect("permutations of the label set are valid relabelings");
        prop_assert_eq!(back, config);
    }

    #[test]
    fn the_hull_commutes_with_relabeling(config in config(2, 6), perm in permutation(6)) {
        // Covariance is claimed on general-position input only: the
        // incremental hull inserts in label order, and a degenerate
        // configuration can be rejected under some orders but not others.
        prop_assume!(is_general_position(&config).unwrap_or(false));
        let hull = convex_hull(&config).expect("general-position hulls succeed");
        let relabeled_hull = convex_hull(&config.relabeled(&perm).expect("valid relabeling"))
            .expect("general position does not depend on labels");
        let renamed: std::collections::BTreeSet<Vec<Label>> = hull
            .facets
            .iter()
            .map(|facet| {
                let mut names: Vec<Label> = facet.iter().map(|l| perm[l]).collect();
                names.sort_unstable();
                names
            })
            .collect();
        prop_assert_eq!(relabeled_hull.dim, hull.dim);
        prop_assert_eq!(relabeled_hull.facets, renamed);
    }

    #[test]
    fn hull_ridges_lie_in_exactly_two_facets(config in config(3, 7)) {
        let Ok(hull) = convex_hull(&config) else { return Ok(()) };
        let mut ridge_degree: BTreeMap<Vec<Label>, usize> = BTreeMap::new();
        for facet in &hull.facets {
            for drop in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(drop);
                *ridge_degree.entry(ridge).or_default() += 1;
            }
        }
        for (ridge, degree) in ridge_degree {
            prop_assert_eq!(degree, 2, "ridge {:?} lies in {} facets", ridge, degree);
        }
    }

    #[test]
    fn the_shape_accounts_for_every_dimension_and_point(dim in 2usize..=13, extra in 1usize..=9) {
        let points = dim + extra;
        let shape = pipeline_shape(dim, points).expect("points exceed dim");
        prop_assert!(shape.seed_dim == 2 || shape.seed_dim == 3);
        prop_assert_eq!(shape.seed_dim % 2, dim % 2);
        prop_assert_eq!(shape.seed_dim + 2 * shape.iterations, dim);
        prop_assert_eq!(shape.seed_points + 2 * shape.iterations, points);
        prop_assert!(pipeline_shape(dim, dim).is_err());
    }
}

#[test]
fn cyclic_polytopes_are_half_dimension_neighborly() {
    for d in [2usize, 4, 6] {
        for n in (d + 2)..=9 {
            let facets = gale_evenness_facets(n, d).expect("valid parameters");
            assert!(
                facets.is_k_neighborly(d / 2).expect("k is within range"),
                "the cyclic ({n}, {d})-polytope must be {}-neighborly",
                d / 2
            );
        }
    }
}
