//! Property-based invariants: hull round trips, facet validity, canonical
//! scaling, generator identities and rank-one feasibility on random small
//! graphs.

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use lsplus_workbench::polytope::{self, LinearInequality, Rational};
use lsplus_workbench::{generators, inequalities, lsplus, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn incidence(g: &Graph, s: lsplus_workbench::NodeSet) -> Vec<Rational> {
    (0..g.node_count())
        .map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hull_round_trip(g in arb_graph(6)) {
        let v = polytope::stab_vertices(&g).unwrap();
        let hull = polytope::facets(&v).unwrap();
        let mut back = polytope::vertices(&hull).unwrap().vertices;
        let mut orig = v.vertices.clone();
        back.sort();
        orig.sort();
        prop_assert_eq!(back, orig);
    }

    #[test]
    fn facets_valid_and_tight(g in arb_graph(6)) {
        let v = polytope::stab_vertices(&g).unwrap();
        let hull = polytope::facets(&v).unwrap();
        let n = g.node_count();
        for q in &hull.ineqs {
            // every vertex satisfies q and at least n vertices are tight
            let tight = v
                .vertices
                .iter()
                .filter(|vert| q.evaluate(vert) == *q.rhs())
                .count();
            prop_assert!(v.vertices.iter().all(|vert| q.satisfied_by(vert)));
            prop_assert!(tight >= n, "facet {} tight on {} < {}", q, tight, n);
        }
    }

    #[test]
    fn canonical_scaling_is_idempotent(
        coeffs in proptest::collection::vec(-6i64..=6, 1..6),
        rhs in -6i64..=6,
        num in 1i64..=9,
        den in 1i64..=9,
    ) {
        let base = LinearInequality::from_integers(&coeffs, rhs);
        let scale = BigRational::new(num.into(), den.into());
        let scaled = LinearInequality::new(
            base.coeffs().iter().map(|c| c * &scale).collect(),
            base.rhs() * &scale,
        );
        prop_assert_eq!(base, scaled);
    }

    #[test]
    fn antiweb_stability_number_is_k(n in 4usize..=12, k in 1usize..=6) {
        prop_assume!(2 * k <= n);
        let a = generators::antiweb(n, k).unwrap();
        prop_assert_eq!(a.stability_number().unwrap(), k);
        // webs are the complements of the index-shifted antiwebs
        if 2 * (k + 1) <= n {
            let w = generators::web(n, k).unwrap();
            prop_assert_eq!(
                w.edges(),
                generators::antiweb(n, k + 1).unwrap().complement().edges()
            );
        }
    }

    #[test]
    fn rank_inequalities_hold_on_stable_sets(g in arb_graph(7)) {
        let q = inequalities::rank_inequality(&g, g.nodes()).unwrap();
        for s in g.enumerate_stable_sets().unwrap() {
            prop_assert!(q.satisfied_by(&incidence(&g, s)));
        }
    }

    #[test]
    fn rank_one_lifts_are_feasible(g in arb_graph(6)) {
        let model = lsplus::build_model(&g, &vec![1.0; g.node_count()]).unwrap();
        for s in g.enumerate_stable_sets().unwrap() {
            let x: Vec<f64> = (0..g.node_count())
                .map(|i| if s.contains(i) { 1.0 } else { 0.0 })
                .collect();
            let z = model.z_from_point(&x);
            prop_assert!(model.max_row_violation(&z) <= 1e-12);
        }
    }

    #[test]
    fn recognition_is_scale_invariant(num in 1i64..=20, den in 1i64..=20) {
        let c5 = Graph::cycle(5).unwrap();
        let scale = BigRational::new(num.into(), den.into());
        let q = LinearInequality::new(
            (0..5).map(|_| scale.clone()).collect(),
            &scale * BigRational::from_integer(2.into()),
        );
        let d = inequalities::recognize_joined_antiweb(&c5, &q).unwrap();
        prop_assert!(d.is_some());
        prop_assert_eq!(d.unwrap().parts.len(), 1);
    }
}

#[test]
fn perfect_graph_subgraphs_stay_perfect() {
    // hereditariness spot check on a perfect corpus member
    let g = generators::web(10, 4).unwrap();
    assert!(lsplus::is_lsplus_perfect(&g, 1e-5).unwrap().is_perfect());
    for v in 0..g.node_count() {
        let sub = g.delete_node(v).unwrap();
        assert!(lsplus::is_lsplus_perfect(&sub, 1e-5).unwrap().is_perfect());
    }
}
