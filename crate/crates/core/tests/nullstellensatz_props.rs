mod common;

use common::arb_oriented_graph;
use pind_core::index::enumerate_valid_subfunctions;
use pind_core::nullstellensatz::{
    choosability_check, evaluate_product, expand_pg, CorrespondenceChecker, ListAssignment, TotalWeighting,
};
use pind_core::{Graph, IndexFunction, Orientation};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = (Graph, Orientation)> {
    arb_oriented_graph(5).prop_filter("at most 5 edges", |(g, _)| g.m() <= 5)
}

fn weighting(g: &Graph, values: &[i64]) -> TotalWeighting {
    TotalWeighting { vertices: values[..g.n()].to_vec(), edges: values[g.n()..g.n() + g.m()].to_vec() }
}

/// Every weighting drawn from the lists, as an odometer.
fn any_proper_by_brute_force(g: &Graph, lists: &ListAssignment) -> bool {
    let all: Vec<&Vec<i64>> = lists.vertices.iter().chain(&lists.edges).collect();
    let mut idx = vec![0usize; all.len()];
    loop {
        let values: Vec<i64> = idx.iter().zip(&all).map(|(&i, l)| l[i]).collect();
        if weighting(g, &values).is_proper(g) {
            return true;
        }
        let Some(p) = (0..idx.len()).find(|&p| idx[p] + 1 < all[p].len()) else { return false };
        idx[p] += 1;
        idx[..p].iter_mut().for_each(|x| *x = 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_evaluates_like_the_product((g, o) in small_graph(), values in prop::collection::vec(-3i64..=3, 15)) {
        let p = expand_pg(&g, &o).unwrap();
        prop_assert!(p.total_degrees().all(|d| d as usize == g.m()));
        let w = weighting(&g, &values);
        let direct = evaluate_product(&g, &o, &w);
        prop_assert_eq!(p.evaluate(&w.as_point()), direct.clone());
        prop_assert_eq!(direct == 0.into(), !w.is_proper(&g));
    }

    #[test]
    fn coefficient_nonzero_iff_permanent_nonzero((g, o) in small_graph()) {
        let checker = CorrespondenceChecker::new(&g, &o).unwrap();
        for eta in enumerate_valid_subfunctions(&IndexFunction::constant(&g, 2, 2), &g).unwrap() {
            prop_assert!(checker.check(&eta).unwrap().holds(), "{:?}", eta);
        }
    }

    #[test]
    fn search_agrees_with_brute_force(
        (g, _) in small_graph(),
        raw in prop::collection::vec(prop::collection::vec(-2i64..=2, 1..=2), 10),
    ) {
        let lists = ListAssignment {
            vertices: (0..g.n()).map(|v| raw[v].clone()).collect(),
            edges: (0..g.m()).map(|e| raw[5 + e].clone()).collect(),
        };
        let found = choosability_check(&g, &lists).unwrap();
        prop_assert_eq!(found.is_some(), any_proper_by_brute_force(&g, &lists));
        if let Some(w) = found {
            prop_assert!(w.is_proper(&g));
            for (v, x) in w.vertices.iter().enumerate() {
                prop_assert!(lists.vertices[v].contains(x));
            }
            for (e, x) in w.edges.iter().enumerate() {
                prop_assert!(lists.edges[e].contains(x));
            }
        }
    }
}
