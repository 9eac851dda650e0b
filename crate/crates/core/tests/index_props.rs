mod common;

use std::collections::BTreeSet;

use common::{arb_oriented_graph, orientation_from_mask};
use pind_core::index::{enumerate_valid_subfunctions, is_nonsingular};
use pind_core::{build_total_matrix, permanent_ryser, select_columns, Graph, IndexFunction, Orientation};
use proptest::prelude::*;

/// Every `η' ≤ η` with total `m`, by odometer.
fn brute_valid(eta: &IndexFunction, g: &Graph) -> BTreeSet<IndexFunction> {
    let bounds: Vec<u32> = eta.vertices.iter().chain(&eta.edges).copied().collect();
    let mut cur = vec![0u32; bounds.len()];
    let mut out = BTreeSet::new();
    loop {
        if cur.iter().map(|&x| u64::from(x)).sum::<u64>() == g.m() as u64 {
            out.insert(IndexFunction::from_parts(cur[..g.n()].to_vec(), cur[g.n()..].to_vec()));
        }
        let Some(i) = (0..cur.len()).find(|&i| cur[i] < bounds[i]) else { return out };
        cur[i] += 1;
        cur[..i].iter_mut().for_each(|x| *x = 0);
    }
}

fn arb_case(max_n: usize, max_eta: u32) -> impl Strategy<Value = (Graph, Orientation, IndexFunction)> {
    arb_oriented_graph(max_n).prop_filter("at most 6 edges", |(g, _)| g.m() <= 6).prop_flat_map(move |(g, o)| {
        let (n, m) = (g.n(), g.m());
        (Just(g), Just(o), prop::collection::vec(0..=max_eta, n), prop::collection::vec(0..=max_eta, m))
            .prop_map(|(g, o, v, e)| (g, o, IndexFunction::from_parts(v, e)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_odometer((g, _, eta) in arb_case(5, 2)) {
        let listed: Vec<IndexFunction> = enumerate_valid_subfunctions(&eta, &g).unwrap().collect();
        let set: BTreeSet<IndexFunction> = listed.iter().cloned().collect();
        prop_assert_eq!(set.len(), listed.len());
        prop_assert_eq!(set, brute_valid(&eta, &g));
    }

    #[test]
    fn nonsingularity_matches_exhaustive_permanents((g, o, eta) in arb_case(5, 2)) {
        let a = build_total_matrix(&g, &o);
        let any_nonzero = brute_valid(&eta, &g)
            .iter()
            .any(|s| permanent_ryser(&select_columns(&a, s).matrix).unwrap() != 0.into());
        let r = is_nonsingular(&eta, &g, &o).unwrap();
        prop_assert_eq!(r.is_nonsingular(), any_nonzero);
        if let Some(w) = r.witness() {
            prop_assert!(w.verify(&g, &o, &eta));
        }
    }

    #[test]
    fn monotone_in_eta((g, o, eta) in arb_case(5, 1), bump in prop::collection::vec(0u32..=1, 12)) {
        let mut bigger = eta.clone();
        for (i, x) in bigger.vertices.iter_mut().chain(bigger.edges.iter_mut()).enumerate() {
            *x += bump[i % bump.len()];
        }
        if is_nonsingular(&eta, &g, &o).unwrap().is_nonsingular() {
            prop_assert!(is_nonsingular(&bigger, &g, &o).unwrap().is_nonsingular());
        }
    }

    #[test]
    fn independent_of_orientation((g, o, eta) in arb_case(5, 2), flips in any::<u64>()) {
        let other = orientation_from_mask(&g, flips);
        prop_assert_eq!(
            is_nonsingular(&eta, &g, &o).unwrap().is_nonsingular(),
            is_nonsingular(&eta, &g, &other).unwrap().is_nonsingular()
        );
    }
}
