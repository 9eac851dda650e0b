mod common;

use common::arb_oriented_graph;
use pind_core::{build_b, build_total_matrix, Element};
use proptest::prelude::*;

proptest! {
    #[test]
    fn edge_column_is_sum_of_endpoint_columns((g, o) in arb_oriented_graph(12)) {
        let a = build_total_matrix(&g, &o);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (cu, cv, ce) = (a.column(Element::Vertex(u)), a.column(Element::Vertex(v)), a.column(Element::Edge(e)));
            for r in 0..g.m() {
                prop_assert_eq!(ce[r], cu[r] + cv[r], "edge {} row {}", e, r);
            }
        }
    }

    #[test]
    fn entries_follow_arc_rule((g, o) in arb_oriented_graph(9)) {
        let a = build_total_matrix(&g, &o);
        for (row, &(tail, head)) in o.arcs().iter().enumerate() {
            for x in 0..g.n() {
                let expected = i8::from(x == head) - i8::from(x == tail);
                prop_assert_eq!(a.entry(row, Element::Vertex(x)), expected);
            }
            for (f, &(p, q)) in g.edges().iter().enumerate() {
                let expected = if f == row {
                    0
                } else {
                    i8::from(p == head || q == head) - i8::from(p == tail || q == tail)
                };
                prop_assert_eq!(a.entry(row, Element::Edge(f)), expected);
            }
        }
    }

    #[test]
    fn reversing_an_arc_negates_its_row((g, o) in arb_oriented_graph(8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let e = pick.index(g.m());
        let mut r = o.clone();
        r.reverse(e);
        let (a, b) = (build_total_matrix(&g, &o), build_total_matrix(&g, &r));
        for row in 0..g.m() {
            let sign = if row == e { -1 } else { 1 };
            let expected: Vec<i8> = a.entries().row(row).iter().map(|x| sign * x).collect();
            prop_assert_eq!(b.entries().row(row), expected.as_slice());
        }
    }

    #[test]
    fn b_is_the_edge_block((g, o) in arb_oriented_graph(8)) {
        let a = build_total_matrix(&g, &o);
        let b = build_b(&g, &o);
        prop_assert_eq!((b.rows(), b.cols()), (g.m(), g.m()));
        for r in 0..g.m() {
            for f in 0..g.m() {
                prop_assert_eq!(b.get(r, f), a.entry(r, Element::Edge(f)));
            }
        }
    }
}
