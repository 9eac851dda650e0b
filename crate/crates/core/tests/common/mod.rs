#![allow(dead_code)]

use pind_core::{Graph, Orientation};
use proptest::prelude::*;

/// All pairs `u < v` on `n` vertices, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph whose edge set is the bitmask over [`pairs`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|&(i, _)| i < 64 && mask >> i & 1 == 1).map(|(_, p)| p);
    Graph::new(n, edges).unwrap()
}

/// Reverses edge `e` when bit `e` of `flips` is set.
pub fn orientation_from_mask(g: &Graph, flips: u64) -> Orientation {
    let arcs =
        g.edges().iter().enumerate().map(|(e, &(u, v))| if e < 64 && flips >> e & 1 == 1 { (v, u) } else { (u, v) });
    Orientation::new(g, arcs.collect()).unwrap()
}

/// Arbitrary simple graph on `1..=max_n` vertices with a random orientation.
pub fn arb_oriented_graph(max_n: usize) -> impl Strategy<Value = (Graph, Orientation)> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, mask, flips)| {
        let g = graph_from_mask(n, mask);
        let o = orientation_from_mask(&g, flips);
        (g, o)
    })
}
