//! 2-trees in their acyclic-orientation form.
//!
//! `v0` is a sink, `v1` has the single out-neighbour `v0`, and every other
//! vertex has exactly two out-neighbours which are themselves joined by an
//! arc. A vertex whose out-neighbours are `{u, w}` with `(u, w)` an arc is a
//! *son* of that arc.

use rand::Rng;

use super::generators::rng;
use super::{Graph, GraphError, Orientation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTreeStructure {
    pub graph: Graph,
    pub orientation: Orientation,
    pub v0: usize,
    pub v1: usize,
}

impl TwoTreeStructure {
    /// Checks every defining property and returns the structure.
    pub fn new(graph: Graph, orientation: Orientation, v0: usize, v1: usize) -> Result<Self, GraphError> {
        let t = Self { graph, orientation, v0, v1 };
        t.validate()?;
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        self.orientation.arcs().iter().filter(|&&(t, _)| t == v).map(|&(_, h)| h).collect()
    }

    pub fn in_neighbours(&self, v: usize) -> Vec<usize> {
        self.orientation.arcs().iter().filter(|&&(_, h)| h == v).map(|&(t, _)| t).collect()
    }

    pub fn is_arc(&self, tail: usize, head: usize) -> bool {
        self.graph.edge_index(tail, head).is_some_and(|e| self.orientation.arc(e) == (tail, head))
    }

    /// Sons of the arc `(u, w)`, ascending.
    pub fn sons(&self, u: usize, w: usize) -> Vec<usize> {
        if !self.is_arc(u, w) {
            return Vec::new();
        }
        (0..self.n())
            .filter(|&v| {
                let mut out = self.out_neighbours(v);
                out.sort_unstable();
                out == [u.min(w), u.max(w)]
            })
            .collect()
    }

    /// Length of the longest directed path ending at each vertex.
    pub fn rho(&self) -> Vec<usize> {
        let order = self.orientation.topological_order(self.n()).expect("2-tree orientation is acyclic");
        let mut rho = vec![0; self.n()];
        for v in order {
            for h in self.out_neighbours(v) {
                rho[h] = rho[h].max(rho[v] + 1);
            }
        }
        rho
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Structure(msg));
        let n = self.n();
        if n < 2 {
            return bad(format!("a 2-tree needs at least 2 vertices, got {n}"));
        }
        if self.v0 >= n || self.v1 >= n || self.v0 == self.v1 {
            return bad("roots v0, v1 must be distinct vertices".into());
        }
        if self.orientation.len() != self.graph.m() {
            return bad("orientation does not cover the graph".into());
        }
        if !self.orientation.is_acyclic(n) {
            return bad("orientation is not acyclic".into());
        }
        if self.graph.m() != 2 * n - 3 {
            return bad(format!("expected {} edges, found {}", 2 * n - 3, self.graph.m()));
        }
        if !self.out_neighbours(self.v0).is_empty() {
            return bad("v0 must be a sink".into());
        }
        if self.out_neighbours(self.v1) != [self.v0] {
            return bad("v1 must have the single out-neighbour v0".into());
        }
        for v in (0..n).filter(|&v| v != self.v0 && v != self.v1) {
            let out = self.out_neighbours(v);
            if out.len() != 2 || !self.graph.is_adjacent(out[0], out[1]) {
                return bad(format!("vertex {v} does not have two adjacent out-neighbours"));
            }
        }
        let rho = self.rho();
        for v in 0..n {
            if (rho[v] == 0) != self.in_neighbours(v).is_empty() {
                return bad(format!("rho({v}) inconsistent with source status"));
            }
        }
        Ok(())
    }
}

/// Random 2-tree on `n ≥ 2` vertices.
///
/// Starts from the arc `(1, 0)` (so `v1 = 1`, `v0 = 0`) and adds vertex `k`
/// as a son of an arc chosen uniformly among the existing ones. Arcs always
/// point from the newer to the older vertex.
pub fn gen_two_tree(n: usize, seed: u64) -> Result<TwoTreeStructure, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidArgument(format!("a 2-tree needs n >= 2, got {n}")));
    }
    let mut rng = rng(seed);
    let mut arcs = vec![(1usize, 0usize)];
    for k in 2..n {
        let (u, w) = arcs[rng.random_range(0..arcs.len())];
        arcs.push((k, u));
        arcs.push((k, w));
    }
    let graph = Graph::new(n, arcs.iter().copied())?;
    let orientation = Orientation::from_arcs(&graph, &arcs)?;
    TwoTreeStructure::new(graph, orientation, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_two_tree_is_an_edge() {
        let t = gen_two_tree(2, 0).unwrap();
        assert_eq!(t.graph.edges(), &[(0, 1)]);
        assert_eq!(t.orientation.arcs(), &[(1, 0)]);
        assert!(gen_two_tree(1, 0).is_err());
    }

    #[test]
    fn three_vertices_give_a_triangle() {
        let t = gen_two_tree(3, 42).unwrap();
        assert_eq!(t.graph.m(), 3);
        assert_eq!(t.sons(1, 0), vec![2]);
        assert_eq!(t.rho(), vec![2, 1, 0]);
    }

    #[test]
    fn random_two_trees_satisfy_invariants() {
        for seed in 0..40 {
            for n in 2..12 {
                let t = gen_two_tree(n, seed).unwrap();
                t.validate().unwrap();
                assert_eq!(t.graph.m(), 2 * n - 3);
            }
        }
        let t = gen_two_tree(5, 7).unwrap();
        assert!(t.validate().is_ok());
    }

    #[test]
    fn validate_rejects_bad_roots() {
        let t = gen_two_tree(4, 1).unwrap();
        let swapped = TwoTreeStructure { v0: t.v1, v1: t.v0, ..t };
        assert!(swapped.validate().is_err());
    }
}
