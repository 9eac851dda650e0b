//! Halin graphs: a plane tree plus a cycle through its leaves in planar order.

use rand::seq::SliceRandom;
use rand::Rng;

use super::generators::rng;
use super::{Graph, GraphError};

/// Whether trees with degree-2 vertices are accepted.
///
/// A Halin graph proper forbids them; the leaf-cycle reduction argument does
/// not need that restriction, so [`DegreeTwoPolicy::Allow`] builds the wider
/// class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeTwoPolicy {
    Reject,
    Allow,
}

/// Rooted plane tree on `0..n` with root 0; `children[v]` is in planar order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    pub children: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn star(k: usize) -> Self {
        let mut children = vec![Vec::new(); k + 1];
        children[0] = (1..=k).collect();
        Self { children }
    }

    fn parents(&self) -> Result<Vec<Option<usize>>, GraphError> {
        let n = self.children.len();
        let mut parent = vec![None; n];
        for (p, cs) in self.children.iter().enumerate() {
            for &c in cs {
                if c >= n || c == 0 || parent[c].is_some() {
                    return Err(GraphError::Structure(format!("child {c} of {p} is invalid or repeated")));
                }
                parent[c] = Some(p);
            }
        }
        if let Some(v) = (1..n).find(|&v| parent[v].is_none()) {
            return Err(GraphError::Structure(format!("vertex {v} has no parent")));
        }
        // Reachability from the root rules out cycles among non-root vertices.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            seen[v] = true;
            stack.extend(self.children[v].iter().copied());
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::Structure("children lists do not form a tree".into()));
        }
        Ok(parent)
    }

    /// Leaves in planar (preorder) order.
    fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if self.children[v].is_empty() {
                out.push(v);
            }
            stack.extend(self.children[v].iter().rev().copied());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinStructure {
    pub graph: Graph,
    pub root: usize,
    /// Tree parent of each vertex; `None` only at the root.
    pub parent: Vec<Option<usize>>,
    /// Leaves `v_1, …, v_n` in cyclic planar order.
    pub leaves: Vec<usize>,
}

impl HalinStructure {
    pub fn from_plane_tree(tree: &PlaneTree, policy: DegreeTwoPolicy) -> Result<Self, GraphError> {
        let parent = tree.parents()?;
        let n = tree.children.len();
        if tree.children[0].len() < 2 {
            return Err(GraphError::Structure("the root must have at least two children".into()));
        }
        if policy == DegreeTwoPolicy::Reject {
            for v in 0..n {
                let deg = tree.children[v].len() + usize::from(v != 0);
                if deg == 2 {
                    return Err(GraphError::Structure(format!("tree vertex {v} has degree 2")));
                }
            }
        }
        let leaves = tree.leaves();
        if leaves.len() < 3 {
            return Err(GraphError::Structure("need at least three leaves".into()));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parent[v].expect("non-root"), v)).collect();
        for i in 0..leaves.len() {
            edges.push((leaves[i], leaves[(i + 1) % leaves.len()]));
        }
        let graph = Graph::new(n, edges)?;
        let h = Self { graph, root: 0, parent, leaves };
        h.validate()?;
        Ok(h)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.contains(&v)
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Tree path from the root to `v`, inclusive.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut p = vec![v];
        let mut cur = v;
        while let Some(f) = self.parent[cur] {
            p.push(f);
            cur = f;
            if p.len() > self.parent.len() {
                break;
            }
        }
        p.reverse();
        p
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: &str| Err(GraphError::Structure(msg.to_string()));
        let n = self.graph.n();
        if self.parent.len() != n || self.parent[self.root].is_some() {
            return bad("parent array inconsistent with root");
        }
        let tree_edges = (0..n).filter(|&v| self.parent[v].is_some()).count();
        if tree_edges != n - 1 {
            return bad("tree must have n - 1 edges");
        }
        for v in 0..n {
            if let Some(p) = self.parent[v] {
                if !self.graph.is_adjacent(p, v) {
                    return bad("tree edge missing from the graph");
                }
            }
            if self.root_path(v).len() > n {
                return bad("parent pointers contain a cycle");
            }
        }
        let k = self.leaves.len();
        if k < 3 || self.graph.m() != n - 1 + k {
            return bad("graph must be the tree plus a cycle through at least three leaves");
        }
        let mut tree_deg = vec![0usize; n];
        for v in 0..n {
            if let Some(p) = self.parent[v] {
                tree_deg[v] += 1;
                tree_deg[p] += 1;
            }
        }
        let mut sorted = self.leaves.clone();
        sorted.sort_unstable();
        let tree_leaves: Vec<usize> = (0..n).filter(|&v| tree_deg[v] == 1).collect();
        if sorted != tree_leaves {
            return bad("leaf sequence must list every tree leaf exactly once");
        }
        for i in 0..k {
            let (a, b) = (self.leaves[i], self.leaves[(i + 1) % k]);
            if !self.graph.is_adjacent(a, b) || self.is_tree_edge(a, b) {
                return bad("consecutive leaves must be joined by a cycle edge");
            }
        }
        Ok(())
    }
}

/// Wheel `W_k`: the Halin graph of the star `K_{1,k}` (`k ≥ 3`).
pub fn wheel(k: usize) -> Result<HalinStructure, GraphError> {
    HalinStructure::from_plane_tree(&PlaneTree::star(k), DegreeTwoPolicy::Reject)
}

/// Internal skeleton of a Halin tree plus the number of leaves hung off each
/// internal vertex. Internal vertex 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalTreeSpec {
    pub children: Vec<Vec<usize>>,
    pub leaves: Vec<usize>,
}

/// Expands the skeleton, interleaving each vertex's leaves among its internal
/// children in an order drawn from `seed`. Internal vertices keep their
/// labels; leaves are numbered after them.
pub fn gen_halin(spec: &InternalTreeSpec, seed: u64, policy: DegreeTwoPolicy) -> Result<HalinStructure, GraphError> {
    let k = spec.children.len();
    if k == 0 || spec.leaves.len() != k {
        return Err(GraphError::InvalidArgument("skeleton and leaf counts disagree".into()));
    }
    let mut rng = rng(seed);
    let total = k + spec.leaves.iter().sum::<usize>();
    let mut children = vec![Vec::new(); total];
    let mut next = k;
    for v in 0..k {
        let mut cs = spec.children[v].clone();
        if cs.iter().any(|&c| c >= k) {
            return Err(GraphError::InvalidArgument(format!("skeleton child of {v} out of range")));
        }
        for _ in 0..spec.leaves[v] {
            cs.push(next);
            next += 1;
        }
        cs.shuffle(&mut rng);
        children[v] = cs;
    }
    if (0..k).any(|v| children[v].is_empty()) {
        return Err(GraphError::InvalidArgument("internal vertices need at least one child".into()));
    }
    HalinStructure::from_plane_tree(&PlaneTree { children }, policy)
}

/// Random Halin graph (no degree-2 tree vertices) with `internal` internal
/// vertices.
pub fn random_halin(internal: usize, seed: u64) -> Result<HalinStructure, GraphError> {
    if internal == 0 {
        return Err(GraphError::InvalidArgument("need at least one internal vertex".into()));
    }
    let mut rng = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut children = vec![Vec::new(); internal];
    for v in 1..internal {
        let p = rng.random_range(0..v);
        children[p].push(v);
    }
    let leaves = (0..internal)
        .map(|v| {
            let deg = children[v].len() + usize::from(v != 0);
            3usize.saturating_sub(deg) + rng.random_range(0..=1)
        })
        .collect();
    gen_halin(&InternalTreeSpec { children, leaves }, seed, DegreeTwoPolicy::Reject)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, complete};

    #[test]
    fn w3_is_k4() {
        let h = wheel(3).unwrap();
        assert_eq!(canonical_form(&h.graph), canonical_form(&complete(4)));
    }

    #[test]
    fn wheels_have_expected_size() {
        for k in 3..9 {
            let h = wheel(k).unwrap();
            assert_eq!((h.graph.n(), h.graph.m()), (k + 1, 2 * k));
            assert_eq!(h.graph.degree(0), k);
        }
    }

    #[test]
    fn two_internal_vertices_with_two_leaves_each() {
        let spec = InternalTreeSpec { children: vec![vec![1], vec![]], leaves: vec![2, 2] };
        let h = gen_halin(&spec, 5, DegreeTwoPolicy::Reject).unwrap();
        assert_eq!((h.graph.n(), h.graph.m()), (6, 9));
        assert_eq!(h.leaves.len(), 4);
    }

    #[test]
    fn degree_two_policy() {
        let spec = InternalTreeSpec { children: vec![vec![1], vec![]], leaves: vec![2, 1] };
        assert!(gen_halin(&spec, 0, DegreeTwoPolicy::Reject).is_err());
        let h = gen_halin(&spec, 0, DegreeTwoPolicy::Allow).unwrap();
        assert_eq!(h.leaves.len(), 3);
    }

    #[test]
    fn random_halin_graphs_validate() {
        for seed in 0..30 {
            for internal in 1..5 {
                let h = random_halin(internal, seed).unwrap();
                h.validate().unwrap();
                // 3-connected graphs have minimum degree 3.
                assert!((0..h.graph.n()).all(|v| h.graph.degree(v) >= 3));
            }
        }
    }

    #[test]
    fn malformed_trees_rejected() {
        let t = PlaneTree { children: vec![vec![1, 1], vec![]] };
        assert!(HalinStructure::from_plane_tree(&t, DegreeTwoPolicy::Allow).is_err());
        let t = PlaneTree { children: vec![vec![1, 2], vec![], vec![]] };
        assert!(HalinStructure::from_plane_tree(&t, DegreeTwoPolicy::Allow).is_err());
    }
}
