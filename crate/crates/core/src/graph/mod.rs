//! Simple undirected graphs with a canonical vertex and edge indexing.
//!
//! Vertices are `0..n`. Edges are stored as `(min, max)` pairs sorted
//! lexicographically, and an edge's position in that order is its index.
//! The edge order fixes the row order of every matrix built from a graph.

mod digraph;
mod enumerate;
mod generators;
mod halin;
pub mod io;
mod two_tree;

pub use digraph::Digraph;
pub use enumerate::{canonical_form, enumerate_connected_graphs, enumerate_connected_subcubic, CanonicalForm};
pub use generators::{
    complete, cycle, gen_grid, gen_subcubic_connected, grid_vertex, path, petersen, random_connected_graph, star,
};
pub use halin::{gen_halin, random_halin, wheel, DegreeTwoPolicy, HalinStructure, InternalTreeSpec, PlaneTree};
pub use two_tree::{gen_two_tree, TwoTreeStructure};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}")]
    Orientation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed structure: {0}")]
    Structure(String),
}

/// A vertex or an edge, i.e. an index of a column of the total matrix.
///
/// The derived order is the canonical z-order: all vertices, then all edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `(neighbour, edge index)` sorted by neighbour.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `(neighbour, edge index)` pairs, sorted by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Elements in canonical z-order: vertices `0..n` then edges `0..m`.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.n).map(Element::Vertex).chain((0..self.m()).map(Element::Edge))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_masked(self, &vec![true; self.n])
    }

    /// True if some component is a single edge.
    pub fn has_isolated_edge(&self) -> bool {
        self.components().iter().any(|c| c.len() == 2 && self.degree(c[0]) == 1 && self.degree(c[1]) == 1)
    }

    /// Induced subgraph on `vertices` (any order, no repeats), relabelled
    /// monotonically so canonical edge order is inherited.
    pub fn induced(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::InvalidArgument(format!("vertex {} repeated", w[0])));
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut new_edges = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                edge_map.push(e);
                new_edges.push((new_index[u], new_index[v]));
            }
        }
        let graph = Graph::new(vs.len(), new_edges)?;
        debug_assert_eq!(graph.m(), edge_map.len());
        Ok(InducedSubgraph { graph, vertex_map: vs, edge_map })
    }
}

/// A relabelled induced subgraph together with maps back to the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New vertex index to parent vertex index (increasing).
    pub vertex_map: Vec<usize>,
    /// New edge index to parent edge index (increasing).
    pub edge_map: Vec<usize>,
}

pub(crate) fn components_masked(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !alive[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbours(v) {
                if alive[u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Articulation points of the subgraph induced by `alive`.
pub(crate) fn articulation_points_masked(g: &Graph, alive: &[bool]) -> Vec<bool> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut timer = 0;

    fn dfs(
        g: &Graph,
        alive: &[bool],
        v: usize,
        parent: Option<usize>,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        cut: &mut [bool],
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut children = 0;
        for u in g.neighbours(v) {
            if !alive[u] || Some(u) == parent {
                continue;
            }
            if disc[u] == UNSEEN {
                children += 1;
                dfs(g, alive, u, Some(v), timer, disc, low, cut);
                low[v] = low[v].min(low[u]);
                if parent.is_some() && low[u] >= disc[v] {
                    cut[v] = true;
                }
            } else {
                low[v] = low[v].min(disc[u]);
            }
        }
        if parent.is_none() && children > 1 {
            cut[v] = true;
        }
    }

    for s in 0..n {
        if alive[s] && disc[s] == UNSEEN {
            dfs(g, alive, s, None, &mut timer, &mut disc, &mut low, &mut cut);
        }
    }
    cut
}

/// Orientation of every edge of a graph, stored per edge index as `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// `arcs[e]` must be edge `e` of `g` in one of its two directions.
    pub fn new(g: &Graph, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if arcs.len() != g.m() {
            return Err(GraphError::Orientation(format!(
                "orientation has {} arcs but the graph has {} edges",
                arcs.len(),
                g.m()
            )));
        }
        for (e, &(t, h)) in arcs.iter().enumerate() {
            if (t.min(h), t.max(h)) != g.edge(e) {
                return Err(GraphError::Orientation(format!(
                    "arc ({t},{h}) does not orient edge {e} = {:?}",
                    g.edge(e)
                )));
            }
        }
        Ok(Self { arcs })
    }

    /// Arcs in any order; each edge of `g` must appear exactly once.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut slots: Vec<Option<(usize, usize)>> = vec![None; g.m()];
        for &(t, h) in arcs {
            let e = g
                .edge_index(t, h)
                .ok_or_else(|| GraphError::Orientation(format!("arc ({t},{h}) is not an edge of the graph")))?;
            if slots[e].replace((t, h)).is_some() {
                return Err(GraphError::Orientation(format!("edge {t}-{h} oriented twice")));
            }
        }
        let arcs = slots
            .into_iter()
            .enumerate()
            .map(|(e, a)| a.ok_or_else(|| GraphError::Orientation(format!("edge {:?} has no orientation", g.edge(e)))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { arcs })
    }

    pub fn arc(&self, e: usize) -> (usize, usize) {
        self.arcs[e]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn reverse(&mut self, e: usize) {
        let (t, h) = self.arcs[e];
        self.arcs[e] = (h, t);
    }

    pub fn to_digraph(&self, n: usize) -> Digraph {
        Digraph::new(n, self.arcs.clone())
    }

    pub fn topological_order(&self, n: usize) -> Option<Vec<usize>> {
        self.to_digraph(n).topological_order()
    }

    pub fn is_acyclic(&self, n: usize) -> bool {
        self.topological_order(n).is_some()
    }

    /// Orientation of an induced subgraph inherited from this one.
    pub fn restrict(&self, sub: &InducedSubgraph) -> Orientation {
        let mut new_index = std::collections::HashMap::new();
        for (i, &v) in sub.vertex_map.iter().enumerate() {
            new_index.insert(v, i);
        }
        let arcs = sub
            .edge_map
            .iter()
            .map(|&e| {
                let (t, h) = self.arcs[e];
                (new_index[&t], new_index[&h])
            })
            .collect();
        Orientation { arcs }
    }
}

/// Every edge oriented from its lower to its higher endpoint.
pub fn canonical_orientation(g: &Graph) -> Orientation {
    Orientation { arcs: g.edges().to_vec() }
}
