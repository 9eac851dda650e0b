//! Deterministic graph families and seeded random generators.
//!
//! All random generators use `ChaCha8Rng::seed_from_u64(seed)`, so output is
//! reproducible across platforms for a fixed seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Index of grid vertex `(i, j)` (1-based) in `P_n □ P_m`: `(i-1)m + (j-1)`.
pub fn grid_vertex(i: usize, j: usize, m: usize) -> usize {
    (i - 1) * m + (j - 1)
}

/// The grid `P_n □ P_m`, vertices flattened row-major.
pub fn gen_grid(n: usize, m: usize) -> Result<Graph, GraphError> {
    if n == 0 || m == 0 {
        return Err(GraphError::InvalidArgument(format!("grid dimensions must be positive, got {n}x{m}")));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=m {
            if j < m {
                edges.push((grid_vertex(i, j, m), grid_vertex(i, j + 1, m)));
            }
            if i < n {
                edges.push((grid_vertex(i, j, m), grid_vertex(i + 1, j, m)));
            }
        }
    }
    Graph::new(n * m, edges)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph is simple")
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star is simple")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen is simple")
}

/// Random connected graph with maximum degree at most 3.
///
/// Builds a random tree with degree cap 3, then adds a random number of extra
/// edges between vertices that still have spare degree.
pub fn gen_subcubic_connected(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidArgument("n must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for k in 1..n {
        let v = order[k];
        let open: Vec<usize> = order[..k].iter().copied().filter(|&u| deg[u] < 3).collect();
        // A tree on k vertices with max degree 3 always has a vertex of degree < 3.
        let u = open[rng.random_range(0..open.len())];
        edges.push((u.min(v), u.max(v)));
        deg[u] += 1;
        deg[v] += 1;
    }
    let extra = rng.random_range(0..=n);
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && deg[u] < 3 && deg[v] < 3 && !edges.contains(&e) {
            edges.push(e);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::new(n, edges)
}

/// Random connected graph on `n` vertices with at most `max_edges` edges
/// (at least `n - 1`): random spanning tree plus random extra edges.
pub fn random_connected_graph(n: usize, max_edges: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidArgument("n must be at least 1".into()));
    }
    if max_edges + 1 < n {
        return Err(GraphError::InvalidArgument(format!(
            "a connected graph on {n} vertices needs at least {} edges",
            n - 1
        )));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((u, v));
    }
    let target = rng.random_range(n - 1..=max_edges.min(n * (n - 1) / 2));
    let mut attempts = 0;
    while edges.len() < target && attempts < 1000 {
        attempts += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_examples() {
        let g = gen_grid(1, 1).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let g = gen_grid(2, 2).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.neighbours(0).eq([1, 2]));
        let g = gen_grid(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        assert!(gen_grid(0, 3).is_err());
        assert!(gen_grid(3, 0).is_err());
    }

    #[test]
    fn grid_degree_sum() {
        for n in 1..6 {
            for m in 1..6 {
                let g = gen_grid(n, m).unwrap();
                let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
                assert_eq!(sum, 2 * (n * (m - 1) + m * (n - 1)));
            }
        }
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.m(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn subcubic_generator_contract() {
        for seed in 0..50 {
            for n in 1..12 {
                let g = gen_subcubic_connected(n, seed).unwrap();
                assert_eq!(g.n(), n);
                assert!(g.max_degree() <= 3);
                assert!(g.is_connected());
                assert_eq!(g, gen_subcubic_connected(n, seed).unwrap());
            }
        }
        assert_eq!(gen_subcubic_connected(1, 3).unwrap().m(), 0);
    }

    #[test]
    fn random_connected_respects_edge_cap() {
        for seed in 0..30 {
            let g = random_connected_graph(8, 10, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.m() <= 10);
        }
    }
}
