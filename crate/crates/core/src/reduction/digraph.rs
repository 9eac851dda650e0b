//! Many deletions at once: an acyclic orientation `D` of `G - E[X]` with a
//! marked sub-digraph `D'` describes deleting every vertex outside `X` in a
//! topological order, incrementing along `D'` arcs and decrementing along the
//! rest.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{push_step, DeletionStep, ReductionError, ReductionState};
use crate::graph::{Digraph, Graph, InducedSubgraph};
use crate::index::IndexFunction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphReduction {
    /// The kept vertex set, increasing.
    pub x: Vec<usize>,
    /// Orientation of every edge not inside `G[X]`, as `(tail, head)`.
    pub d: Vec<(usize, usize)>,
    /// Arcs of `D` along which the head is incremented.
    pub d_prime: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphOutcome {
    pub sub: InducedSubgraph,
    /// `η'` on `G[X]`, in `G[X]`'s indexing.
    pub eta_prime: IndexFunction,
}

fn fail(msg: String) -> ReductionError {
    ReductionError::Precondition(msg)
}

/// Checks every hypothesis of the reduction and returns `η'` on `G[X]`.
pub fn check_digraph_reduction(
    g: &Graph,
    eta: &IndexFunction,
    dr: &DigraphReduction,
) -> Result<DigraphOutcome, ReductionError> {
    eta.check_domain(g)?;
    super::require_unit_edges(eta)?;
    let n = g.n();
    if dr.x.windows(2).any(|w| w[0] >= w[1]) || dr.x.iter().any(|&v| v >= n) {
        return Err(fail("X must be increasing and within range".into()));
    }
    let in_x: Vec<bool> = (0..n).map(|v| dr.x.binary_search(&v).is_ok()).collect();

    let mut covered = vec![false; g.m()];
    for &(t, h) in &dr.d {
        let e = g.edge_index(t, h).ok_or_else(|| fail(format!("arc ({t}, {h}) is not an edge")))?;
        if in_x[t] && in_x[h] {
            return Err(fail(format!("arc ({t}, {h}) lies inside G[X]")));
        }
        if std::mem::replace(&mut covered[e], true) {
            return Err(fail(format!("edge {e} is oriented twice")));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !covered[e] && !(in_x[u] && in_x[v]) {
            return Err(fail(format!("edge {e} = {u}{v} is not oriented by D")));
        }
    }
    let d = Digraph::new(n, dr.d.clone());
    if !d.is_acyclic() {
        return Err(fail("D is not acyclic".into()));
    }
    if let Some(&v) = dr.x.iter().find(|&&v| d.out_degree(v) > 0) {
        return Err(fail(format!("vertex {v} of X is not a sink of D")));
    }
    let dp = Digraph::new(n, dr.d_prime.clone());
    if let Some(&(t, h)) = dr.d_prime.iter().find(|&&(t, h)| !d.contains(t, h)) {
        return Err(fail(format!("arc ({t}, {h}) of D' is not in D")));
    }
    if dr.d_prime.iter().collect::<BTreeSet<_>>().len() != dr.d_prime.len() {
        return Err(fail("D' repeats an arc".into()));
    }
    let slack = |v: usize| i64::from(eta.vertices[v]) + 2 * dp.in_degree(v) as i64 - d.in_degree(v) as i64;
    for v in 0..n {
        let out = dp.out_degree(v) as i64;
        if slack(v) < out {
            return Err(fail(format!(
                "condition (*) fails at vertex {v}: eta + 2 d-_D' - d-_D = {} < d+_D' = {out}",
                slack(v)
            )));
        }
    }
    let sub = g.induced(&dr.x)?;
    let eta_prime =
        IndexFunction::from_parts(sub.vertex_map.iter().map(|&v| slack(v) as u32).collect(), vec![1; sub.graph.m()]);
    Ok(DigraphOutcome { sub, eta_prime })
}

/// Turns a checked reduction into single-vertex steps by repeatedly deleting
/// a source of `D` outside `X`. Among the sources, the lowest one whose
/// decremented neighbours all still have multiplicity at least 1 is taken.
pub fn lower_digraph_reduction(
    g: &Graph,
    eta: &IndexFunction,
    dr: &DigraphReduction,
) -> Result<Vec<DeletionStep>, ReductionError> {
    check_digraph_reduction(g, eta, dr)?;
    let d_prime: BTreeSet<(usize, usize)> = dr.d_prime.iter().copied().collect();
    let in_x: Vec<bool> = (0..g.n()).map(|v| dr.x.binary_search(&v).is_ok()).collect();
    let mut state = ReductionState::new(g, eta.clone())?;
    let mut steps = Vec::new();
    let mut in_deg = vec![0usize; g.n()];
    for &(_, h) in &dr.d {
        in_deg[h] += 1;
    }
    while state.alive_count() > dr.x.len() {
        let pick = (0..g.n()).filter(|&v| state.is_alive(v) && !in_x[v] && in_deg[v] == 0).find_map(|v| {
            let j: Vec<usize> =
                state.neighbours(v).into_iter().map(|(u, _)| u).filter(|&u| !d_prime.contains(&(v, u))).collect();
            j.iter().all(|&u| state.vertex_eta(u) >= 1).then_some((v, j))
        });
        let (v, j) = pick.ok_or_else(|| ReductionError::Lowering("no deletable source outside X".into()))?;
        for (u, _) in state.neighbours(v) {
            in_deg[u] -= 1;
        }
        push_step(&mut state, &mut steps, v, j)?;
    }
    Ok(steps)
}
