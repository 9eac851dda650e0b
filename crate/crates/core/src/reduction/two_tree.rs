//! Certificates for 2-trees with `η ≥ 1` everywhere, except possibly one arc
//! `(u, w)` with `ρ(u) ≤ 1`, `η(u) ≥ 2` and `η(w) ≥ 0`.

use super::{
    finish, push_step, require_unit_edges, DeletionStep, ReductionCertificate, ReductionError, ReductionState,
};
use crate::graph::TwoTreeStructure;
use crate::index::IndexFunction;

/// The 2-tree induced on the remaining vertices.
struct Live<'s> {
    t: &'s TwoTreeStructure,
    alive: &'s [bool],
}

impl Live<'_> {
    fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.t.orientation.arcs().iter().copied().filter(|&(a, b)| self.alive[a] && self.alive[b])
    }

    fn out(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.arcs().filter(|&(a, _)| a == v).map(|(_, b)| b).collect();
        out.sort_unstable();
        out
    }

    fn is_source(&self, v: usize) -> bool {
        self.arcs().all(|(_, b)| b != v)
    }

    /// Remaining sons of the arc `(u, w)`, ascending.
    fn sons(&self, u: usize, w: usize) -> Vec<usize> {
        let key = [u.min(w), u.max(w)];
        (0..self.alive.len()).filter(|&v| self.alive[v] && self.out(v) == key).collect()
    }

    fn rho(&self) -> Vec<usize> {
        let n = self.alive.len();
        let mut rho = vec![0usize; n];
        let order = self.t.orientation.topological_order(n).expect("2-tree orientation is acyclic");
        for v in order.into_iter().filter(|&v| self.alive[v]) {
            for h in self.out(v) {
                rho[h] = rho[h].max(rho[v] + 1);
            }
        }
        rho
    }
}

fn stuck(msg: String) -> ReductionError {
    ReductionError::Lowering(msg)
}

pub fn certify_two_tree(t: &TwoTreeStructure, eta: &IndexFunction) -> Result<ReductionCertificate, ReductionError> {
    t.validate()?;
    let g = &t.graph;
    eta.check_domain(g)?;
    require_unit_edges(eta)?;

    let zeros: Vec<usize> = (0..g.n()).filter(|&v| eta.vertices[v] == 0).collect();
    let all_alive = vec![true; g.n()];
    let mut special = match zeros.as_slice() {
        [] => None,
        [w] => {
            let rho = Live { t, alive: &all_alive }.rho();
            let u = (0..g.n()).find(|&u| t.is_arc(u, *w) && rho[u] <= 1 && eta.vertices[u] >= 2).ok_or_else(|| {
                ReductionError::Precondition(format!(
                    "eta({w}) = 0 but no arc (u, {w}) has rho(u) <= 1 and eta(u) >= 2"
                ))
            })?;
            Some((u, *w))
        }
        _ => return Err(ReductionError::Precondition(format!("eta vanishes at several vertices: {zeros:?}"))),
    };

    let mut state = ReductionState::new(g, eta.clone())?;
    let mut steps: Vec<DeletionStep> = Vec::new();
    while state.alive_count() > 2 {
        let alive = state.alive_mask().to_vec();
        let live = Live { t, alive: &alive };
        match special {
            None => {
                let rho = live.rho();
                let (u, w, v) = live
                    .arcs()
                    .filter(|&(u, _)| rho[u] == 1)
                    .find_map(|(u, w)| live.sons(u, w).first().map(|&v| (u, w, v)))
                    .ok_or_else(|| stuck("no arc (u, w) with rho(u) = 1 has a son".into()))?;
                push_step(&mut state, &mut steps, v, vec![w])?;
                special = Some((u, w));
            }
            Some((u, _)) if live.is_source(u) => {
                push_step(&mut state, &mut steps, u, Vec::new())?;
                special = None;
            }
            Some((u, w)) => {
                if let Some(&v) = live.sons(u, w).first() {
                    push_step(&mut state, &mut steps, v, vec![u])?;
                    special = None;
                    continue;
                }
                let w2 = live
                    .out(u)
                    .into_iter()
                    .find(|&x| x != w)
                    .ok_or_else(|| stuck(format!("vertex {u} has no second out-neighbour")))?;
                match live.sons(u, w2).as_slice() {
                    [] => return Err(stuck(format!("neither ({u}, {w}) nor ({u}, {w2}) has a son"))),
                    [a] => {
                        if state.degree(u) != 3 {
                            return Err(stuck(format!("vertex {u} has degree {} instead of 3", state.degree(u))));
                        }
                        // D' = {a -> w2, u -> w}.
                        push_step(&mut state, &mut steps, *a, vec![u])?;
                        push_step(&mut state, &mut steps, u, vec![w2])?;
                        special = None;
                    }
                    [a, b, ..] => {
                        // D' = {a -> u, b -> w2}.
                        push_step(&mut state, &mut steps, *a, vec![w2])?;
                        push_step(&mut state, &mut steps, *b, vec![u])?;
                    }
                }
            }
        }
    }
    finish(g, &t.orientation, eta, steps, &state)
}
