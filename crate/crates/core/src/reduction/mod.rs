//! Vertex-deletion reductions and their certificates.
//!
//! A deletion step removes one vertex `v` and adjusts the multiplicities of
//! its neighbours. If the adjusted index function is non-singular on `G - v`
//! then the original one is non-singular on `G`. A certificate is a sequence
//! of such steps ending in an induced subgraph `G[X]` together with a witness
//! checked by direct permanent computation.
//!
//! Step forms:
//! - `del`: `η(e) = 1` on the incident edges, exactly `d(v) - η(v)` neighbours
//!   in `J` lose 1, the others gain 1.
//! - `del3`: as `del` but `|J| ≥ d(v) - η(v)`.
//! - `del2`: general `η(e)`; each `u ∈ J` loses `k_u` with
//!   `1 ≤ k_u ≤ min(η(e_u), η(u))` and `η(v) + Σ k_u = d(v)`; every other
//!   neighbour gains `η(e_u)`.

mod digraph;
mod grid;
mod halin;
mod subcubic;
mod two_tree;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::io::GraphDocument;
use crate::graph::{Graph, GraphError, InducedSubgraph, Orientation};
use crate::index::{decimal, is_nonsingular, IndexError, IndexFunction, Nonsingularity};
use crate::matrix::{build_total_matrix, select_columns};
use crate::permanent::{permanent_naive, permanent_ryser};

pub use digraph::{check_digraph_reduction, lower_digraph_reduction, DigraphOutcome, DigraphReduction};
pub use grid::{certify_grid, grid_eta, GridVariant};
pub use halin::{certify_halin, HalinCase, HalinCaseCheck, HalinCertificate};
pub use subcubic::certify_subcubic;
pub use two_tree::certify_two_tree;

/// Largest base dimension at which the verifier also runs the naive oracle.
pub const NAIVE_CROSS_CHECK_DIM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Del,
    Del2,
    Del3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionStep {
    pub vertex: usize,
    pub variant: Variant,
    /// Neighbours whose multiplicity decreases.
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    /// Decrement per neighbour in `J`; `del2` only.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub k: BTreeMap<usize, u32>,
}

impl DeletionStep {
    pub fn new(vertex: usize, variant: Variant, j: Vec<usize>) -> Self {
        Self { vertex, variant, j, k: BTreeMap::new() }
    }

    pub fn del2(vertex: usize, k: BTreeMap<usize, u32>) -> Self {
        Self { vertex, variant: Variant::Del2, j: k.keys().copied().collect(), k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("vertex {0} is not present")]
    VertexNotPresent(usize),
    #[error("{u} is not a neighbour of {vertex}")]
    NotNeighbour { vertex: usize, u: usize },
    #[error("neighbour {0} listed twice in J")]
    DuplicateInJ(usize),
    #[error("eta(e{edge}) = {value} but eta(e) = 1 is required on edges at the deleted vertex")]
    EdgeMultiplicity { edge: usize, value: u32 },
    #[error("|J| = {j} but d(v) - eta(v) = {required}")]
    JSizeMismatch { j: usize, required: i64 },
    #[error("|J| = {j} < d(v) - eta(v) = {required}")]
    JTooSmall { j: usize, required: i64 },
    #[error("eta({0}) >= 1 fails for a decremented neighbour")]
    NeighbourExhausted(usize),
    #[error("k must be given for exactly the neighbours in J")]
    KMismatch,
    #[error("1 <= k = {k} <= min(eta(e), eta({u})) = {bound} fails")]
    KRange { u: usize, k: u32, bound: u32 },
    #[error("eta(v) + sum k = {sum} but d(v) = {degree}")]
    Del2Sum { sum: u64, degree: usize },
    #[error("k is only allowed on del2 steps")]
    UnexpectedK,
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("step {index} failed: {source}")]
    Step { index: usize, source: StepError },
    #[error("no base witness: {0}")]
    Base(String),
    #[error("lowering failed: {0}")]
    Lowering(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// A graph with some vertices deleted and the current index function.
#[derive(Debug, Clone)]
pub struct ReductionState<'a> {
    graph: &'a Graph,
    alive: Vec<bool>,
    eta: IndexFunction,
}

impl<'a> ReductionState<'a> {
    pub fn new(graph: &'a Graph, eta: IndexFunction) -> Result<Self, IndexError> {
        eta.check_domain(graph)?;
        Ok(Self { graph, alive: vec![true; graph.n()], eta })
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn eta(&self) -> &IndexFunction {
        &self.eta
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn alive_mask(&self) -> &[bool] {
        &self.alive
    }

    pub fn alive_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn remaining(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.alive[v]).collect()
    }

    /// `(neighbour, edge)` pairs among the remaining vertices.
    pub fn neighbours(&self, v: usize) -> Vec<(usize, usize)> {
        self.graph.incident(v).iter().copied().filter(|&(u, _)| self.alive[u]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.incident(v).iter().filter(|&&(u, _)| self.alive[u]).count()
    }

    pub fn vertex_eta(&self, v: usize) -> u32 {
        self.eta.vertices[v]
    }

    /// Checks the step against the current state and applies it.
    pub fn apply(&mut self, step: &DeletionStep) -> Result<(), StepError> {
        let v = step.vertex;
        if !self.is_alive(v) {
            return Err(StepError::VertexNotPresent(v));
        }
        let nbrs = self.neighbours(v);
        let edge_to = |u: usize| nbrs.iter().find(|&&(w, _)| w == u).map(|&(_, e)| e);
        let mut seen = BTreeSet::new();
        for &u in &step.j {
            if edge_to(u).is_none() {
                return Err(StepError::NotNeighbour { vertex: v, u });
            }
            if !seen.insert(u) {
                return Err(StepError::DuplicateInJ(u));
            }
        }
        let d = nbrs.len();
        let eta_v = self.eta.vertices[v];
        let mut delta: Vec<(usize, i64)> = Vec::with_capacity(d);
        match step.variant {
            Variant::Del | Variant::Del3 => {
                if !step.k.is_empty() {
                    return Err(StepError::UnexpectedK);
                }
                for &(_, e) in &nbrs {
                    if self.eta.edges[e] != 1 {
                        return Err(StepError::EdgeMultiplicity { edge: e, value: self.eta.edges[e] });
                    }
                }
                let required = d as i64 - i64::from(eta_v);
                let j = step.j.len();
                if step.variant == Variant::Del && j as i64 != required {
                    return Err(StepError::JSizeMismatch { j, required });
                }
                if (j as i64) < required {
                    return Err(StepError::JTooSmall { j, required });
                }
                for &(u, _) in &nbrs {
                    if seen.contains(&u) {
                        if self.eta.vertices[u] < 1 {
                            return Err(StepError::NeighbourExhausted(u));
                        }
                        delta.push((u, -1));
                    } else {
                        delta.push((u, 1));
                    }
                }
            }
            Variant::Del2 => {
                if step.k.keys().copied().collect::<BTreeSet<_>>() != seen {
                    return Err(StepError::KMismatch);
                }
                let mut sum = u64::from(eta_v);
                for &(u, e) in &nbrs {
                    match step.k.get(&u) {
                        Some(&k) => {
                            let bound = self.eta.edges[e].min(self.eta.vertices[u]);
                            if k < 1 || k > bound {
                                return Err(StepError::KRange { u, k, bound });
                            }
                            sum += u64::from(k);
                            delta.push((u, -i64::from(k)));
                        }
                        None => delta.push((u, i64::from(self.eta.edges[e]))),
                    }
                }
                if sum != d as u64 {
                    return Err(StepError::Del2Sum { sum, degree: d });
                }
            }
        }
        for (u, dx) in delta {
            let x = i64::from(self.eta.vertices[u]) + dx;
            self.eta.vertices[u] = u32::try_from(x).expect("checked non-negative");
        }
        self.alive[v] = false;
        Ok(())
    }

    /// The remaining induced subgraph and the index function restricted to it.
    pub fn restricted(&self) -> Result<(InducedSubgraph, IndexFunction), GraphError> {
        let sub = self.graph.induced(&self.remaining())?;
        let eta = IndexFunction::from_parts(
            sub.vertex_map.iter().map(|&v| self.eta.vertices[v]).collect(),
            sub.edge_map.iter().map(|&e| self.eta.edges[e]).collect(),
        );
        Ok((sub, eta))
    }
}

/// Applies one step to `(g, η)` and returns the reduced graph and function.
pub fn apply_deletion_step(
    g: &Graph,
    eta: &IndexFunction,
    step: &DeletionStep,
) -> Result<(InducedSubgraph, IndexFunction), ReductionError> {
    let mut state = ReductionState::new(g, eta.clone())?;
    state.apply(step).map_err(|source| ReductionError::Step { index: 0, source })?;
    Ok(state.restricted()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCase {
    /// Remaining vertices of the original graph, increasing.
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    /// The replayed index function on `G[X]`, in `G[X]`'s own indexing.
    pub eta_base: IndexFunction,
    /// A valid function `≤ eta_base` with nonzero permanent on `G[X]`.
    pub witness: IndexFunction,
    #[serde(with = "decimal")]
    pub permanent: BigInt,
}

/// Self-contained proof that `eta` is non-singular for `graph`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub graph: GraphDocument,
    /// One `[tail, head]` per edge; fixes the sign convention.
    pub orientation: Vec<[usize; 2]>,
    pub eta: IndexFunction,
    pub steps: Vec<DeletionStep>,
    pub base: BaseCase,
}

impl ReductionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Replays `steps` and searches the remaining subgraph for a base witness.
pub fn certificate_from_steps(
    g: &Graph,
    o: &Orientation,
    eta: &IndexFunction,
    steps: Vec<DeletionStep>,
) -> Result<ReductionCertificate, ReductionError> {
    let mut state = ReductionState::new(g, eta.clone())?;
    for (index, step) in steps.iter().enumerate() {
        state.apply(step).map_err(|source| ReductionError::Step { index, source })?;
    }
    finish(g, o, eta, steps, &state)
}

fn finish(
    g: &Graph,
    o: &Orientation,
    eta: &IndexFunction,
    steps: Vec<DeletionStep>,
    state: &ReductionState<'_>,
) -> Result<ReductionCertificate, ReductionError> {
    let (sub, eta_base) = state.restricted()?;
    let sub_o = o.restrict(&sub);
    let witness = match is_nonsingular(&eta_base, &sub.graph, &sub_o)? {
        Nonsingularity::NonSingular(w) => w,
        Nonsingularity::Singular => return Err(ReductionError::Base("base index function is singular".into())),
        Nonsingularity::Unknown { examined } => {
            return Err(ReductionError::Base(format!("search budget exhausted after {examined} candidates")))
        }
    };
    Ok(ReductionCertificate {
        graph: GraphDocument::from_graph(g, None),
        orientation: o.arcs().iter().map(|&(t, h)| [t, h]).collect(),
        eta: eta.clone(),
        steps,
        base: BaseCase { x: sub.vertex_map, eta_base, witness: witness.eta, permanent: witness.permanent },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("step {index} failed: {source}")]
    Step { index: usize, source: StepError },
    #[error("base case failed: {0}")]
    Base(String),
}

/// Summary of a successful verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verified {
    pub steps: usize,
    pub base_vertices: usize,
    pub base_permanent: BigInt,
}

/// Replays every step and recomputes the base permanent. Success is a
/// machine-checked proof that the certificate's `eta` is non-singular.
pub fn verify_certificate(cert: &ReductionCertificate) -> Result<Verified, CertificateError> {
    let malformed = |e: &dyn std::fmt::Display| CertificateError::Malformed(e.to_string());
    let (g, _) = cert.graph.to_graph().map_err(|e| malformed(&e))?;
    let arcs: Vec<(usize, usize)> = cert.orientation.iter().map(|a| (a[0], a[1])).collect();
    let o = Orientation::from_arcs(&g, &arcs).map_err(|e| malformed(&e))?;
    let mut state = ReductionState::new(&g, cert.eta.clone()).map_err(|e| malformed(&e))?;
    for (index, step) in cert.steps.iter().enumerate() {
        state.apply(step).map_err(|source| CertificateError::Step { index, source })?;
    }
    let base = &cert.base;
    let base_err = |msg: String| CertificateError::Base(msg);
    if base.x != state.remaining() {
        return Err(base_err(format!("X = {:?} but the replay leaves {:?}", base.x, state.remaining())));
    }
    let (sub, eta_base) = state.restricted().map_err(|e| malformed(&e))?;
    if base.eta_base != eta_base {
        return Err(base_err("eta_base differs from the replayed index function".into()));
    }
    match base.witness.is_valid(&sub.graph) {
        Ok(true) => {}
        Ok(false) => return Err(base_err("witness is not valid".into())),
        Err(e) => return Err(base_err(e.to_string())),
    }
    if !base.witness.le(&eta_base) {
        return Err(base_err("witness exceeds eta_base".into()));
    }
    let sel = select_columns(&build_total_matrix(&sub.graph, &o.restrict(&sub)), &base.witness);
    let per = permanent_ryser(&sel.matrix).map_err(|e| base_err(e.to_string()))?;
    if sel.matrix.rows() <= NAIVE_CROSS_CHECK_DIM {
        let naive = permanent_naive(&sel.matrix).map_err(|e| base_err(e.to_string()))?;
        if naive != per {
            return Err(base_err(format!("permanent engines disagree: {per} vs {naive}")));
        }
    }
    if per.is_zero() {
        return Err(base_err("witness permanent is zero".into()));
    }
    if per != base.permanent {
        return Err(base_err(format!("declared permanent {} but recomputed {per}", base.permanent)));
    }
    Ok(Verified { steps: cert.steps.len(), base_vertices: base.x.len(), base_permanent: per })
}

/// Picks `del` when `|J|` equals `d(v) - η(v)` and `del3` otherwise.
pub(crate) fn variant_for(state: &ReductionState<'_>, v: usize, j: usize) -> Variant {
    if j as i64 == state.degree(v) as i64 - i64::from(state.vertex_eta(v)) {
        Variant::Del
    } else {
        Variant::Del3
    }
}

/// Builds, applies and records a `del`/`del3` step with the given `J`.
pub(crate) fn push_step(
    state: &mut ReductionState<'_>,
    steps: &mut Vec<DeletionStep>,
    v: usize,
    j: Vec<usize>,
) -> Result<(), ReductionError> {
    let step = DeletionStep::new(v, variant_for(state, v, j.len()), j);
    let index = steps.len();
    state.apply(&step).map_err(|source| ReductionError::Step { index, source })?;
    steps.push(step);
    Ok(())
}

pub(crate) fn require_unit_edges(eta: &IndexFunction) -> Result<(), ReductionError> {
    match eta.edges.iter().position(|&x| x != 1) {
        Some(e) => {
            Err(ReductionError::Precondition(format!("eta(e{e}) = {} but eta(e) = 1 is required", eta.edges[e])))
        }
        None => Ok(()),
    }
}
