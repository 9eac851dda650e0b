//! Index functions, non-singularity search and the permanent index.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Element, Graph, Orientation};
use crate::matrix::{build_total_matrix, select_columns, TotalMatrix};
use crate::permanent::{forced_zero, permanent_naive, permanent_ryser, NAIVE_MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("index function is defined on {n} vertices and {m} edges, graph has {graph_n} and {graph_m}")]
    DomainMismatch { n: usize, m: usize, graph_n: usize, graph_m: usize },
    #[error("index function is not valid: total {total}, expected {expected}")]
    NotValid { total: u64, expected: usize },
    #[error("cap must be at least 1")]
    ZeroCap,
}

/// Non-negative multiplicity on every vertex and edge of a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexFunction {
    pub vertices: Vec<u32>,
    pub edges: Vec<u32>,
}

impl IndexFunction {
    pub fn zeros(g: &Graph) -> Self {
        Self::constant(g, 0, 0)
    }

    pub fn constant(g: &Graph, vertex: u32, edge: u32) -> Self {
        Self { vertices: vec![vertex; g.n()], edges: vec![edge; g.m()] }
    }

    pub fn from_parts(vertices: Vec<u32>, edges: Vec<u32>) -> Self {
        Self { vertices, edges }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn get(&self, z: Element) -> u32 {
        match z {
            Element::Vertex(v) => self.vertices[v],
            Element::Edge(e) => self.edges[e],
        }
    }

    pub fn set(&mut self, z: Element, value: u32) {
        match z {
            Element::Vertex(v) => self.vertices[v] = value,
            Element::Edge(e) => self.edges[e] = value,
        }
    }

    /// `(element, multiplicity)` in canonical z-order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, u32)> + '_ {
        let vs = self.vertices.iter().enumerate().map(|(v, &k)| (Element::Vertex(v), k));
        let es = self.edges.iter().enumerate().map(|(e, &k)| (Element::Edge(e), k));
        vs.chain(es)
    }

    pub fn total(&self) -> u64 {
        self.vertices.iter().chain(&self.edges).map(|&k| u64::from(k)).sum()
    }

    pub fn max(&self) -> u32 {
        self.vertices.iter().chain(&self.edges).copied().max().unwrap_or(0)
    }

    /// Pointwise `self ≤ other`; false on differing domains.
    pub fn le(&self, other: &Self) -> bool {
        self.n() == other.n() && self.m() == other.m() && self.iter().zip(other.iter()).all(|((_, a), (_, b))| a <= b)
    }

    pub fn check_domain(&self, g: &Graph) -> Result<(), IndexError> {
        if self.n() != g.n() || self.m() != g.m() {
            return Err(IndexError::DomainMismatch { n: self.n(), m: self.m(), graph_n: g.n(), graph_m: g.m() });
        }
        Ok(())
    }

    /// True iff the multiplicities sum to `|E(G)|`.
    pub fn is_valid(&self, g: &Graph) -> Result<bool, IndexError> {
        self.check_domain(g)?;
        Ok(self.total() == g.m() as u64)
    }
}

/// Valid sub-functions of a bound, generated without repetition.
///
/// The search order places edges before vertices; within that order the
/// stream is lexicographically descending, so the first candidate fills edges
/// as fully as the bound allows. Positions whose remaining capacity cannot
/// absorb the outstanding total are never entered.
pub struct ValidSubfunctions {
    n: usize,
    m: usize,
    cap: Vec<u32>,
    /// `suffix[p]` is the total capacity of positions `p..`.
    suffix: Vec<u64>,
    vals: Vec<u32>,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl ValidSubfunctions {
    fn new(bound: &IndexFunction, target: u64) -> Self {
        let (n, m) = (bound.n(), bound.m());
        let cap: Vec<u32> = bound.edges.iter().chain(&bound.vertices).copied().collect();
        let mut suffix = vec![0u64; cap.len() + 1];
        for p in (0..cap.len()).rev() {
            suffix[p] = suffix[p + 1] + u64::from(cap[p]);
        }
        let state = if suffix[0] < target { IterState::Done } else { IterState::Fresh };
        let mut it = Self { n, m, vals: vec![0; cap.len()], cap, suffix, state };
        it.fill_from(0, target);
        it
    }

    fn fill_from(&mut self, start: usize, mut amount: u64) {
        for p in start..self.cap.len() {
            let take = amount.min(u64::from(self.cap[p]));
            self.vals[p] = take as u32;
            amount -= take;
        }
    }

    fn current(&self) -> IndexFunction {
        IndexFunction { vertices: self.vals[self.m..].to_vec(), edges: self.vals[..self.m].to_vec() }
    }

    fn advance(&mut self) -> bool {
        let mut tail: u64 = 0;
        for p in (0..self.vals.len()).rev() {
            if self.vals[p] > 0 && tail < self.suffix[p + 1] {
                self.vals[p] -= 1;
                self.fill_from(p + 1, tail + 1);
                return true;
            }
            tail += u64::from(self.vals[p]);
        }
        false
    }
}

impl Iterator for ValidSubfunctions {
    type Item = IndexFunction;

    fn next(&mut self) -> Option<IndexFunction> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        debug_assert_eq!(self.vals.len(), self.n + self.m);
        Some(self.current())
    }
}

pub fn enumerate_valid_subfunctions(eta: &IndexFunction, g: &Graph) -> Result<ValidSubfunctions, IndexError> {
    eta.check_domain(g)?;
    Ok(ValidSubfunctions::new(eta, g.m() as u64))
}

/// A valid index function with a nonzero permanent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub eta: IndexFunction,
    #[serde(with = "decimal")]
    pub permanent: BigInt,
}

impl Witness {
    /// Recomputes the permanent and checks validity, nonzero value and the
    /// bound; uses the naive oracle when the dimension allows.
    pub fn verify(&self, g: &Graph, o: &Orientation, bound: &IndexFunction) -> bool {
        if self.eta.is_valid(g) != Ok(true) || !self.eta.le(bound) || self.permanent.is_zero() {
            return false;
        }
        let sel = select_columns(&build_total_matrix(g, o), &self.eta);
        let per = if g.m() <= NAIVE_MAX_DIM { permanent_naive(&sel.matrix) } else { permanent_ryser(&sel.matrix) };
        per.is_ok_and(|p| p == self.permanent)
    }
}

/// Serializes exact integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nonsingularity {
    NonSingular(Witness),
    Singular,
    /// The candidate budget ran out before a decision.
    Unknown {
        examined: u64,
    },
}

impl Nonsingularity {
    pub fn is_nonsingular(&self) -> bool {
        matches!(self, Self::NonSingular(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Self::NonSingular(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidate sub-functions examined.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { budget: 1_000_000 }
    }
}

pub fn is_nonsingular(eta: &IndexFunction, g: &Graph, o: &Orientation) -> Result<Nonsingularity, IndexError> {
    is_nonsingular_with(eta, g, o, &SearchConfig::default())
}

pub fn is_nonsingular_with(
    eta: &IndexFunction,
    g: &Graph,
    o: &Orientation,
    cfg: &SearchConfig,
) -> Result<Nonsingularity, IndexError> {
    let a = build_total_matrix(g, o);
    let mut examined = 0;
    search(&a, enumerate_valid_subfunctions(eta, g)?, cfg.budget, &mut examined)
}

fn search(
    a: &TotalMatrix,
    candidates: impl Iterator<Item = IndexFunction>,
    budget: u64,
    examined: &mut u64,
) -> Result<Nonsingularity, IndexError> {
    for cand in candidates {
        if *examined >= budget {
            return Ok(Nonsingularity::Unknown { examined: *examined });
        }
        *examined += 1;
        let sel = select_columns(a, &cand);
        if forced_zero(&sel.matrix) {
            continue;
        }
        let per = permanent_ryser(&sel.matrix).expect("dimension within the default cap");
        if !per.is_zero() {
            return Ok(Nonsingularity::NonSingular(Witness { eta: cand, permanent: per }));
        }
    }
    Ok(Nonsingularity::Singular)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PindResult {
    Value {
        k: u32,
        witness: Witness,
    },
    /// No nonzero permanent with multiplicities up to `cap`.
    CapExceeded {
        cap: u32,
    },
    /// The search budget ran out while testing level `k`.
    Unknown {
        k: u32,
    },
}

impl PindResult {
    pub fn value(&self) -> Option<u32> {
        match self {
            Self::Value { k, .. } => Some(*k),
            _ => None,
        }
    }
}

pub fn permanent_index(kind: MatrixKind, g: &Graph, o: &Orientation, cap: u32) -> Result<PindResult, IndexError> {
    permanent_index_with(kind, g, o, cap, &SearchConfig::default())
}

/// Least `k ≤ cap` for which some valid multiset with multiplicities at most
/// `k` has a nonzero permanent. Level `k` only examines candidates that use
/// multiplicity `k` somewhere, since the rest were covered at lower levels.
pub fn permanent_index_with(
    kind: MatrixKind,
    g: &Graph,
    o: &Orientation,
    cap: u32,
    cfg: &SearchConfig,
) -> Result<PindResult, IndexError> {
    if cap == 0 {
        return Err(IndexError::ZeroCap);
    }
    let a = build_total_matrix(g, o);
    for k in 1..=cap {
        let bound = match kind {
            MatrixKind::A => IndexFunction::constant(g, k, k),
            MatrixKind::B => IndexFunction::constant(g, 0, k),
        };
        let candidates = ValidSubfunctions::new(&bound, g.m() as u64).filter(|c| k == 1 || c.max() == k);
        let mut examined = 0;
        match search(&a, candidates, cfg.budget, &mut examined)? {
            Nonsingularity::NonSingular(witness) => return Ok(PindResult::Value { k, witness }),
            Nonsingularity::Unknown { .. } => return Ok(PindResult::Unknown { k }),
            Nonsingularity::Singular => {}
        }
    }
    Ok(PindResult::CapExceeded { cap })
}
