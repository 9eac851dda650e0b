//! Symbolic expansion of the graph polynomial and brute-force list weighting.
//!
//! For an orientation `D`, `P_G = Π_{(u,v) ∈ D} (φ(v) - φ(u))` where
//! `φ(x) = x_x + Σ_{f ∋ x} x_f`. Variables are numbered in canonical z-order:
//! vertices `0..n`, then edges `n..n+m`. This module builds `P_G` straight
//! from that formula, independently of the matrix code, and reads off
//! coefficients to compare against permanents.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Graph, Orientation};
use crate::index::{IndexError, IndexFunction};
use crate::matrix::{build_total_matrix, select_columns, TotalMatrix};
use crate::permanent::permanent_ryser;

/// Most edges [`expand_pg`] accepts.
pub const EXPANSION_MAX_EDGES: usize = 8;
/// Largest search space [`choosability_check`] accepts.
pub const CHOOSABILITY_MAX_SPACE: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NullstellensatzError {
    #[error("expansion needs at most {cap} edges, graph has {m}")]
    EdgeCap { m: usize, cap: usize },
    #[error("search space of {size} weightings exceeds the cap of {cap}")]
    SearchCap { size: u128, cap: u128 },
    #[error("lists do not match the graph: {0}")]
    ListDomain(String),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// Polynomial with exact integer coefficients; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: HashMap<Vec<u8>, BigInt>,
}

impl SparsePolynomial {
    pub fn one(nvars: usize) -> Self {
        Self { nvars, terms: HashMap::from([(vec![0; nvars], BigInt::one())]) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient_of(&self, exponents: &[u8]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Multiplies by `Σ a_i x_i` given as dense coefficients.
    pub fn mul_linear(&self, form: &[i64]) -> Self {
        assert_eq!(form.len(), self.nvars, "form width");
        let mut out: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(self.terms.len() * 2);
        for (mono, c) in &self.terms {
            for (var, &a) in form.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut next = mono.clone();
                next[var] += 1;
                *out.entry(next).or_default() += c * a;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { nvars: self.nvars, terms: out }
    }

    pub fn total_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|m| m.iter().map(|&e| u32::from(e)).sum())
    }

    pub fn evaluate(&self, point: &[i64]) -> BigInt {
        assert_eq!(point.len(), self.nvars, "point width");
        let mut total = BigInt::zero();
        for (mono, c) in &self.terms {
            let mut term = c.clone();
            for (&e, &x) in mono.iter().zip(point) {
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }
}

/// The factor of `P_G` for each arc, written out from `φ(head) - φ(tail)`.
pub fn linear_forms_from_definition(g: &Graph, o: &Orientation) -> Vec<Vec<i64>> {
    let (n, m) = (g.n(), g.m());
    let phi = |x: usize| -> Vec<i64> {
        let mut form = vec![0i64; n + m];
        form[x] += 1;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a == x || b == x {
                form[n + e] += 1;
            }
        }
        form
    };
    o.arcs().iter().map(|&(tail, head)| phi(head).iter().zip(phi(tail)).map(|(h, t)| h - t).collect()).collect()
}

pub fn expand_pg(g: &Graph, o: &Orientation) -> Result<SparsePolynomial, NullstellensatzError> {
    if g.m() > EXPANSION_MAX_EDGES {
        return Err(NullstellensatzError::EdgeCap { m: g.m(), cap: EXPANSION_MAX_EDGES });
    }
    let forms = linear_forms_from_definition(g, o);
    Ok(forms.iter().fold(SparsePolynomial::one(g.n() + g.m()), |p, f| p.mul_linear(f)))
}

fn exponents(eta: &IndexFunction) -> Vec<u8> {
    eta.iter().map(|(_, k)| u8::try_from(k).unwrap_or(u8::MAX)).collect()
}

/// `c_η`, the coefficient of `Π x_z^{η(z)}`.
pub fn coefficient(p: &SparsePolynomial, eta: &IndexFunction, g: &Graph) -> Result<BigInt, NullstellensatzError> {
    if !eta.is_valid(g)? {
        return Err(IndexError::NotValid { total: eta.total(), expected: g.m() }.into());
    }
    Ok(p.coefficient_of(&exponents(eta)))
}

/// `P_G(φ)` computed as the product of vertex-sum differences.
pub fn evaluate_product(g: &Graph, o: &Orientation, w: &TotalWeighting) -> BigInt {
    let sums = w.vertex_sums(g);
    o.arcs().iter().map(|&(t, h)| BigInt::from(sums[h] - sums[t])).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub coefficient: BigInt,
    pub permanent: BigInt,
}

impl Correspondence {
    /// `c_η ≠ 0` exactly when `per(A_G(η)) ≠ 0`.
    pub fn holds(&self) -> bool {
        self.coefficient.is_zero() == self.permanent.is_zero()
    }

    /// `per / c_η` when the coefficient is nonzero and divides the permanent.
    pub fn exact_ratio(&self) -> Option<BigInt> {
        if self.coefficient.is_zero() || !(&self.permanent % &self.coefficient).is_zero() {
            return None;
        }
        Some(&self.permanent / &self.coefficient)
    }
}

/// `Π_z η(z)!`, the value the ratio is observed against.
pub fn factorial_product(eta: &IndexFunction) -> BigInt {
    eta.iter().map(|(_, k)| (1..=k).map(BigInt::from).product::<BigInt>()).product()
}

/// Expands `P_G` once and compares coefficients with permanents for many `η`.
pub struct CorrespondenceChecker<'g> {
    graph: &'g Graph,
    poly: SparsePolynomial,
    matrix: TotalMatrix,
}

impl<'g> CorrespondenceChecker<'g> {
    pub fn new(graph: &'g Graph, o: &Orientation) -> Result<Self, NullstellensatzError> {
        Ok(Self { graph, poly: expand_pg(graph, o)?, matrix: build_total_matrix(graph, o) })
    }

    pub fn polynomial(&self) -> &SparsePolynomial {
        &self.poly
    }

    pub fn check(&self, eta: &IndexFunction) -> Result<Correspondence, NullstellensatzError> {
        let coefficient = coefficient(&self.poly, eta, self.graph)?;
        let sel = select_columns(&self.matrix, eta);
        let permanent = permanent_ryser(&sel.matrix).expect("m is within the expansion cap");
        let c = Correspondence { coefficient, permanent };
        if !c.coefficient.is_zero() {
            log::debug!(
                "eta {:?}/{:?}: per {} / c {} = {:?} (factorial product {})",
                eta.vertices,
                eta.edges,
                c.permanent,
                c.coefficient,
                c.exact_ratio(),
                factorial_product(eta)
            );
        }
        Ok(c)
    }
}

pub fn check_correspondence(
    g: &Graph,
    o: &Orientation,
    eta: &IndexFunction,
) -> Result<Correspondence, NullstellensatzError> {
    CorrespondenceChecker::new(g, o)?.check(eta)
}

/// Permissible weights for every vertex and edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub vertices: Vec<Vec<i64>>,
    pub edges: Vec<Vec<i64>>,
}

impl ListAssignment {
    /// Every vertex gets `vertex_list` and every edge `edge_list`.
    pub fn constant(g: &Graph, vertex_list: &[i64], edge_list: &[i64]) -> Self {
        Self { vertices: vec![vertex_list.to_vec(); g.n()], edges: vec![edge_list.to_vec(); g.m()] }
    }

    /// `(k, k')` when all vertex lists have size `k` and all edge lists `k'`.
    pub fn sizes(&self) -> Option<(usize, usize)> {
        let uniform = |ls: &[Vec<i64>]| {
            let k = ls.first().map_or(0, Vec::len);
            ls.iter().all(|l| l.len() == k).then_some(k)
        };
        Some((uniform(&self.vertices)?, uniform(&self.edges)?))
    }

    pub fn search_space(&self) -> u128 {
        self.vertices.iter().chain(&self.edges).map(|l| l.len() as u128).product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalWeighting {
    pub vertices: Vec<i64>,
    pub edges: Vec<i64>,
}

impl TotalWeighting {
    /// `φ(v) = f(v) + Σ_{e ∋ v} f(e)`.
    pub fn vertex_sums(&self, g: &Graph) -> Vec<i64> {
        let mut sums = self.vertices.clone();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            sums[u] += self.edges[e];
            sums[v] += self.edges[e];
        }
        sums
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let s = self.vertex_sums(g);
        g.edges().iter().all(|&(u, v)| s[u] != s[v])
    }

    /// The weighting as a point, in the polynomial's variable order.
    pub fn as_point(&self) -> Vec<i64> {
        self.vertices.iter().chain(&self.edges).copied().collect()
    }
}

/// Exhaustive search for a proper weighting from the lists. Edges are
/// assigned first; each vertex is then checked against its lower-numbered
/// neighbours as soon as its weight is fixed.
pub fn choosability_check(g: &Graph, lists: &ListAssignment) -> Result<Option<TotalWeighting>, NullstellensatzError> {
    if lists.vertices.len() != g.n() || lists.edges.len() != g.m() {
        return Err(NullstellensatzError::ListDomain(format!(
            "{} vertex and {} edge lists for {} vertices and {} edges",
            lists.vertices.len(),
            lists.edges.len(),
            g.n(),
            g.m()
        )));
    }
    let size = lists.search_space();
    if size > CHOOSABILITY_MAX_SPACE {
        return Err(NullstellensatzError::SearchCap { size, cap: CHOOSABILITY_MAX_SPACE });
    }
    let mut s = Search {
        g,
        lists,
        edge_w: vec![0; g.m()],
        vertex_w: vec![0; g.n()],
        partial: vec![0; g.n()],
        total: vec![0; g.n()],
    };
    Ok(s.edges(0).then_some(TotalWeighting { vertices: s.vertex_w, edges: s.edge_w }))
}

struct Search<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    edge_w: Vec<i64>,
    vertex_w: Vec<i64>,
    /// Sum of assigned edge weights at each vertex.
    partial: Vec<i64>,
    total: Vec<i64>,
}

impl Search<'_> {
    fn edges(&mut self, e: usize) -> bool {
        if e == self.g.m() {
            return self.vertices(0);
        }
        let (u, v) = self.g.edge(e);
        for &w in &self.lists.edges[e] {
            self.edge_w[e] = w;
            self.partial[u] += w;
            self.partial[v] += w;
            let found = self.edges(e + 1);
            self.partial[u] -= w;
            self.partial[v] -= w;
            if found {
                return true;
            }
        }
        false
    }

    fn vertices(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        for &w in &self.lists.vertices[v] {
            let t = self.partial[v] + w;
            if self.g.neighbours(v).all(|u| u > v || self.total[u] != t) {
                self.vertex_w[v] = w;
                self.total[v] = t;
                if self.vertices(v + 1) {
                    return true;
                }
            }
        }
        false
    }
}
