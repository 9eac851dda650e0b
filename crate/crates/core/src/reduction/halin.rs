//! Certificates for a tree plus a cycle through its leaves, with `η ≡ 1`.
//!
//! `D` orients tree edges from father to son, cycle edges `v_i → v_{i+1}` and
//! `v_1 → v_n`. `D'` is the tree path from the root to `v_1` together with
//! every cycle arc, and `X = {v_n}`.

use super::{certificate_from_steps, check_digraph_reduction, lower_digraph_reduction, DigraphReduction};
use super::{ReductionCertificate, ReductionError};
use crate::graph::{Digraph, HalinStructure, Orientation};
use crate::index::IndexFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalinCase {
    /// Internal vertex off the root-to-`v_1` path.
    OffPath,
    /// Internal vertex on the path, other than the root.
    OnPath,
    Root,
    FirstLeaf,
    MiddleLeaf,
    LastLeaf,
}

impl HalinCase {
    /// Expected `(d⁻_{D'}, d⁻_D, d⁺_{D'})`.
    pub fn expected(self) -> (usize, usize, usize) {
        match self {
            HalinCase::OffPath => (0, 1, 0),
            HalinCase::OnPath => (1, 1, 1),
            HalinCase::Root => (0, 0, 1),
            HalinCase::FirstLeaf => (1, 1, 2),
            HalinCase::MiddleLeaf => (1, 2, 1),
            HalinCase::LastLeaf => (2, 3, 0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinCaseCheck {
    pub vertex: usize,
    pub case: HalinCase,
    pub in_d_prime: usize,
    pub in_d: usize,
    pub out_d_prime: usize,
}

impl HalinCaseCheck {
    /// `1 + 2 d⁻_{D'} - d⁻_D - d⁺_{D'}`.
    pub fn slack(&self) -> i64 {
        1 + 2 * self.in_d_prime as i64 - self.in_d as i64 - self.out_d_prime as i64
    }
}

#[derive(Debug, Clone)]
pub struct HalinCertificate {
    pub reduction: DigraphReduction,
    pub cases: Vec<HalinCaseCheck>,
    /// `η'` on the single vertex `v_n`.
    pub eta_prime: IndexFunction,
    pub certificate: ReductionCertificate,
}

pub fn certify_halin(h: &HalinStructure) -> Result<HalinCertificate, ReductionError> {
    h.validate()?;
    let g = &h.graph;
    let n = g.n();
    let leaves = &h.leaves;
    let k = leaves.len();
    let (first, last) = (leaves[0], leaves[k - 1]);

    let tree_arcs: Vec<(usize, usize)> = (0..n).filter_map(|v| h.parent[v].map(|p| (p, v))).collect();
    let mut cycle_arcs: Vec<(usize, usize)> = leaves.windows(2).map(|w| (w[0], w[1])).collect();
    cycle_arcs.push((first, last));
    let path = h.root_path(first);
    let path_arcs: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();

    let d: Vec<(usize, usize)> = tree_arcs.iter().chain(&cycle_arcs).copied().collect();
    let d_prime: Vec<(usize, usize)> = path_arcs.iter().chain(&cycle_arcs).copied().collect();
    let reduction = DigraphReduction { x: vec![last], d: d.clone(), d_prime: d_prime.clone() };

    let dd = Digraph::new(n, d.clone());
    let dp = Digraph::new(n, d_prime);
    let mut cases = Vec::with_capacity(n);
    for v in 0..n {
        let case = if v == h.root {
            HalinCase::Root
        } else if v == first {
            HalinCase::FirstLeaf
        } else if v == last {
            HalinCase::LastLeaf
        } else if h.is_leaf(v) {
            HalinCase::MiddleLeaf
        } else if path.contains(&v) {
            HalinCase::OnPath
        } else {
            HalinCase::OffPath
        };
        let check = HalinCaseCheck {
            vertex: v,
            case,
            in_d_prime: dp.in_degree(v),
            in_d: dd.in_degree(v),
            out_d_prime: dp.out_degree(v),
        };
        if (check.in_d_prime, check.in_d, check.out_d_prime) != case.expected() || check.slack() < 0 {
            return Err(ReductionError::Precondition(format!(
                "vertex {v} ({case:?}) has degrees {:?}, expected {:?}",
                (check.in_d_prime, check.in_d, check.out_d_prime),
                case.expected()
            )));
        }
        cases.push(check);
    }

    let eta = IndexFunction::constant(g, 1, 1);
    let outcome = check_digraph_reduction(g, &eta, &reduction)?;
    let steps = lower_digraph_reduction(g, &eta, &reduction)?;
    let orientation = Orientation::from_arcs(g, &d)?;
    let certificate = certificate_from_steps(g, &orientation, &eta, steps)?;
    if certificate.base.eta_base != outcome.eta_prime {
        return Err(ReductionError::Lowering("lowered steps disagree with the digraph formula".into()));
    }
    Ok(HalinCertificate { reduction, cases, eta_prime: outcome.eta_prime, certificate })
}
