use pind_core::graph::enumerate_connected_graphs;
use pind_core::graph::io::write_edge_list;
use pind_core::index::{permanent_index_with, SearchConfig};
use pind_core::{canonical_orientation, MatrixKind, PindResult};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepLevel {
    pub n: usize,
    pub checked: usize,
    /// Graphs outside the claim's scope (an isolated edge, for `B`).
    pub skipped: usize,
    pub max_pind: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub kind: MatrixKind,
    /// Claimed upper bound: 1 for `A`, 2 for `B`.
    pub bound: u32,
    pub levels: Vec<SweepLevel>,
    /// Edge lists of graphs whose index exceeds the bound.
    pub counterexamples: Vec<String>,
    /// Graphs whose search ran out of budget.
    pub unknown: usize,
}

impl SweepSummary {
    pub fn confirmed(&self) -> bool {
        self.counterexamples.is_empty() && self.unknown == 0
    }
}

/// Computes the permanent index of every connected graph on `1..=max_n`
/// vertices, up to isomorphism, with the search capped at the claimed bound.
pub fn sweep(max_n: usize, kind: MatrixKind, cfg: &SearchConfig) -> SweepSummary {
    let bound = match kind {
        MatrixKind::A => 1,
        MatrixKind::B => 2,
    };
    let mut summary = SweepSummary { kind, bound, levels: Vec::new(), counterexamples: Vec::new(), unknown: 0 };
    for n in 1..=max_n {
        let mut level = SweepLevel { n, checked: 0, skipped: 0, max_pind: None };
        for g in enumerate_connected_graphs(n) {
            if kind == MatrixKind::B && g.has_isolated_edge() {
                level.skipped += 1;
                continue;
            }
            level.checked += 1;
            let r = permanent_index_with(kind, &g, &canonical_orientation(&g), bound, cfg)
                .expect("a positive cap and matching orientation");
            match r {
                PindResult::Value { k, .. } => level.max_pind = Some(level.max_pind.map_or(k, |m| m.max(k))),
                PindResult::CapExceeded { .. } => summary.counterexamples.push(write_edge_list(&g)),
                PindResult::Unknown { .. } => summary.unknown += 1,
            }
        }
        summary.levels.push(level);
    }
    summary
}
