//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! Canonical labelling uses colour refinement plus individualisation: every
//! leaf of the search tree is a discrete ordered partition, which is read as a
//! relabelling. The canonical form is the lexicographically smallest sorted
//! edge list over all leaves. The set of leaves does not depend on the input
//! labelling, so isomorphic graphs get identical forms.
//!
//! Connected graphs on `n` vertices are grown from connected graphs on `n - 1`
//! vertices by adding a vertex joined to a nonempty subset: every connected
//! graph has a non-cut vertex, so nothing is missed.

use std::collections::BTreeMap;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("canonical form is simple")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let colours = refine(g, vec![0; g.n()]);
    let mut best: Option<Vec<(usize, usize)>> = None;
    search(g, colours, &mut best);
    CanonicalForm { n: g.n(), edges: best.unwrap_or_default() }
}

fn refine(g: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut count = distinct(&colours);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbours(v).map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| uniq.binary_search(s).unwrap()).collect();
        if uniq.len() == count {
            return next;
        }
        count = uniq.len();
        colours = next;
    }
}

fn distinct(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, colours: Vec<usize>, best: &mut Option<Vec<(usize, usize)>>) {
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colours {
        size[c] += 1;
    }
    let Some(cell) = (0..n).find(|&c| size[c] > 1) else {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (colours[u], colours[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    for w in (0..n).filter(|&v| colours[v] == cell) {
        let split: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(x, &c)| match c.cmp(&cell) {
                std::cmp::Ordering::Less => c,
                std::cmp::Ordering::Greater => c + 1,
                std::cmp::Ordering::Equal if x == w => c,
                std::cmp::Ordering::Equal => c + 1,
            })
            .collect();
        search(g, refine(g, split), best);
    }
}

fn grow<F>(max_n: usize, admissible: F) -> Vec<Graph>
where
    F: Fn(&Graph, usize) -> bool,
{
    if max_n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..max_n {
        let mut next: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
        for g in &level {
            for subset in 1usize..(1 << k) {
                if !admissible(g, subset) {
                    continue;
                }
                let mut edges = g.edges().to_vec();
                edges.extend((0..k).filter(|&v| subset >> v & 1 == 1).map(|v| (v, k)));
                let h = Graph::new(k + 1, edges).expect("extension is simple");
                next.insert(canonical_form(&h), ());
            }
        }
        level = next.into_keys().map(|c| c.to_graph()).collect();
    }
    level
}

/// Every connected graph on `n` vertices, one per isomorphism class, in
/// canonical-form order. Intended for `n ≤ 7` (853 graphs); cost grows fast.
pub fn enumerate_connected_graphs(n: usize) -> std::vec::IntoIter<Graph> {
    grow(n, |_, _| true).into_iter()
}

/// Every connected graph on `n` vertices with maximum degree at most 3.
pub fn enumerate_connected_subcubic(n: usize) -> std::vec::IntoIter<Graph> {
    grow(n, |g, subset| subset.count_ones() <= 3 && (0..g.n()).all(|v| subset >> v & 1 == 0 || g.degree(v) < 3))
        .into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};

    #[test]
    fn relabelled_graphs_share_a_form() {
        let g = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let h = Graph::new(10, g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&path(4)), canonical_form(&Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(1).count(), 1);
        assert_eq!(enumerate_connected_graphs(2).count(), 1);
        let three: Vec<Graph> = enumerate_connected_graphs(3).collect();
        assert_eq!(three.len(), 2);
        assert!(three.iter().any(|g| canonical_form(g) == canonical_form(&path(3))));
        assert!(three.iter().any(|g| canonical_form(g) == canonical_form(&cycle(3))));
        assert_eq!(enumerate_connected_graphs(4).count(), 6);
        assert_eq!(enumerate_connected_graphs(0).count(), 0);
    }

    #[test]
    fn enumerated_graphs_are_connected_and_distinct() {
        let graphs: Vec<Graph> = enumerate_connected_graphs(5).collect();
        assert_eq!(graphs.len(), 21);
        assert!(graphs.iter().all(Graph::is_connected));
        let mut forms: Vec<_> = graphs.iter().map(canonical_form).collect();
        forms.dedup();
        assert_eq!(forms.len(), 21);
        assert!(graphs.iter().any(|g| *g == canonical_form(&complete(5)).to_graph()));
    }
}
