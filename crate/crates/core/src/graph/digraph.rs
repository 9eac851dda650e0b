use std::collections::BTreeSet;

/// A directed graph on vertices `0..n` given by its arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        Self { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn contains(&self, tail: usize, head: usize) -> bool {
        self.arcs.contains(&(tail, head))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|&&(t, _)| t == v).map(|&(_, h)| h).collect()
    }

    pub fn in_neighbours(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|&&(_, h)| h == v).map(|&(t, _)| t).collect()
    }

    /// Every arc of `self` is an arc of `other`.
    pub fn is_subdigraph_of(&self, other: &Digraph) -> bool {
        let theirs: BTreeSet<_> = other.arcs.iter().collect();
        self.arcs.iter().all(|a| theirs.contains(a))
    }

    /// Kahn's algorithm, smallest available vertex first.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        let mut out = vec![Vec::new(); self.n];
        for &(t, h) in &self.arcs {
            indeg[h] += 1;
            out[t].push(h);
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &h in &out[v] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.insert(h);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sum_is_twice_arc_count() {
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (0, 2), (3, 2)]);
        let total: usize = (0..4).map(|v| d.in_degree(v) + d.out_degree(v)).sum();
        assert_eq!(total, 2 * d.arcs().len());
        assert_eq!(d.topological_order(), Some(vec![0, 1, 3, 2]));
    }

    #[test]
    fn subdigraph_relation() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2)]);
        let sub = Digraph::new(3, vec![(1, 2)]);
        assert!(sub.is_subdigraph_of(&d));
        assert!(!Digraph::new(3, vec![(2, 1)]).is_subdigraph_of(&d));
    }

    #[test]
    fn cycle_has_no_order() {
        assert!(!Digraph::new(2, vec![(0, 1), (1, 0)]).is_acyclic());
    }
}
