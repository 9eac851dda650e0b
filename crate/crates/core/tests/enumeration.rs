mod common;

use std::collections::BTreeSet;

use common::{graph_from_mask, pairs};
use pind_core::graph::{canonical_form, enumerate_connected_graphs, enumerate_connected_subcubic};
use pind_core::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge bitmask over all relabellings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let index: Vec<Vec<usize>> = {
        let mut idx = vec![vec![0; n]; n];
        for (i, (u, v)) in pairs(n).into_iter().enumerate() {
            idx[u][v] = i;
            idx[v][u] = i;
        }
        idx
    };
    perms.iter().map(|p| g.edges().iter().fold(0u64, |acc, &(u, v)| acc | 1 << index[p[u]][p[v]])).min().unwrap()
}

/// Isomorphism classes of connected graphs on `n` vertices, by brute force.
fn brute_classes(n: usize, subcubic: bool) -> BTreeSet<u64> {
    let perms = permutations(n);
    let p = pairs(n).len();
    (0..1u64 << p)
        .map(|mask| graph_from_mask(n, mask))
        .filter(|g| g.is_connected() && (!subcubic || g.max_degree() <= 3))
        .map(|g| brute_canonical(&g, &perms))
        .collect()
}

fn classes_of(graphs: impl Iterator<Item = Graph>, n: usize) -> (usize, BTreeSet<u64>) {
    let perms = permutations(n);
    let mut count = 0;
    let set = graphs
        .inspect(|_| count += 1)
        .map(|g| {
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
            brute_canonical(&g, &perms)
        })
        .collect();
    (count, set)
}

#[test]
fn connected_graphs_match_brute_force() {
    for n in 1..=6 {
        let expected = brute_classes(n, false);
        let (count, got) = classes_of(enumerate_connected_graphs(n), n);
        assert_eq!(count, got.len(), "n={n}: duplicate isomorphism classes");
        assert_eq!(got, expected, "n={n}");
    }
    assert_eq!(enumerate_connected_graphs(6).count(), 112);
}

#[test]
fn connected_subcubic_graphs_match_brute_force() {
    for n in 1..=6 {
        let expected = brute_classes(n, true);
        let (count, got) = classes_of(enumerate_connected_subcubic(n), n);
        assert_eq!(count, got.len(), "n={n}: duplicate isomorphism classes");
        assert_eq!(got, expected, "n={n}");
    }
    assert_eq!(enumerate_connected_subcubic(6).count(), 29);
}

#[test]
fn canonical_form_agrees_with_brute_force_isomorphism() {
    let n = 5;
    let perms = permutations(n);
    let masks: Vec<u64> = (0..1u64 << 10).step_by(7).collect();
    for &a in &masks {
        for &b in masks.iter().step_by(5) {
            let (ga, gb) = (graph_from_mask(n, a), graph_from_mask(n, b));
            let iso = brute_canonical(&ga, &perms) == brute_canonical(&gb, &perms);
            assert_eq!(canonical_form(&ga) == canonical_form(&gb), iso, "{a:#b} vs {b:#b}");
        }
    }
}
