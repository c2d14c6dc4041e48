//! Exhaustive enumeration of small labelled signed graphs.
//!
//! Pairs of `1..=n` are indexed lexicographically; bit `i` of a mask refers
//! to pair `i`.

use crate::completion::SignedComplete;
use crate::graph::{Edge, Parity, SignedGraph};
use crate::switching::spanning_forest_edges;

pub fn pairs(n: usize) -> Vec<Edge> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| Edge::new(u, v)))
        .collect()
}

/// Underlying graph from `edge_mask`; of its edges, those whose pair bit is
/// set in `odd_mask` are odd.
pub fn graph_from_masks(n: usize, edge_mask: u64, odd_mask: u64) -> SignedGraph {
    let mut g = SignedGraph::new(n).expect("n ≥ 1");
    for (i, e) in pairs(n).into_iter().enumerate() {
        if edge_mask >> i & 1 == 1 {
            let (u, v) = e.ends();
            let p = if odd_mask >> i & 1 == 1 { Parity::Odd } else { Parity::Even };
            g.add_edge(u, v, p).expect("fresh edge");
        }
    }
    g
}

pub fn complete_from_mask(n: usize, odd_mask: u64) -> SignedComplete {
    let mut t = SignedComplete::new(n).expect("n ≥ 1");
    for (i, e) in pairs(n).into_iter().enumerate() {
        if odd_mask >> i & 1 == 1 {
            t.toggle(e);
        }
    }
    t
}

/// Every signing of the underlying graph `edge_mask`.
pub fn signings(n: usize, edge_mask: u64) -> impl Iterator<Item = SignedGraph> {
    let positions: Vec<usize> = (0..64).filter(|i| edge_mask >> i & 1 == 1).collect();
    (0u64..1 << positions.len()).map(move |s| {
        let odd = spread(s, &positions);
        graph_from_masks(n, edge_mask, odd)
    })
}

/// One signing of `edge_mask` per switching class: spanning-forest edges
/// are even, the remaining edges take every parity pattern.
pub fn canonical_signings(n: usize, edge_mask: u64) -> impl Iterator<Item = SignedGraph> {
    let base = graph_from_masks(n, edge_mask, 0);
    let index = pairs(n);
    let forest = spanning_forest_edges(&base);
    let positions: Vec<usize> = (0..index.len())
        .filter(|&i| edge_mask >> i & 1 == 1 && !forest.contains(&index[i]))
        .collect();
    (0u64..1 << positions.len()).map(move |s| graph_from_masks(n, edge_mask, spread(s, &positions)))
}

/// Place the low bits of `bits` at `positions`.
fn spread(bits: u64, positions: &[usize]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|(k, _)| bits >> k & 1 == 1)
        .fold(0, |m, (_, &p)| m | 1 << p)
}

/// All labelled signed graphs on `n` vertices (`3^(n(n−1)/2)` of them).
pub fn all_signed_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let m = pairs(n).len();
    (0u64..1 << m).flat_map(move |mask| signings(n, mask))
}
