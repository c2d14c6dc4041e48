//! Switching calculus.
//!
//! Switching at a vertex set `S` flips the parity of every edge with exactly
//! one end in `S`. Two signed graphs on the same underlying graph are
//! switching equivalent iff every cycle has the same parity in both; we
//! decide this by normalising each graph along a shared depth-first spanning
//! forest and comparing the remaining (non-forest) edges.

use crate::graph::{Edge, GraphError, Parity, SignedGraph};

/// Flip the parity of every edge with exactly one end in `set`.
pub fn switch_at(g: &SignedGraph, set: &[usize]) -> Result<SignedGraph, GraphError> {
    let mut inside = vec![false; g.order() + 1];
    for &v in set {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    let mut out = SignedGraph::new(g.order())?;
    for (e, p) in g.edges() {
        let (u, v) = e.ends();
        let p = if inside[u] != inside[v] { p.flip() } else { p };
        out.add_edge(u, v, p)?;
    }
    Ok(out)
}

/// Depth-first spanning forest: `parent[v]` is `None` for roots. Index 0 unused.
struct Forest {
    parent: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl Forest {
    fn of(g: &SignedGraph) -> Forest {
        let n = g.order();
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        let mut order = Vec::with_capacity(n);
        for root in 1..=n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                order.push(u);
                for w in g.neighbors(u).collect::<Vec<_>>().into_iter().rev() {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(u);
                        stack.push(w);
                    }
                }
            }
        }
        Forest { parent, order }
    }

    fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Switching indicator making every forest edge of `g` even.
    fn normaliser(&self, g: &SignedGraph) -> Vec<bool> {
        let mut flip = vec![false; g.order() + 1];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                let odd = g.sign(p, v).map(Parity::is_odd).unwrap_or(false);
                flip[v] = flip[p] ^ odd;
            }
        }
        flip
    }

    fn path_to_root(&self, mut v: usize) -> Vec<usize> {
        let mut path = vec![v];
        while let Some(p) = self.parent[v] {
            path.push(p);
            v = p;
        }
        path
    }

    /// Vertices of the fundamental cycle closed by the non-forest edge `uv`,
    /// starting at `u` and ending at `v`.
    fn fundamental_cycle(&self, u: usize, v: usize) -> Vec<usize> {
        let pu = self.path_to_root(u);
        let pv = self.path_to_root(v);
        let lca = *pu
            .iter()
            .find(|x| pv.contains(x))
            .expect("ends of an edge lie in one tree");
        let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
        cycle.push(lca);
        let tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
        cycle.extend(tail.into_iter().rev());
        cycle
    }
}

/// Outcome of [`switching_equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `switch_at(g1, switching) == g2`.
    Equivalent { switching: Vec<usize> },
    /// Vertex counts or underlying graphs differ.
    DifferentUnderlying,
    /// The fundamental cycle closed by `edge` has different parity in the
    /// two graphs. `cycle` lists its vertices in order.
    Inequivalent { edge: Edge, cycle: Vec<usize> },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

/// Decide switching equivalence, with a witness either way.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Equivalence {
    if !g1.same_underlying(g2) {
        return Equivalence::DifferentUnderlying;
    }
    let forest = Forest::of(g1);
    let f1 = forest.normaliser(g1);
    let f2 = forest.normaliser(g2);
    for (e, p1) in g1.edges() {
        let (u, v) = e.ends();
        if forest.is_tree_edge(u, v) {
            continue;
        }
        let p2 = g2.sign(u, v).expect("same underlying graph");
        let n1 = (p1.is_odd() ^ f1[u] ^ f1[v]) as u8;
        let n2 = (p2.is_odd() ^ f2[u] ^ f2[v]) as u8;
        if n1 != n2 {
            return Equivalence::Inequivalent {
                edge: e,
                cycle: forest.fundamental_cycle(u, v),
            };
        }
    }
    let switching = g1
        .vertices()
        .filter(|&v| f1[v] != f2[v])
        .collect();
    Equivalence::Equivalent { switching }
}

/// Canonical member of the switching class of `g`: every edge of the
/// depth-first spanning forest of the underlying graph is even.
pub fn switching_canonical(g: &SignedGraph) -> SignedGraph {
    let forest = Forest::of(g);
    let flip = forest.normaliser(g);
    let set: Vec<usize> = g.vertices().filter(|&v| flip[v]).collect();
    switch_at(g, &set).expect("vertices come from the graph")
}

/// Edges of the depth-first spanning forest used by [`switching_canonical`].
pub fn spanning_forest_edges(g: &SignedGraph) -> Vec<Edge> {
    let forest = Forest::of(g);
    let mut out: Vec<Edge> = g
        .vertices()
        .filter_map(|v| forest.parent[v].map(|p| Edge::new(p, v)))
        .collect();
    out.sort();
    out
}

/// `N⁻(v) = ∅` and `N⁻(w) ⊆ N(v) ∩ N(w)`.
pub fn is_centered(g: &SignedGraph, v: usize, w: usize) -> bool {
    g.neighbors_with(v, Parity::Odd).next().is_none()
        && g.neighbors_with(w, Parity::Odd).all(|u| g.has_edge(v, u))
}

/// Switch at `N⁻(v) ∪ (N⁻(w) − N(v))`, which always yields a
/// `(v,w)`-centered graph. Returns the graph and the sorted switching set.
pub fn make_centered(
    g: &SignedGraph,
    v: usize,
    w: usize,
) -> Result<(SignedGraph, Vec<usize>), GraphError> {
    require_non_adjacent(g, v, w)?;
    let mut set: Vec<usize> = g.odd_neighbors(v);
    set.extend(
        g.neighbors_with(w, Parity::Odd)
            .filter(|&u| !g.has_edge(v, u)),
    );
    set.sort_unstable();
    set.dedup();
    let centered = switch_at(g, &set)?;
    debug_assert!(is_centered(&centered, v, w));
    Ok((centered, set))
}

pub(crate) fn require_non_adjacent(g: &SignedGraph, v: usize, w: usize) -> Result<(), GraphError> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(GraphError::Loop(v));
    }
    if g.has_edge(v, w) {
        return Err(GraphError::Adjacent(v, w));
    }
    Ok(())
}
