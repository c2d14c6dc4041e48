//! Signed graphs on labelled vertices `1..=n`.
//!
//! A [`SignedGraph`] is a simple graph in which every present edge carries a
//! [`Parity`]. Odd edges contribute `+1` to the off-diagonal of the signed
//! Laplacian and even edges contribute `-1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Sign of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Parity of a count of odd edges.
    pub fn of_count(odd: usize) -> Parity {
        if odd % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Sum in ℤ/2.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" | "+" => Ok(Parity::Even),
            "odd" | "-" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}` (expected even|odd)")),
        }
    }
}

/// An unordered vertex pair, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Panics if `u == v`.
    pub fn new(u: usize, v: usize) -> Edge {
        assert_ne!(u, v, "an edge needs two distinct ends");
        Edge {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn ends(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn contains(self, x: usize) -> bool {
        self.lo == x || self.hi == x
    }

    pub fn shares_end(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(a: [usize; 2]) -> Self {
        Edge::new(a[0], a[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} is already present")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("graph is not ({0},{1})-centered")]
    NotCentered(usize, usize),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
}

/// A simple graph on vertices `1..=n` with a parity on every present edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    cells: Vec<Option<Parity>>,
}

impl SignedGraph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn new(n: usize) -> Result<SignedGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(SignedGraph {
            n,
            cells: vec![None; n * n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<SignedGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Parity)>,
    {
        let mut g = SignedGraph::new(n)?;
        for (u, v, p) in edges {
            g.add_edge(u, v, p)?;
        }
        Ok(g)
    }

    /// Complete graph whose odd edges are exactly `odd`.
    pub fn complete<I>(n: usize, odd: I) -> Result<SignedGraph, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = SignedGraph::new(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v, Parity::Even)?;
            }
        }
        for e in odd {
            let (u, v) = e.ends();
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.set(u, v, Some(Parity::Odd));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn idx(&self, u: usize, v: usize) -> usize {
        (u - 1) * self.n + (v - 1)
    }

    fn set(&mut self, u: usize, v: usize, p: Option<Parity>) {
        let (a, b) = (self.idx(u, v), self.idx(v, u));
        self.cells[a] = p;
        self.cells[b] = p;
    }

    pub fn add_edge(&mut self, u: usize, v: usize, parity: Parity) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.sign(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(Edge::new(u, v)));
        }
        self.set(u, v, Some(parity));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<Parity, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let p = self
            .sign(u, v)
            .ok_or(GraphError::MissingEdge(Edge::new(u, v)))?;
        self.set(u, v, None);
        Ok(p)
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize, parity: Parity) -> Result<SignedGraph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v, parity)?;
        Ok(g)
    }

    /// Sign of `uv`, `None` when absent. Out-of-range vertices read as absent.
    pub fn sign(&self, u: usize, v: usize) -> Option<Parity> {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        self.cells[self.idx(u, v)]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(move |&u| self.has_edge(v, u))
    }

    pub fn neighbors_with(&self, v: usize, parity: Parity) -> impl Iterator<Item = usize> + '_ {
        self.vertices()
            .filter(move |&u| self.sign(v, u) == Some(parity))
    }

    /// `N⁻(v)`.
    pub fn odd_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors_with(v, Parity::Odd).collect()
    }

    /// `N⁺(v)`.
    pub fn even_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors_with(v, Parity::Even).collect()
    }

    /// Present edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Parity)> + '_ {
        (1..=self.n).flat_map(move |u| {
            (u + 1..=self.n).filter_map(move |v| self.sign(u, v).map(|p| (Edge::new(u, v), p)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn odd_edges(&self) -> Vec<Edge> {
        self.edges()
            .filter(|(_, p)| p.is_odd())
            .map(|(e, _)| e)
            .collect()
    }

    /// Absent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.has_edge(u, v) {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.is_some() == b.is_some())
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Graph whose vertex `perm[i-1]` plays the role of vertex `i` of `self`.
    ///
    /// `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = SignedGraph::new(self.n)?;
        for (e, p) in self.edges() {
            let (u, v) = e.ends();
            g.add_edge(perm[u - 1], perm[v - 1], p)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        let mut first = true;
        for (e, p) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let mark = if p.is_odd() { '-' } else { '+' };
            write!(f, "{}{}{}", e.lo, e.hi, mark)?;
        }
        f.write_str(")")
    }
}
