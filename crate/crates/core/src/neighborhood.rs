//! Neighbourhood bookkeeping for a non-adjacent pair `(v, w)`.

use serde::Serialize;

use crate::graph::{GraphError, Parity, SignedGraph};
use crate::switching::{is_centered, require_non_adjacent};

/// Partition of `V − {v, w}` for a `(v,w)`-centered graph.
///
/// Each part is sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSplit {
    /// `N(v) − N(w)`.
    pub a: Vec<usize>,
    /// `N(w) − N(v)`.
    pub b: Vec<usize>,
    /// Common neighbours joined to both `v` and `w` by even edges.
    pub c: Vec<usize>,
    /// Common neighbours with an even `v`-edge and an odd `w`-edge.
    pub d: Vec<usize>,
    /// Adjacent to neither.
    pub e: Vec<usize>,
}

/// Which part of a [`NeighborhoodSplit`] a vertex falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    C,
    D,
    E,
}

impl NeighborhoodSplit {
    pub fn block_of(&self, x: usize) -> Option<Block> {
        [
            (&self.a, Block::A),
            (&self.b, Block::B),
            (&self.c, Block::C),
            (&self.d, Block::D),
            (&self.e, Block::E),
        ]
        .into_iter()
        .find(|(part, _)| part.binary_search(&x).is_ok())
        .map(|(_, blk)| blk)
    }

    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len() + self.d.len() + self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Split `V − {v, w}` into the five blocks. Requires `g` to be
/// `(v,w)`-centered.
pub fn neighborhood_split(
    g: &SignedGraph,
    v: usize,
    w: usize,
) -> Result<NeighborhoodSplit, GraphError> {
    require_non_adjacent(g, v, w)?;
    if !is_centered(g, v, w) {
        return Err(GraphError::NotCentered(v, w));
    }
    let mut split = NeighborhoodSplit::default();
    for x in g.vertices().filter(|&x| x != v && x != w) {
        let part = match (g.sign(v, x), g.sign(w, x)) {
            (Some(_), None) => &mut split.a,
            (None, Some(_)) => &mut split.b,
            (Some(_), Some(Parity::Even)) => &mut split.c,
            (Some(_), Some(Parity::Odd)) => &mut split.d,
            (None, None) => &mut split.e,
        };
        part.push(x);
    }
    Ok(split)
}

/// Neighbourhood counts of a non-adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeQuantities {
    /// `|N(v) − N(w)|`
    pub a: usize,
    /// `|N(w) − N(v)|`
    pub b: usize,
    /// common neighbours whose two edges agree in parity
    pub c: usize,
    /// common neighbours whose two edges differ in parity
    pub d: usize,
    /// `c − d`
    pub t: i64,
    pub d1: usize,
    pub d2: usize,
}

pub fn edge_quantities(g: &SignedGraph, v: usize, w: usize) -> Result<EdgeQuantities, GraphError> {
    require_non_adjacent(g, v, w)?;
    let (mut a, mut b, mut c, mut d) = (0, 0, 0, 0);
    for x in g.vertices() {
        match (g.sign(v, x), g.sign(w, x)) {
            (Some(_), None) => a += 1,
            (None, Some(_)) => b += 1,
            (Some(p), Some(q)) if p == q => c += 1,
            (Some(_), Some(_)) => d += 1,
            (None, None) => {}
        }
    }
    Ok(EdgeQuantities {
        a,
        b,
        c,
        d,
        t: c as i64 - d as i64,
        d1: g.degree(v),
        d2: g.degree(w),
    })
}
