//! Combinatorial characterisation of spectral integral variation.
//!
//! Type 1 is a neighbourhood-equality test. Type 2 is decided on a
//! `(v,w)`-centered representative: with the vector `u` that is `1` on `A`,
//! `−1` on `B`, `2` on `D` and `0` elsewhere, the row sums `(L·u)ₓ` must
//! take one prescribed value per block:
//!
//! | block of `x` | required `(L·u)ₓ` |
//! |--------------|-------------------|
//! | A            | `d₂ + 1`          |
//! | B            | `−(d₁ + 1)`       |
//! | C            | `d₂ − d₁`         |
//! | D            | `d₁ + d₂ + 2`     |
//! | E            | `0`               |
//!
//! Odd additions are reduced to even ones by switching at
//! `(N(w) − N(v)) ∪ {w}`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, Parity, SignedGraph};
use crate::neighborhood::{edge_quantities, neighborhood_split, Block, NeighborhoodSplit};
use crate::oracle::SivVerdict;
use crate::quadratic::{QuadInt, QuadRing};
use crate::switching::{is_centered, make_centered, require_non_adjacent, switch_at};

/// Type-1 test: equal signed neighbourhoods (even) or swapped ones (odd).
pub fn check_type1(g: &SignedGraph, v: usize, w: usize, parity: Parity) -> Result<bool, GraphError> {
    require_non_adjacent(g, v, w)?;
    let (odd_v, even_v) = (g.odd_neighbors(v), g.even_neighbors(v));
    let (odd_w, even_w) = (g.odd_neighbors(w), g.even_neighbors(w));
    Ok(match parity {
        Parity::Even => odd_v == odd_w && even_v == even_w,
        Parity::Odd => odd_v == even_w && even_v == odd_w,
    })
}

/// Pass/fail of the five block conditions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }
}

/// Everything [`check_type2`] computed on the way to its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type2Check {
    pub verdict: SivVerdict,
    pub conditions: Conditions,
    /// `d₁ + d₂ − 2t`; type 2 needs this to be positive.
    pub gap: i64,
    /// The even, `(v,w)`-centered graph the conditions were evaluated on.
    pub centered: SignedGraph,
    /// Switching set taking the input to `centered`.
    pub switching: Vec<usize>,
    pub split: NeighborhoodSplit,
}

/// Vertices to switch at so that adding `vw` with `parity` becomes an even
/// addition to an equivalent graph.
fn even_reduction(g: &SignedGraph, v: usize, w: usize, parity: Parity) -> Vec<usize> {
    match parity {
        Parity::Even => Vec::new(),
        Parity::Odd => {
            let mut set: Vec<usize> = g.neighbors(w).filter(|&u| !g.has_edge(v, u)).collect();
            set.push(w);
            set.sort_unstable();
            set
        }
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Signed-Laplacian entry, 1-based labels.
fn lap(g: &SignedGraph, x: usize, y: usize) -> i64 {
    if x == y {
        return g.degree(x) as i64;
    }
    match g.sign(x, y) {
        Some(Parity::Even) => -1,
        Some(Parity::Odd) => 1,
        None => 0,
    }
}

/// Evaluate the type-2 block conditions on a centered graph.
fn block_conditions(g: &SignedGraph, split: &NeighborhoodSplit, d1: i64, d2: i64) -> Conditions {
    let mut ok = Conditions {
        a: true,
        b: true,
        c: true,
        d: true,
        e: true,
    };
    let row = |x: usize| -> i64 {
        split.a.iter().map(|&y| lap(g, x, y)).sum::<i64>()
            - split.b.iter().map(|&y| lap(g, x, y)).sum::<i64>()
            + 2 * split.d.iter().map(|&y| lap(g, x, y)).sum::<i64>()
    };
    for (part, block) in [
        (&split.a, Block::A),
        (&split.b, Block::B),
        (&split.c, Block::C),
        (&split.d, Block::D),
        (&split.e, Block::E),
    ] {
        let (target, flag) = match block {
            Block::A => (d2 + 1, &mut ok.a),
            Block::B => (-(d1 + 1), &mut ok.b),
            Block::C => (d2 - d1, &mut ok.c),
            Block::D => (d1 + d2 + 2, &mut ok.d),
            Block::E => (0, &mut ok.e),
        };
        *flag = part.iter().all(|&x| row(x) == target);
    }
    ok
}

/// Type-2 test via centering and the block conditions.
pub fn check_type2(
    g: &SignedGraph,
    v: usize,
    w: usize,
    parity: Parity,
) -> Result<Type2Check, GraphError> {
    require_non_adjacent(g, v, w)?;
    let reduction = even_reduction(g, v, w, parity);
    let reduced = switch_at(g, &reduction)?;
    let (centered, centering) = make_centered(&reduced, v, w)?;
    let split = neighborhood_split(&centered, v, w)?;
    let q = edge_quantities(&centered, v, w)?;
    let (d1, d2) = (q.d1 as i64, q.d2 as i64);
    let conditions = block_conditions(&centered, &split, d1, d2);
    let gap = d1 + d2 - 2 * q.t;
    let verdict = if conditions.all() && gap > 0 {
        SivVerdict::Type2 {
            sum: d1 + d2 + 1,
            product: d1 * d2 + q.t,
        }
    } else {
        SivVerdict::None
    };
    Ok(Type2Check {
        verdict,
        conditions,
        gap,
        centered,
        switching: symmetric_difference(&reduction, &centering),
        split,
    })
}

/// Combined decision: type 1 first, then type 2.
pub fn classify(g: &SignedGraph, v: usize, w: usize, parity: Parity) -> Result<SivVerdict, GraphError> {
    if check_type1(g, v, w, parity)? {
        return Ok(SivVerdict::Type1 {
            lambda: g.degree(v) as i64,
        });
    }
    Ok(check_type2(g, v, w, parity)?.verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("an eigenvector certificate needs a type-2 verdict")]
    NotType2,
}

/// The two explicit eigenvectors behind a type-2 verdict, over
/// `ℤ[λ]/(λ² − sλ + p)`.
///
/// `first` is built from the generic root `λ` and `second` from its
/// conjugate `s − λ`. Both are indexed by vertex label minus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type2Certificate {
    pub graph: SignedGraph,
    pub v: usize,
    pub w: usize,
    pub split: NeighborhoodSplit,
    pub ring: QuadRing,
    pub first: Vec<QuadInt>,
    pub second: Vec<QuadInt>,
}

impl Type2Certificate {
    pub fn first_root(&self) -> QuadInt {
        self.ring.root()
    }

    pub fn second_root(&self) -> QuadInt {
        self.ring.conjugate_root()
    }

    /// `L·x − μ·x`, computed in the ring.
    pub fn residual(&self, vector: &[QuadInt], eigenvalue: QuadInt) -> Vec<QuadInt> {
        let g = &self.graph;
        g.vertices()
            .map(|x| {
                let mut acc = QuadInt::zero();
                for y in g.vertices() {
                    let l = lap(g, x, y);
                    if l != 0 {
                        acc = self.ring.add(acc, vector[y - 1].scale(l));
                    }
                }
                self.ring.sub(acc, self.ring.mul(eigenvalue, vector[x - 1]))
            })
            .collect()
    }

    pub fn residuals_vanish(&self) -> bool {
        self.residual(&self.first, self.first_root())
            .iter()
            .chain(self.residual(&self.second, self.second_root()).iter())
            .all(|z| z.is_zero())
    }

    /// `(a₁ − b₁)` and `(a₂ − b₂)` as ring elements.
    pub fn head_differences(&self) -> (QuadInt, QuadInt) {
        let (v, w) = (self.v - 1, self.w - 1);
        (
            self.ring.sub(self.first[v], self.first[w]),
            self.ring.sub(self.second[v], self.second[w]),
        )
    }

    /// Integer eigenvector for an integer root `r` of `λ² − sλ + p`, taking
    /// the generic root to `r`.
    pub fn at_root(&self, r: i64) -> Option<Vec<i64>> {
        self.ring
            .is_root(r)
            .then(|| self.first.iter().map(|z| z.eval(r)).collect())
    }
}

/// Build the eigenvector pair for a centered graph and its even-addition
/// type-2 verdict.
pub fn build_type2_eigenvectors(
    centered: &SignedGraph,
    v: usize,
    w: usize,
    verdict: &SivVerdict,
) -> Result<Type2Certificate, CertificateError> {
    let SivVerdict::Type2 { sum, product } = *verdict else {
        return Err(CertificateError::NotType2);
    };
    require_non_adjacent(centered, v, w)?;
    if !is_centered(centered, v, w) {
        return Err(GraphError::NotCentered(v, w).into());
    }
    let split = neighborhood_split(centered, v, w)?;
    let ring = QuadRing::new(sum, product);
    let d1 = centered.degree(v) as i64;
    let d2 = centered.degree(w) as i64;

    let mut tail = vec![QuadInt::zero(); centered.order()];
    for &x in &split.a {
        tail[x - 1] = QuadInt::from_int(1);
    }
    for &x in &split.b {
        tail[x - 1] = QuadInt::from_int(-1);
    }
    for &x in &split.d {
        tail[x - 1] = QuadInt::from_int(2);
    }
    let build = |lambda: QuadInt| {
        let mut vec = tail.clone();
        // a = −λ + d₂ + 1, b = λ − d₁ − 1
        vec[v - 1] = ring.add(lambda.scale(-1), QuadInt::from_int(d2 + 1));
        vec[w - 1] = ring.sub(lambda, QuadInt::from_int(d1 + 1));
        vec
    };
    let first = build(ring.root());
    let second = build(ring.conjugate_root());
    Ok(Type2Certificate {
        graph: centered.clone(),
        v,
        w,
        split,
        ring,
        first,
        second,
    })
}

/// Run [`check_type2`] and, on success, build the eigenvector certificate on
/// its centered graph.
pub fn type2_certificate(
    g: &SignedGraph,
    v: usize,
    w: usize,
    parity: Parity,
) -> Result<Option<Type2Certificate>, GraphError> {
    let check = check_type2(g, v, w, parity)?;
    if !matches!(check.verdict, SivVerdict::Type2 { .. }) {
        return Ok(None);
    }
    match build_type2_eigenvectors(&check.centered, v, w, &check.verdict) {
        Ok(c) => Ok(Some(c)),
        Err(CertificateError::Graph(e)) => Err(e),
        Err(CertificateError::NotType2) => unreachable!("verdict checked above"),
    }
}
