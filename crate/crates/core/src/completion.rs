//! Signed complete targets, the triangle-parity edge sets `X` and `Y`,
//! vertex substitution, and completability.
//!
//! An edge `vw` of a signed complete graph is in `X` when every triangle
//! through it is even, and in `Y` when every triangle through it is odd and
//! each third vertex `u` sees exactly one more odd than even triangle through
//! `{u, v}`. A partial graph can be grown into the target by single-edge
//! additions that each have integral spectral variation iff its missing edges
//! lie in `X ∪ Y`, its signs agree with the target, and `Kₙ` minus the missing
//! `X` edges has no induced `P₄` or `2K₂`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, GraphError, Parity, SignedGraph};
use crate::matrix::{laplacian_char_poly, signed_laplacian, IntMatrix};
use crate::oracle::{classify_polys, siv_oracle, verify_shift_identity, Certificate};
use crate::poly::IntPoly;
use crate::switching::switch_at;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("operation needs at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("brute-force search supports at most 11 vertices, got {0}")]
    TooLarge(usize),
    #[error("not completable")]
    NotCompletable,
    #[error("part {0}: the all-ones vector is not an eigenvector of its Laplacian")]
    NotConstantRowSum(usize),
    #[error("no certified addition from the current state; stuck with {0} missing edges")]
    Stuck(usize),
}

/// Anything with an edge-sign lookup on vertices `1..=n`.
pub trait EdgeSigns {
    fn order(&self) -> usize;
    fn edge_sign(&self, u: usize, v: usize) -> Option<Parity>;
}

impl EdgeSigns for SignedGraph {
    fn order(&self) -> usize {
        SignedGraph::order(self)
    }

    fn edge_sign(&self, u: usize, v: usize) -> Option<Parity> {
        self.sign(u, v)
    }
}

/// `(Kₙ, Σ)`: every pair is an edge, odd iff it lies in `Σ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedComplete {
    n: usize,
    odd: Vec<bool>,
}

impl SignedComplete {
    /// All-even `Kₙ`.
    pub fn new(n: usize) -> Result<SignedComplete, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(SignedComplete {
            n,
            odd: vec![false; n * n],
        })
    }

    pub fn from_odd_edges<I>(n: usize, odd: I) -> Result<SignedComplete, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut t = SignedComplete::new(n)?;
        for (u, v) in odd {
            t.add_odd(u, v)?;
        }
        Ok(t)
    }

    /// Read the signs off a complete signed graph.
    pub fn from_graph(g: &SignedGraph) -> Result<SignedComplete, GraphError> {
        let mut t = SignedComplete::new(g.order())?;
        for u in g.vertices() {
            for v in u + 1..=g.order() {
                match g.sign(u, v) {
                    None => return Err(GraphError::MissingEdge(Edge::new(u, v))),
                    Some(p) => t.set(u, v, p),
                }
            }
        }
        Ok(t)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    /// Mark `uv` odd; an error if it already is.
    pub fn add_odd(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if self.odd[(u - 1) * self.n + v - 1] {
            return Err(GraphError::DuplicateEdge(Edge::new(u, v)));
        }
        self.set(u, v, Parity::Odd);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, p: Parity) {
        let odd = p.is_odd();
        self.odd[(u - 1) * self.n + v - 1] = odd;
        self.odd[(v - 1) * self.n + u - 1] = odd;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Parity of the pair `uv`. Panics if `u == v` or either is out of range.
    pub fn parity(&self, u: usize, v: usize) -> Parity {
        self.check_pair(u, v).expect("valid vertex pair");
        if self.odd[(u - 1) * self.n + v - 1] {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn odd_edges(&self) -> Vec<Edge> {
        self.pairs().filter(|e| self.parity_of(*e).is_odd()).collect()
    }

    /// All `n(n−1)/2` pairs, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.n).flat_map(move |u| (u + 1..=self.n).map(move |v| Edge::new(u, v)))
    }

    pub fn parity_of(&self, e: Edge) -> Parity {
        let (u, v) = e.ends();
        self.parity(u, v)
    }

    pub fn to_graph(&self) -> SignedGraph {
        SignedGraph::complete(self.n, self.odd_edges())
            .expect("valid complete graph")
    }

    /// Flip the parity of `e`.
    pub fn toggle(&mut self, e: Edge) {
        let (u, v) = e.ends();
        let p = self.parity(u, v).flip();
        self.set(u, v, p);
    }

    pub fn switch_at(&self, set: &[usize]) -> Result<SignedComplete, GraphError> {
        Ok(SignedComplete::from_graph(&switch_at(&self.to_graph(), set)?)
            .expect("switching keeps the graph complete"))
    }

    /// `g`'s signs agree with this target on every edge of `g`.
    pub fn restricts_to(&self, g: &SignedGraph) -> bool {
        g.order() == self.n && g.edges().all(|(e, p)| self.parity_of(e) == p)
    }

    /// Target minus `missing`, signs copied.
    pub fn without(&self, missing: &[Edge]) -> SignedGraph {
        let mut g = self.to_graph();
        for e in missing {
            let (u, v) = e.ends();
            let _ = g.remove_edge(u, v);
        }
        g
    }
}

impl EdgeSigns for SignedComplete {
    fn order(&self) -> usize {
        self.n
    }

    fn edge_sign(&self, u: usize, v: usize) -> Option<Parity> {
        (u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v))
            .then(|| self.parity(u, v))
    }
}

impl fmt::Debug for SignedComplete {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedComplete(n={}; odd", self.n)?;
        for e in self.odd_edges() {
            write!(f, " {e}")?;
        }
        f.write_str(")")
    }
}

/// Parity of the number of odd edges among `uv`, `uw`, `vw`.
pub fn triangle_parity<T: EdgeSigns + ?Sized>(
    t: &T,
    u: usize,
    v: usize,
    w: usize,
) -> Result<Parity, GraphError> {
    let n = t.order();
    for x in [u, v, w] {
        if x == 0 || x > n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    let mut acc = Parity::Even;
    for (a, b) in [(u, v), (u, w), (v, w)] {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        acc = acc.combine(t.edge_sign(a, b).ok_or(GraphError::MissingEdge(Edge::new(a, b)))?);
    }
    Ok(acc)
}

fn tri(t: &SignedComplete, u: usize, v: usize, w: usize) -> Parity {
    t.parity(u, v).combine(t.parity(u, w)).combine(t.parity(v, w))
}

fn require_four(t: &SignedComplete) -> Result<(), CompletionError> {
    if t.order() < 4 {
        return Err(CompletionError::TooSmall(t.order()));
    }
    Ok(())
}

/// Edges all of whose triangles are even.
pub fn x_set(t: &SignedComplete) -> Result<Vec<Edge>, CompletionError> {
    require_four(t)?;
    Ok(t
        .pairs()
        .filter(|e| {
            let (v, w) = e.ends();
            (1..=t.order())
                .filter(|&u| u != v && u != w)
                .all(|u| !tri(t, u, v, w).is_odd())
        })
        .collect())
}

/// Odd minus even count over triangles through `{u, v}`.
fn excess_at(t: &SignedComplete, u: usize, v: usize) -> i64 {
    (1..=t.order())
        .filter(|&x| x != u && x != v)
        .map(|x| if tri(t, u, v, x).is_odd() { 1 } else { -1 })
        .sum()
}

/// The excess condition read with `v` as the fixed end of `vw`.
fn y_condition(t: &SignedComplete, v: usize, w: usize) -> bool {
    (1..=t.order())
        .filter(|&u| u != v && u != w)
        .all(|u| tri(t, u, v, w).is_odd() && excess_at(t, u, v) == 1)
}

/// Edges all of whose triangles are odd and whose every third vertex `u`
/// has one more odd than even triangle through `{u, v}`. The count is taken
/// at each end in turn and the edge is admitted if either end qualifies.
pub fn y_set(t: &SignedComplete) -> Result<Vec<Edge>, CompletionError> {
    require_four(t)?;
    Ok(t
        .pairs()
        .filter(|e| {
            let (v, w) = e.ends();
            y_condition(t, v, w) || y_condition(t, w, v)
        })
        .collect())
}

/// [`y_set`] with the count taken only at the smaller end (`first_end`) or
/// only at the larger one.
pub fn y_set_oriented(t: &SignedComplete, first_end: bool) -> Result<Vec<Edge>, CompletionError> {
    require_four(t)?;
    Ok(t
        .pairs()
        .filter(|e| {
            let (v, w) = e.ends();
            if first_end {
                y_condition(t, v, w)
            } else {
                y_condition(t, w, v)
            }
        })
        .collect())
}

/// `Σ △ Y(Σ)`.
pub fn swap_y(t: &SignedComplete) -> Result<SignedComplete, CompletionError> {
    let mut out = t.clone();
    for e in y_set(t)? {
        out.toggle(e);
    }
    Ok(out)
}

/// Replace vertex `i` of `quotient` by `parts[i − 1]`.
///
/// Part `i` occupies the next `|parts[i − 1]|` labels after part `i − 1`.
/// Every vertex of part `i` is joined to every vertex of part `j` exactly
/// when `ij` is a quotient edge, with that edge's parity.
pub fn substitute(quotient: &SignedGraph, parts: &[SignedGraph]) -> Result<SignedGraph, GraphError> {
    if parts.len() != quotient.order() {
        return Err(GraphError::VertexCountMismatch(quotient.order(), parts.len()));
    }
    let offsets = part_offsets(parts);
    let total: usize = parts.iter().map(SignedGraph::order).sum();
    let mut g = SignedGraph::new(total)?;
    for (i, part) in parts.iter().enumerate() {
        for (e, p) in part.edges() {
            let (u, v) = e.ends();
            g.add_edge(offsets[i] + u, offsets[i] + v, p)?;
        }
    }
    for (e, p) in quotient.edges() {
        let (i, j) = e.ends();
        for a in 1..=parts[i - 1].order() {
            for b in 1..=parts[j - 1].order() {
                g.add_edge(offsets[i - 1] + a, offsets[j - 1] + b, p)?;
            }
        }
    }
    Ok(g)
}

/// Label offset of each part in [`substitute`]'s output.
pub fn part_offsets(parts: &[SignedGraph]) -> Vec<usize> {
    parts
        .iter()
        .scan(0, |acc, p| {
            let start = *acc;
            *acc += p.order();
            Some(start)
        })
        .collect()
}

/// Spectrum of a substituted graph split into the quotient-level part and
/// the shifted part spectra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionSpectrum {
    /// `k × k`, diagonal `λᵢ + mᵢ`, off-diagonal `±nⱼ`. Not symmetric in general.
    pub m_matrix: IntMatrix,
    pub m_poly: IntPoly,
    /// `λᵢ`: the common row sum of each part's Laplacian.
    pub part_eigenvalues: Vec<i64>,
    /// `mᵢ`: number of vertices outside part `i` joined to it.
    pub masses: Vec<i64>,
    /// `qᵢ(x − mᵢ)` with `qᵢ = det(xI − Lᵢ) / (x − λᵢ)`.
    pub shifted: Vec<IntPoly>,
}

impl SubstitutionSpectrum {
    /// `det(xI − M) · ∏ qᵢ(x − mᵢ)`.
    pub fn total_poly(&self) -> IntPoly {
        self.shifted.iter().fold(self.m_poly.clone(), |acc, q| &acc * q)
    }
}

/// Common row sum of `L`, if there is one.
fn constant_row_sum(l: &IntMatrix) -> Option<BigInt> {
    let first = l.row_sum(0);
    (1..l.order()).all(|i| l.row_sum(i) == first).then_some(first)
}

pub fn substitution_spectrum(
    quotient: &SignedGraph,
    parts: &[SignedGraph],
) -> Result<SubstitutionSpectrum, CompletionError> {
    let k = quotient.order();
    if parts.len() != k {
        return Err(GraphError::VertexCountMismatch(k, parts.len()).into());
    }
    let sizes: Vec<i64> = parts.iter().map(|p| p.order() as i64).collect();
    let mut part_eigenvalues = Vec::with_capacity(k);
    let mut shifted = Vec::with_capacity(k);
    let masses: Vec<i64> = (1..=k)
        .map(|i| quotient.neighbors(i).map(|j| sizes[j - 1]).sum())
        .collect();
    for (i, part) in parts.iter().enumerate() {
        let l = signed_laplacian(part);
        let lambda = constant_row_sum(&l).ok_or(CompletionError::NotConstantRowSum(i + 1))?;
        let q = l
            .char_poly()
            .div_exact(&IntPoly::linear(&lambda))
            .expect("row-sum eigenvalue is a root");
        shifted.push(q.translate(&BigInt::from(-masses[i])));
        part_eigenvalues.push(lambda.to_i64().expect("small eigenvalue"));
    }
    let mut m = IntMatrix::zeros(k);
    for i in 0..k {
        m.set(i, i, BigInt::from(part_eigenvalues[i] + masses[i]));
    }
    for (e, p) in quotient.edges() {
        let (i, j) = e.ends();
        let s: i64 = if p.is_odd() { 1 } else { -1 };
        m.set(i - 1, j - 1, BigInt::from(s * sizes[j - 1]));
        m.set(j - 1, i - 1, BigInt::from(s * sizes[i - 1]));
    }
    let m_poly = m.char_poly();
    Ok(SubstitutionSpectrum {
        m_matrix: m,
        m_poly,
        part_eigenvalues,
        masses,
        shifted,
    })
}

/// `t` up to switching, as a quotient with all-even complete parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDecomposition {
    /// Components of `(V, X)`, each sorted, ordered by smallest vertex.
    pub parts: Vec<Vec<usize>>,
    pub quotient: SignedComplete,
    /// Switching `t` here makes every `X` edge even.
    pub switching_set: Vec<usize>,
}

impl QuotientDecomposition {
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The quotient with each vertex replaced by an all-even complete part,
    /// on the original labels. Equals `t` switched at `switching_set`.
    pub fn reassemble(&self) -> SignedGraph {
        let parts: Vec<SignedGraph> = self
            .parts
            .iter()
            .map(|p| SignedGraph::complete(p.len(), []).expect("nonempty part"))
            .collect();
        let g = substitute(&self.quotient.to_graph(), &parts).expect("sizes match");
        let perm: Vec<usize> = self.parts.iter().flatten().copied().collect();
        g.relabel(&perm).expect("parts partition the vertices")
    }
}

/// Connected components of `(1..=n, edges)`, each sorted, ordered by minimum.
fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for e in edges {
        let (u, v) = e.ends();
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a.max(b)] = a.min(b);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for v in 1..=n {
        let r = find(&mut parent, v);
        let idx = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(v);
    }
    groups
}

pub fn quotient_decomposition(t: &SignedComplete) -> Result<QuotientDecomposition, CompletionError> {
    let x = x_set(t)?;
    let parts = components(t.order(), &x);
    let switching_set: Vec<usize> = {
        let mut s: Vec<usize> = parts
            .iter()
            .flat_map(|p| {
                let r = p[0];
                p.iter().copied().filter(move |&u| u != r && t.parity(r, u).is_odd())
            })
            .collect();
        s.sort_unstable();
        s
    };
    let switched = t.switch_at(&switching_set)?;
    let mut quotient = SignedComplete::new(parts.len())?;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if switched.parity(parts[i][0], parts[j][0]).is_odd() {
                quotient.add_odd(i + 1, j + 1)?;
            }
        }
    }
    Ok(QuotientDecomposition {
        parts,
        quotient,
        switching_set,
    })
}

/// No four vertices induce `P₄` or `2K₂`. Edge signs are ignored.
pub fn is_plain_integrally_completable(g: &SignedGraph) -> bool {
    let n = g.order();
    let adj = |u: usize, v: usize| g.has_edge(u, v);
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let q = [a, b, c, d];
                    let mut deg = [0usize; 4];
                    let mut m = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if adj(q[i], q[j]) {
                                deg[i] += 1;
                                deg[j] += 1;
                                m += 1;
                            }
                        }
                    }
                    deg.sort_unstable();
                    let p4 = m == 3 && deg == [1, 1, 2, 2];
                    let two_k2 = m == 2 && deg == [1, 1, 1, 1];
                    if p4 || two_k2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn require_same_order(g: &SignedGraph, t: &SignedComplete) -> Result<(), GraphError> {
    if g.order() != t.order() {
        return Err(GraphError::VertexCountMismatch(g.order(), t.order()));
    }
    Ok(())
}

/// Whether `g` can be grown into `t` by single-edge additions with integral
/// spectral variation, decided from triangle parities.
pub fn is_sigma_completable(g: &SignedGraph, t: &SignedComplete) -> Result<bool, CompletionError> {
    require_same_order(g, t)?;
    if !t.restricts_to(g) {
        return Ok(false);
    }
    if t.order() <= 3 {
        return Ok(true);
    }
    let x = x_set(t)?;
    let y = y_set(t)?;
    let missing = g.non_edges();
    if !missing.iter().all(|e| x.contains(e) || y.contains(e)) {
        return Ok(false);
    }
    let removed: Vec<Edge> = missing.into_iter().filter(|e| x.contains(e)).collect();
    Ok(is_plain_integrally_completable(&t.without(&removed)))
}

/// One certified edge addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanStep {
    pub edge: Edge,
    pub parity: Parity,
    pub certificate: Certificate,
}

impl Serialize for PlanStep {
    /// `{edge:[u,v], parity, kind, lambda | s,p}`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use crate::oracle::SivVerdict;
        let v = self.certificate.verdict;
        let fields = match v {
            SivVerdict::None => 3,
            SivVerdict::Type1 { .. } => 4,
            SivVerdict::Type2 { .. } => 5,
        };
        let mut st = s.serialize_struct("PlanStep", fields)?;
        st.serialize_field("edge", &self.edge)?;
        st.serialize_field("parity", &self.parity)?;
        st.serialize_field("kind", v.kind_name())?;
        match v {
            SivVerdict::None => {}
            SivVerdict::Type1 { lambda } => st.serialize_field("lambda", &lambda)?,
            SivVerdict::Type2 { sum, product } => {
                st.serialize_field("s", &sum)?;
                st.serialize_field("p", &product)?;
            }
        }
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionPlan {
    pub start: SignedGraph,
    pub target: SignedComplete,
    pub steps: Vec<PlanStep>,
}

impl CompletionPlan {
    /// Apply every step to `start`.
    pub fn final_state(&self) -> Result<SignedGraph, GraphError> {
        let mut g = self.start.clone();
        for s in &self.steps {
            let (u, v) = s.edge.ends();
            g.add_edge(u, v, s.parity)?;
        }
        Ok(g)
    }

    /// Recompute both polynomials for each step, check the claimed shift
    /// identity, and check the last state is the target.
    pub fn verify(&self) -> bool {
        let mut g = self.start.clone();
        for s in &self.steps {
            let (u, v) = s.edge.ends();
            if s.parity != self.target.parity(u, v) {
                return false;
            }
            let before = laplacian_char_poly(&g);
            if g.add_edge(u, v, s.parity).is_err() {
                return false;
            }
            let after = laplacian_char_poly(&g);
            if !matches!(verify_shift_identity(&before, &after, &s.certificate.verdict), Ok(true)) {
                return false;
            }
        }
        g == self.target.to_graph()
    }
}

/// A sequence of certified additions from `g` to `t`.
///
/// At each step the first missing edge (lexicographically) whose addition
/// keeps [`is_sigma_completable`] true and which the oracle certifies is
/// added.
pub fn plan_completion(g: &SignedGraph, t: &SignedComplete) -> Result<CompletionPlan, CompletionError> {
    if !is_sigma_completable(g, t)? {
        return Err(CompletionError::NotCompletable);
    }
    let mut state = g.clone();
    let mut steps = Vec::new();
    loop {
        let missing = state.non_edges();
        if missing.is_empty() {
            break;
        }
        let mut chosen = None;
        for e in &missing {
            let (u, v) = e.ends();
            let parity = t.parity(u, v);
            let next = state.with_edge(u, v, parity)?;
            if !is_sigma_completable(&next, t)? {
                continue;
            }
            let certificate = siv_oracle(&state, u, v, parity)?;
            if certificate.verdict.is_integral() {
                chosen = Some((next, PlanStep { edge: *e, parity, certificate }));
                break;
            }
        }
        let (next, step) = chosen.ok_or(CompletionError::Stuck(missing.len()))?;
        state = next;
        steps.push(step);
    }
    Ok(CompletionPlan {
        start: g.clone(),
        target: t.clone(),
        steps,
    })
}

struct Search<'a> {
    target: &'a SignedComplete,
    pairs: Vec<Edge>,
    memo: HashMap<u64, bool>,
    polys: HashMap<u64, IntPoly>,
}

impl Search<'_> {
    fn graph(&self, mask: u64) -> SignedGraph {
        let mut g = SignedGraph::new(self.target.order()).expect("n ≥ 1");
        for (i, e) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (u, v) = e.ends();
                g.add_edge(u, v, self.target.parity(u, v)).expect("fresh edge");
            }
        }
        g
    }

    fn poly(&mut self, mask: u64) -> IntPoly {
        if let Some(p) = self.polys.get(&mask) {
            return p.clone();
        }
        let p = laplacian_char_poly(&self.graph(mask));
        self.polys.insert(mask, p.clone());
        p
    }

    fn degree(&self, mask: u64, v: usize) -> usize {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(i, e)| mask >> i & 1 == 1 && e.contains(v))
            .count()
    }

    fn reachable(&mut self, mask: u64) -> bool {
        let full = (1u64 << self.pairs.len()) - 1;
        if mask == full {
            return true;
        }
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let before = self.poly(mask);
        let mut found = false;
        for i in 0..self.pairs.len() {
            if mask >> i & 1 == 1 {
                continue;
            }
            let next = mask | 1 << i;
            let (u, v) = self.pairs[i].ends();
            let degree_sum = self.degree(mask, u) + self.degree(mask, v);
            let after = self.poly(next);
            if classify_polys(&before, &after, degree_sum).is_integral() && self.reachable(next) {
                found = true;
                break;
            }
        }
        self.memo.insert(mask, found);
        found
    }
}

/// Exhaustive search over supergraphs of `g`, following only additions the
/// oracle calls integral. Independent of triangle parities.
pub fn brute_force_completable(g: &SignedGraph, t: &SignedComplete) -> Result<bool, CompletionError> {
    require_same_order(g, t)?;
    if t.order() > 11 {
        return Err(CompletionError::TooLarge(t.order()));
    }
    if !t.restricts_to(g) {
        return Ok(false);
    }
    let pairs: Vec<Edge> = t.pairs().collect();
    let start = pairs
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            let (u, v) = e.ends();
            g.has_edge(u, v)
        })
        .fold(0u64, |m, (i, _)| m | 1 << i);
    let mut search = Search {
        target: t,
        pairs,
        memo: HashMap::new(),
        polys: HashMap::new(),
    };
    Ok(search.reachable(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::edges_of;
    use crate::spectrum::integer_spectrum;
    use crate::switching::switching_equivalent;
    use Parity::{Even, Odd};

    fn k7_y_instance() -> SignedComplete {
        // v = 1, w = 2, a₁..a₅ = 3..7
        let mut odd: Vec<(usize, usize)> = (3..=7).map(|a| (2, a)).collect();
        odd.extend([(3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]);
        SignedComplete::from_odd_edges(7, odd).unwrap()
    }

    fn five_cycle() -> SignedComplete {
        SignedComplete::from_odd_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap()
    }

    #[test]
    fn triangle_parity_counts_odd_edges() {
        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        assert_eq!(triangle_parity(&t, 1, 3, 4), Ok(Even));
        assert_eq!(triangle_parity(&t, 3, 1, 2), Ok(Odd));
        let all = SignedComplete::from_odd_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(triangle_parity(&all, 1, 2, 3), Ok(Odd));
        let p3 = SignedGraph::from_edges(3, [(1, 2, Even), (2, 3, Odd)]).unwrap();
        assert_eq!(
            triangle_parity(&p3, 1, 2, 3),
            Err(GraphError::MissingEdge(Edge::new(1, 3)))
        );
    }

    #[test]
    fn x_set_examples() {
        let k4 = SignedComplete::new(4).unwrap();
        assert_eq!(x_set(&k4).unwrap().len(), 6);
        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        assert_eq!(x_set(&t).unwrap(), edges_of(&[(3, 4)]));
        assert!(x_set(&five_cycle()).unwrap().is_empty());
        assert_eq!(x_set(&SignedComplete::new(3).unwrap()), Err(CompletionError::TooSmall(3)));
    }

    #[test]
    fn y_set_examples() {
        let t = SignedComplete::from_odd_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(y_set(&t).unwrap().is_empty());
        assert!(y_set(&SignedComplete::new(5).unwrap()).unwrap().is_empty());
        let k7 = k7_y_instance();
        assert_eq!(y_set(&k7).unwrap(), edges_of(&[(1, 2)]));
        assert_eq!(y_set_oriented(&k7, true).unwrap(), edges_of(&[(1, 2)]));
        assert_eq!(y_set_oriented(&k7, false).unwrap(), edges_of(&[(1, 2)]));
    }

    #[test]
    fn swap_y_on_k7_instance() {
        let k7 = k7_y_instance();
        let s = swap_y(&k7).unwrap();
        assert_eq!(s.parity(1, 2), Odd);
        assert!(y_set(&s).unwrap().is_empty());
        assert!(x_set(&s).unwrap().contains(&Edge::new(1, 2)));
        assert_eq!(swap_y(&s).unwrap(), s);
        let plain = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        assert_eq!(swap_y(&plain).unwrap(), plain);
    }

    #[test]
    fn substitute_examples() {
        let q = SignedGraph::from_edges(3, [(1, 2, Odd), (2, 3, Even)]).unwrap();
        let k1 = SignedGraph::new(1).unwrap();
        let same = substitute(&q, &[k1.clone(), k1.clone(), k1.clone()]).unwrap();
        assert_eq!(same, q);

        let even_k2 = SignedGraph::complete(2, []).unwrap();
        let odd_k2 = SignedGraph::complete(2, [Edge::new(1, 2)]).unwrap();
        assert_eq!(substitute(&even_k2, &[k1.clone(), k1.clone()]).unwrap(), even_k2);
        let g = substitute(&odd_k2, &[even_k2.clone(), k1.clone()]).unwrap();
        let want = SignedGraph::from_edges(3, [(1, 2, Even), (1, 3, Odd), (2, 3, Odd)]).unwrap();
        assert_eq!(g, want);
    }

    fn spectrum_of(p: &IntPoly) -> Vec<i64> {
        integer_spectrum(p).to_i64s().unwrap()
    }

    #[test]
    fn substitution_spectrum_examples() {
        let k1 = SignedGraph::new(1).unwrap();
        let even_k2 = SignedGraph::complete(2, []).unwrap();
        let odd_k2 = SignedGraph::complete(2, [Edge::new(1, 2)]).unwrap();

        let s = substitution_spectrum(&even_k2, &[k1.clone(), k1.clone()]).unwrap();
        assert_eq!(s.m_matrix, IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]));
        assert_eq!(spectrum_of(&s.total_poly()), vec![0, 2]);

        let s = substitution_spectrum(&even_k2, &[even_k2.clone(), even_k2.clone()]).unwrap();
        assert_eq!(s.m_matrix, IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]));
        assert_eq!(spectrum_of(&s.m_poly), vec![0, 4]);
        assert_eq!(spectrum_of(&s.total_poly()), vec![0, 4, 4, 4]);
        let direct = laplacian_char_poly(&SignedGraph::complete(4, []).unwrap());
        assert_eq!(s.total_poly(), direct);

        let s = substitution_spectrum(&odd_k2, &[even_k2.clone(), even_k2.clone()]).unwrap();
        assert_eq!(s.m_matrix, IntMatrix::from_rows(&[vec![2, 2], vec![2, 2]]));
        let g = substitute(&odd_k2, &[even_k2.clone(), even_k2.clone()]).unwrap();
        assert_eq!(s.total_poly(), laplacian_char_poly(&g));
    }

    #[test]
    fn substitution_spectrum_rejects_nonconstant_row_sum() {
        let k2 = SignedGraph::complete(2, []).unwrap();
        let mixed = SignedGraph::from_edges(3, [(1, 2, Odd), (2, 3, Even)]).unwrap();
        assert_eq!(
            substitution_spectrum(&k2, &[SignedGraph::new(1).unwrap(), mixed]),
            Err(CompletionError::NotConstantRowSum(2))
        );
    }

    #[test]
    fn quotient_decomposition_examples() {
        let d = quotient_decomposition(&SignedComplete::new(4).unwrap()).unwrap();
        assert_eq!(d.k(), 1);
        assert_eq!(d.parts, vec![vec![1, 2, 3, 4]]);

        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        let d = quotient_decomposition(&t).unwrap();
        assert_eq!(d.parts, vec![vec![1], vec![2], vec![3, 4]]);
        assert_eq!(d.quotient.odd_edges(), edges_of(&[(1, 2)]));
        assert!(switching_equivalent(&d.reassemble(), &t.to_graph()).is_equivalent());
        assert_eq!(d.reassemble(), switch_at(&t.to_graph(), &d.switching_set).unwrap());

        let d = quotient_decomposition(&k7_y_instance()).unwrap();
        assert_eq!(d.k(), 7);
    }

    #[test]
    fn plain_completability_examples() {
        let path = |n: usize| SignedGraph::from_edges(n, (1..n).map(|i| (i, i + 1, Even))).unwrap();
        let cycle = |n: usize| {
            SignedGraph::from_edges(n, (1..=n).map(|i| (i, i % n + 1, Even))).unwrap()
        };
        assert!(!is_plain_integrally_completable(&path(4)));
        assert!(is_plain_integrally_completable(&SignedGraph::complete(6, []).unwrap()));
        assert!(is_plain_integrally_completable(&SignedGraph::new(5).unwrap()));
        let k23 = SignedGraph::from_edges(
            5,
            [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)].map(|(u, v)| (u, v, Even)),
        )
        .unwrap();
        assert!(is_plain_integrally_completable(&k23));
        assert!(is_plain_integrally_completable(&cycle(4)));
        assert!(!is_plain_integrally_completable(&cycle(5)));
        let two_k2 = SignedGraph::from_edges(4, [(1, 2, Even), (3, 4, Odd)]).unwrap();
        assert!(!is_plain_integrally_completable(&two_k2));
    }

    #[test]
    fn sigma_completable_examples() {
        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        assert_eq!(is_sigma_completable(&t.to_graph(), &t), Ok(true));
        let g = t.without(&edges_of(&[(3, 4)]));
        assert_eq!(is_sigma_completable(&g, &t), Ok(true));
        assert_eq!(brute_force_completable(&g, &t), Ok(true));
        let g = t.without(&edges_of(&[(1, 3)]));
        assert_eq!(is_sigma_completable(&g, &t), Ok(false));
        assert_eq!(brute_force_completable(&g, &t), Ok(false));
        assert_eq!(brute_force_completable(&t.to_graph(), &t), Ok(true));
        let small = SignedGraph::new(3).unwrap();
        assert!(matches!(
            is_sigma_completable(&small, &t),
            Err(CompletionError::Graph(GraphError::VertexCountMismatch(3, 4)))
        ));
    }

    #[test]
    fn small_targets_agree_with_brute_force() {
        for n in 1..=3usize {
            let pairs: Vec<Edge> = SignedComplete::new(n).unwrap().pairs().collect();
            for sigma in 0u32..1 << pairs.len() {
                let mut t = SignedComplete::new(n).unwrap();
                for (i, e) in pairs.iter().enumerate() {
                    if sigma >> i & 1 == 1 {
                        t.toggle(*e);
                    }
                }
                for state in 0u32..1 << pairs.len() {
                    let missing: Vec<Edge> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| state >> i & 1 == 0)
                        .map(|(_, e)| *e)
                        .collect();
                    let g = t.without(&missing);
                    assert_eq!(is_sigma_completable(&g, &t), Ok(true));
                    assert_eq!(brute_force_completable(&g, &t), Ok(true));
                }
            }
        }
    }

    #[test]
    fn plan_examples() {
        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        let empty = plan_completion(&t.to_graph(), &t).unwrap();
        assert!(empty.steps.is_empty());
        assert!(empty.verify());

        let plan = plan_completion(&t.without(&edges_of(&[(3, 4)])), &t).unwrap();
        assert_eq!(plan.steps.len(), 1);
        assert_eq!(plan.steps[0].edge, Edge::new(3, 4));
        assert_eq!(plan.steps[0].parity, Even);
        assert!(plan.verify());

        let k7 = k7_y_instance();
        let plan = plan_completion(&k7.without(&edges_of(&[(1, 2)])), &k7).unwrap();
        assert_eq!(plan.steps.len(), 1);
        assert_eq!(plan.steps[0].parity, Even);
        assert_eq!(plan.steps[0].certificate.verdict.kind_name(), "type2");
        assert!(plan.verify());

        assert_eq!(
            plan_completion(&t.without(&edges_of(&[(1, 3)])), &t),
            Err(CompletionError::NotCompletable)
        );
    }

    #[test]
    fn plan_step_json() {
        let t = SignedComplete::from_odd_edges(4, [(1, 2)]).unwrap();
        let plan = plan_completion(&t.without(&edges_of(&[(3, 4)])), &t).unwrap();
        let json = serde_json::to_value(&plan.steps[0]).unwrap();
        assert_eq!(json["edge"], serde_json::json!([3, 4]));
        assert_eq!(json["parity"], "even");
        assert!(json["kind"] == "type1" || json["kind"] == "type2");
    }
}
