//! Characteristic-polynomial oracle for spectral integral variation.
//!
//! Adding an edge `vw` to a signed graph is a rank-one update of the signed
//! Laplacian, so either one eigenvalue moves up by 2 (type 1) or two move up
//! by 1 (type 2), or the variation is not integral at all. With `p` and `p′`
//! the characteristic polynomials before and after, the two cases are the
//! exact identities
//!
//! ```text
//! type 1:  p′(x)·(x − λ)  = p(x)·(x − λ − 2)
//! type 2:  p′(x)·q(x)     = p(x)·q(x − 1),   q = x² − s·x + π
//! ```
//!
//! The unknown constant in each identity is recovered by exact division by
//! `Δ = p′ − p`, which is never zero because the trace grows by 2. For type 2
//! the sum `s = d₁ + d₂ + 1` is fixed by comparing `tr(L²)` before and after.
//! Nothing here looks at neighbourhood structure beyond the two degrees.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, Parity, SignedGraph};
use crate::matrix::laplacian_char_poly;
use crate::poly::IntPoly;
use crate::switching::require_non_adjacent;

/// Outcome of an edge addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SivVerdict {
    None,
    /// The eigenvalue `lambda` becomes `lambda + 2`.
    Type1 { lambda: i64 },
    /// The roots `λ₁, λ₂` of `x² − s·x + p` each grow by 1.
    Type2 {
        #[serde(rename = "s")]
        sum: i64,
        #[serde(rename = "p")]
        product: i64,
    },
}

impl SivVerdict {
    pub fn is_integral(&self) -> bool {
        !matches!(self, SivVerdict::None)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SivVerdict::None => "none",
            SivVerdict::Type1 { .. } => "type1",
            SivVerdict::Type2 { .. } => "type2",
        }
    }
}

/// Polynomials an oracle verdict was derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: SivVerdict,
    /// `det(xI − L)` before the addition.
    pub before: IntPoly,
    /// `det(xI − L′)` after the addition.
    pub after: IntPoly,
}

impl Certificate {
    /// Re-check the identity behind the verdict. `false` for `None`.
    pub fn verify(&self) -> bool {
        verify_shift_identity(&self.before, &self.after, &self.verdict).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerdictError {
    #[error("verdict of kind `none` carries no identity to verify")]
    NoIdentity,
    #[error("polynomial degrees differ")]
    DegreeMismatch,
}

/// Classify adding `vw` with `parity` by comparing characteristic polynomials.
pub fn siv_oracle(
    g: &SignedGraph,
    v: usize,
    w: usize,
    parity: Parity,
) -> Result<Certificate, GraphError> {
    require_non_adjacent(g, v, w)?;
    let before = laplacian_char_poly(g);
    let after = laplacian_char_poly(&g.with_edge(v, w, parity)?);
    let verdict = classify_polys(&before, &after, g.degree(v) + g.degree(w));
    Ok(Certificate {
        verdict,
        before,
        after,
    })
}

/// Core of [`siv_oracle`] once both polynomials are known. `degree_sum` is
/// `d₁ + d₂` in the graph before the addition.
pub fn classify_polys(before: &IntPoly, after: &IntPoly, degree_sum: usize) -> SivVerdict {
    let delta = after - before;
    if delta.is_zero() {
        return SivVerdict::None;
    }
    // x·Δ + 2p = λ·Δ
    let lhs = &(delta.shift_up(1)) + &before.scale(&BigInt::from(2));
    if let Some(lambda) = constant_quotient(&lhs, &delta) {
        return SivVerdict::Type1 { lambda };
    }
    // (x−1)²p − s(x−1)p − x²p′ + s·x·p′ = π·Δ
    let s = degree_sum as i64 + 1;
    let lhs = type2_combination(before, after, s);
    if let Some(product) = constant_quotient(&lhs, &delta) {
        return SivVerdict::Type2 { sum: s, product };
    }
    SivVerdict::None
}

fn type2_combination(before: &IntPoly, after: &IntPoly, s: i64) -> IntPoly {
    let s_big = BigInt::from(s);
    let xm1 = IntPoly::from_i64s(&[-1, 1]);
    let xm1_sq = &xm1 * &xm1;
    let a = &xm1_sq * before;
    let b = (&xm1 * before).scale(&s_big);
    let c = after.shift_up(2);
    let d = after.shift_up(1).scale(&s_big);
    &(&(&a - &b) - &c) + &d
}

/// `num / den` when it is an integer constant.
fn constant_quotient(num: &IntPoly, den: &IntPoly) -> Option<i64> {
    let q = num.div_exact(den)?;
    match q.degree() {
        None => Some(0),
        Some(0) => q.coeff(0).to_i64(),
        Some(_) => None,
    }
}

/// Check the polynomial identity claimed by `verdict` for `p → p′`.
pub fn verify_shift_identity(
    before: &IntPoly,
    after: &IntPoly,
    verdict: &SivVerdict,
) -> Result<bool, VerdictError> {
    if before.degree() != after.degree() {
        return Err(VerdictError::DegreeMismatch);
    }
    let ok = match *verdict {
        SivVerdict::None => return Err(VerdictError::NoIdentity),
        SivVerdict::Type1 { lambda } => {
            let l = BigInt::from(lambda);
            let lhs = after * &IntPoly::linear(&l);
            let rhs = before * &IntPoly::linear(&(l + 2));
            lhs == rhs
        }
        SivVerdict::Type2 { sum, product } => {
            let q = IntPoly::from_i64s(&[product, -sum, 1]);
            let q_shift = q.translate(&BigInt::from(-1));
            &(after * &q) == &(before * &q_shift)
        }
    };
    Ok(ok && before != after)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::Even;

    fn path(n: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (1..n).map(|i| (i, i + 1, Even))).unwrap()
    }

    #[test]
    fn p3_leaves_is_type1() {
        // leaves 1, 3 ; spectra {0,1,3} → {0,3,3}
        let g = SignedGraph::from_edges(3, [(1, 2, Even), (2, 3, Even)]).unwrap();
        let cert = siv_oracle(&g, 1, 3, Even).unwrap();
        assert_eq!(cert.verdict, SivVerdict::Type1 { lambda: 1 });
        assert_eq!(cert.before, IntPoly::from_i64s(&[0, 3, -4, 1]));
        assert_eq!(cert.after, IntPoly::from_i64s(&[0, 9, -6, 1]));
        assert!(cert.verify());
    }

    #[test]
    fn p2_plus_k1_is_type2() {
        let g = SignedGraph::from_edges(3, [(1, 2, Even)]).unwrap();
        let cert = siv_oracle(&g, 1, 3, Even).unwrap();
        assert_eq!(cert.verdict, SivVerdict::Type2 { sum: 2, product: 0 });
        assert!(cert.verify());
    }

    #[test]
    fn p4_endpoints_is_none() {
        let cert = siv_oracle(&path(4), 1, 4, Even).unwrap();
        assert_eq!(cert.verdict, SivVerdict::None);
        assert!(!cert.verify());
    }

    #[test]
    fn adjacent_pair_is_an_error() {
        assert_eq!(siv_oracle(&path(2), 1, 2, Even).unwrap_err(), GraphError::Adjacent(1, 2));
    }

    #[test]
    fn identity_spot_checks() {
        let p3 = IntPoly::from_i64s(&[0, 3, -4, 1]);
        let k3 = IntPoly::from_i64s(&[0, 9, -6, 1]);
        assert_eq!(verify_shift_identity(&p3, &k3, &SivVerdict::Type1 { lambda: 1 }), Ok(true));
        let p2k1 = IntPoly::from_i64s(&[0, 0, -2, 1]);
        assert_eq!(
            verify_shift_identity(&p2k1, &p3, &SivVerdict::Type2 { sum: 2, product: 0 }),
            Ok(true)
        );
        assert_eq!(verify_shift_identity(&p3, &p3, &SivVerdict::Type1 { lambda: 1 }), Ok(false));
        assert_eq!(
            verify_shift_identity(&p3, &p3, &SivVerdict::Type2 { sum: 2, product: 0 }),
            Ok(false)
        );
        assert_eq!(
            verify_shift_identity(&p3, &k3, &SivVerdict::None),
            Err(VerdictError::NoIdentity)
        );
    }

    #[test]
    fn verdict_json_shape() {
        let v = SivVerdict::Type2 { sum: 2, product: 0 };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"type2","s":2,"p":0}"#);
        let v = SivVerdict::Type1 { lambda: 1 };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"type1","lambda":1}"#);
        assert_eq!(serde_json::to_string(&SivVerdict::None).unwrap(), r#"{"kind":"none"}"#);
        let back: SivVerdict = serde_json::from_str(r#"{"kind":"type1","lambda":1}"#).unwrap();
        assert_eq!(back, v);
    }
}
