//! Exact results against floating-point eigenvalues and an independent
//! fraction-free determinant.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use siv_core::enumerate::{graph_from_masks, pairs};
use siv_core::{laplacian_char_poly, signed_laplacian, siv_oracle, IntMatrix, Parity, SignedGraph, SivVerdict};

fn eigenvalues(g: &SignedGraph) -> Vec<f64> {
    let n = g.order();
    let rows = signed_laplacian(g).to_i64_rows().unwrap();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j] as f64);
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Bareiss fraction-free elimination.
fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.order();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    prev * sign
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = pairs(n).len();
        (Just(n), 0..1u64 << m, 0..1u64 << m).prop_map(|(n, e, o)| graph_from_masks(n, e, o))
    })
}

fn arb_instance() -> impl Strategy<Value = (SignedGraph, usize, usize, Parity)> {
    arb_graph(6)
        .prop_filter("needs a non-edge", |g| !g.non_edges().is_empty())
        .prop_flat_map(|g| {
            let k = g.non_edges().len();
            (Just(g), 0..k, any::<bool>())
        })
        .prop_map(|(g, i, odd)| {
            let (v, w) = g.non_edges()[i].ends();
            (g, v, w, if odd { Parity::Odd } else { Parity::Even })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn constant_term_is_signed_determinant(g in arb_graph(7)) {
        let l = signed_laplacian(&g);
        let p = l.char_poly();
        let sign = if g.order() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(p.coeff(0), bareiss_det(&l) * sign);
    }

    #[test]
    fn char_poly_matches_float_eigenvalues(g in arb_graph(6)) {
        let p = laplacian_char_poly(&g);
        let ev = eigenvalues(&g);
        // coefficients are the signed elementary symmetric functions
        let mut e = vec![1.0f64];
        for &x in &ev {
            let mut next = vec![0.0; e.len() + 1];
            for (k, c) in e.iter().enumerate() {
                next[k] += c;
                next[k + 1] -= c * x;
            }
            e = next;
        }
        let n = g.order();
        for k in 0..=n {
            let exact = p.coeff(n - k).to_f64().unwrap();
            prop_assert!((exact - e[k]).abs() < 1e-6 * (1.0 + exact.abs()), "k={} exact={} float={}", k, exact, e[k]);
        }
    }

    #[test]
    fn oracle_agrees_with_float_spectra((g, v, w, parity) in arb_instance()) {
        let before = eigenvalues(&g);
        let after = eigenvalues(&g.with_edge(v, w, parity).unwrap());
        let verdict = siv_oracle(&g, v, w, parity).unwrap().verdict;
        let one = one_moved(&before, &after);
        let two = two_moved(&before, &after);
        prop_assert_eq!(verdict.is_integral(), one.is_some() || two.is_some(), "{:?} -> {:?}", before, after);
        match verdict {
            SivVerdict::Type1 { lambda } => {
                prop_assert!(one.is_some_and(|x| (x - lambda as f64).abs() < TOL));
            }
            SivVerdict::Type2 { sum, product } => {
                let (a, b) = two.unwrap();
                prop_assert!((a + b - sum as f64).abs() < TOL);
                prop_assert!((a * b - product as f64).abs() < 1e-5);
            }
            SivVerdict::None => {}
        }
    }
}

const TOL: f64 = 1e-7;

fn same_multiset(mut a: Vec<f64>, b: &[f64]) -> bool {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    a.iter().zip(b).all(|(x, y)| (x - y).abs() < TOL)
}

/// An eigenvalue `x` of `before` such that moving it to `x + 2` gives `after`.
fn one_moved(before: &[f64], after: &[f64]) -> Option<f64> {
    (0..before.len())
        .find(|&i| {
            let mut moved = before.to_vec();
            moved[i] += 2.0;
            same_multiset(moved, after)
        })
        .map(|i| before[i])
}

/// Two eigenvalues of `before` whose moves to `x + 1` give `after`.
fn two_moved(before: &[f64], after: &[f64]) -> Option<(f64, f64)> {
    for i in 0..before.len() {
        for j in i + 1..before.len() {
            let mut moved = before.to_vec();
            moved[i] += 1.0;
            moved[j] += 1.0;
            if same_multiset(moved, after) {
                return Some((before[i], before[j]));
            }
        }
    }
    None
}

#[test]
fn bareiss_spot_values() {
    assert_eq!(bareiss_det(&IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]])), BigInt::from(5));
    assert_eq!(bareiss_det(&IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
    assert_eq!(
        bareiss_det(&IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]])),
        BigInt::from(-3)
    );
}
