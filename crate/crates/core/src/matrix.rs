//! Square integer matrices, signed Laplacians, and exact characteristic
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::graph::{Parity, SignedGraph};
use crate::poly::IntPoly;

/// Dense square matrix over ℤ.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.entries[i * self.n + j] = x;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    /// `det(xI − self)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> IntPoly {
        if let Some(p) = self.char_poly_i128() {
            return p;
        }
        self.char_poly_big()
    }

    /// Machine-word run of the same recurrence; `None` on any overflow.
    fn char_poly_i128(&self) -> Option<IntPoly> {
        let n = self.n;
        let a: Vec<i128> = self
            .entries
            .iter()
            .map(|x| x.to_i128())
            .collect::<Option<_>>()?;
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        let mut m = vec![0i128; n * n];
        let mut am = vec![0i128; n * n];
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1} I, computed in place from A·M_{k-1}.
            let c_prev = coeffs[n - k + 1];
            for (idx, slot) in m.iter_mut().enumerate() {
                let (i, j) = (idx / n, idx % n);
                let mut v = if k == 1 { 0 } else { am[idx] };
                if i == j {
                    v = v.checked_add(c_prev)?;
                }
                *slot = v;
            }
            let mut trace: i128 = 0;
            for i in 0..n {
                for j in 0..n {
                    let mut s: i128 = 0;
                    for l in 0..n {
                        s = s.checked_add(a[i * n + l].checked_mul(m[l * n + j])?)?;
                    }
                    am[i * n + j] = s;
                }
                trace = trace.checked_add(am[i * n + i])?;
            }
            let k_i = k as i128;
            debug_assert_eq!(trace % k_i, 0, "Faddeev–LeVerrier division is exact");
            coeffs[n - k] = -(trace / k_i);
        }
        Some(IntPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
    }

    fn char_poly_big(&self) -> IntPoly {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut am = IntMatrix::zeros(n);
        for k in 1..=n {
            let mut m = if k == 1 { IntMatrix::zeros(n) } else { am.clone() };
            for i in 0..n {
                let d = m.get(i, i) + &coeffs[n - k + 1];
                m.set(i, i, d);
            }
            am = self * &m;
            let trace: BigInt = (0..n).map(|i| am.get(i, i)).sum();
            coeffs[n - k] = -(trace / BigInt::from(k));
        }
        IntPoly::new(coeffs)
    }
}

impl std::ops::Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(l, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

/// `L = D − A`: degrees on the diagonal, `−1` for an even edge and `+1` for
/// an odd edge off the diagonal. Row/column `i` is vertex `i + 1`.
pub fn signed_laplacian(g: &SignedGraph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for (e, p) in g.edges() {
        let (u, v) = e.ends();
        let x = BigInt::from(match p {
            Parity::Even => -1,
            Parity::Odd => 1,
        });
        m.set(u - 1, v - 1, x.clone());
        m.set(v - 1, u - 1, x);
    }
    for v in g.vertices() {
        m.set(v - 1, v - 1, BigInt::from(g.degree(v)));
    }
    m
}

/// `det(xI − L(g))`.
pub fn laplacian_char_poly(g: &SignedGraph) -> IntPoly {
    signed_laplacian(g).char_poly()
}
