//! Arithmetic in `ℤ[λ]/(λ² − sλ + p)`.
//!
//! Lets eigenvector identities be checked exactly when the two eigenvalues
//! are irrational conjugates. Every identity that holds here holds at both
//! roots of `λ² − sλ + p`.

use std::fmt;

/// The ring `ℤ[λ]/(λ² − sλ + p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadRing {
    pub sum: i64,
    pub product: i64,
}

/// `c0 + c1·λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct QuadInt {
    pub c0: i64,
    pub c1: i64,
}

impl QuadInt {
    pub fn zero() -> QuadInt {
        QuadInt::default()
    }

    pub fn from_int(c: i64) -> QuadInt {
        QuadInt { c0: c, c1: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn scale(self, k: i64) -> QuadInt {
        QuadInt {
            c0: self.c0 * k,
            c1: self.c1 * k,
        }
    }

    /// Image under `λ ↦ r`.
    pub fn eval(&self, r: i64) -> i64 {
        self.c0 + self.c1 * r
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (c0, 0) => write!(f, "{c0}"),
            (0, c1) => write!(f, "{c1}λ"),
            (c0, c1) if c1 < 0 => write!(f, "{c0}{c1}λ"),
            (c0, c1) => write!(f, "{c0}+{c1}λ"),
        }
    }
}

impl QuadRing {
    pub fn new(sum: i64, product: i64) -> QuadRing {
        QuadRing { sum, product }
    }

    /// The class of `λ`.
    pub fn root(&self) -> QuadInt {
        QuadInt { c0: 0, c1: 1 }
    }

    /// `s − λ`, the other root.
    pub fn conjugate_root(&self) -> QuadInt {
        QuadInt {
            c0: self.sum,
            c1: -1,
        }
    }

    pub fn discriminant(&self) -> i64 {
        self.sum * self.sum - 4 * self.product
    }

    pub fn is_root(&self, r: i64) -> bool {
        r * r - self.sum * r + self.product == 0
    }

    pub fn add(&self, x: QuadInt, y: QuadInt) -> QuadInt {
        QuadInt {
            c0: x.c0 + y.c0,
            c1: x.c1 + y.c1,
        }
    }

    pub fn sub(&self, x: QuadInt, y: QuadInt) -> QuadInt {
        QuadInt {
            c0: x.c0 - y.c0,
            c1: x.c1 - y.c1,
        }
    }

    pub fn mul(&self, x: QuadInt, y: QuadInt) -> QuadInt {
        // λ² = sλ − p
        let hi = x.c1 * y.c1;
        QuadInt {
            c0: x.c0 * y.c0 - hi * self.product,
            c1: x.c0 * y.c1 + x.c1 * y.c0 + hi * self.sum,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_satisfies_its_polynomial() {
        let r = QuadRing::new(5, 3);
        let l = r.root();
        let lhs = r.add(r.sub(r.mul(l, l), l.scale(5)), QuadInt::from_int(3));
        assert!(lhs.is_zero());
        let m = r.conjugate_root();
        let lhs = r.add(r.sub(r.mul(m, m), m.scale(5)), QuadInt::from_int(3));
        assert!(lhs.is_zero());
    }

    #[test]
    fn root_times_conjugate_is_product() {
        let r = QuadRing::new(7, 11);
        assert_eq!(r.mul(r.root(), r.conjugate_root()), QuadInt::from_int(11));
        assert_eq!(r.discriminant(), 5);
    }

    proptest! {
        #[test]
        fn evaluation_is_a_homomorphism(
            r in -6i64..6, k in -6i64..6,
            a in (-9i64..9, -9i64..9), b in (-9i64..9, -9i64..9),
        ) {
            // choose s, p so that r is a root of x² − sx + p: roots r and k
            let ring = QuadRing::new(r + k, r * k);
            let x = QuadInt { c0: a.0, c1: a.1 };
            let y = QuadInt { c0: b.0, c1: b.1 };
            prop_assert_eq!(ring.mul(x, y).eval(r), x.eval(r) * y.eval(r));
            prop_assert_eq!(ring.mul(x, y).eval(k), x.eval(k) * y.eval(k));
        }
    }
}
