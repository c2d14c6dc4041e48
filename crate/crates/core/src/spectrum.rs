//! Integer roots of monic integer polynomials.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::poly::IntPoly;

/// Integer roots peeled off a monic polynomial, plus whatever is left.
///
/// `∏ (x − rᵢ) · residual` reproduces the input exactly. The polynomial
/// splits over ℤ iff the residual is the constant `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSpectrum {
    roots: Vec<BigInt>,
    residual: IntPoly,
}

impl IntegerSpectrum {
    /// Integer roots with multiplicity, ascending.
    pub fn roots(&self) -> &[BigInt] {
        &self.roots
    }

    pub fn residual(&self) -> &IntPoly {
        &self.residual
    }

    pub fn is_integral(&self) -> bool {
        self.residual == IntPoly::one()
    }

    /// The full spectrum when it is integral.
    pub fn integral(&self) -> Option<&[BigInt]> {
        self.is_integral().then_some(self.roots.as_slice())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.roots.iter().map(ToPrimitive::to_i64).collect()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum SpectrumJson {
    Integral(Vec<String>),
    Flag(&'static str),
}

impl Serialize for IntegerSpectrum {
    /// A sorted integer list, or the string `"non-integral"`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_integral() {
            if let Some(v) = self.to_i64s() {
                return v.serialize(s);
            }
            SpectrumJson::Integral(self.roots.iter().map(ToString::to_string).collect())
                .serialize(s)
        } else {
            SpectrumJson::Flag("non-integral").serialize(s)
        }
    }
}

/// Upper bound on the absolute value of any root of a monic polynomial
/// (Fujiwara). `None` when a coefficient does not fit an `f64`.
fn root_bound(p: &IntPoly) -> Option<BigInt> {
    let n = p.degree()?;
    let mut best = 0.0f64;
    for k in 1..=n {
        let c = p.coeff(n - k).to_f64()?.abs();
        if !c.is_finite() {
            return None;
        }
        let r = if k == n { c / 2.0 } else { c };
        best = best.max(r.powf(1.0 / k as f64));
    }
    BigInt::from_f64((2.0 * best).ceil() + 1.0)
}

/// Peel every integer root off the monic polynomial `p`.
///
/// Candidates are the divisors of the constant term left after removing the
/// factors of `x`, restricted by a root-magnitude bound.
pub fn integer_spectrum(p: &IntPoly) -> IntegerSpectrum {
    assert!(p.is_monic(), "integer_spectrum expects a monic polynomial");
    let zeros = p.zero_root_multiplicity();
    let mut rest = IntPoly::new(p.coeffs()[zeros..].to_vec());
    let mut roots: Vec<BigInt> = vec![BigInt::zero(); zeros];

    let c = rest.coeff(0).abs();
    if rest.degree() != Some(0) {
        let limit = match root_bound(&rest) {
            Some(b) if b < c => b,
            _ => c.clone(),
        };
        let mut d = BigInt::one();
        while d <= limit {
            if (&c % &d).is_zero() {
                for r in [d.clone(), -d.clone()] {
                    let lin = IntPoly::linear(&r);
                    while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                        rest = rest.div_exact(&lin).expect("root implies exact division");
                        roots.push(r.clone());
                    }
                }
            }
            d += 1;
        }
    }
    roots.sort();
    IntegerSpectrum {
        roots,
        residual: rest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn k3_polynomial_splits() {
        let s = integer_spectrum(&IntPoly::from_i64s(&[0, 9, -6, 1]));
        assert_eq!(s.integral(), Some(big(&[0, 3, 3]).as_slice()));
    }

    #[test]
    fn irrational_roots_leave_residual() {
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let s = integer_spectrum(&p);
        assert!(!s.is_integral());
        assert!(s.roots().is_empty());
        assert_eq!(s.residual(), &p);
    }

    #[test]
    fn single_zero_root() {
        let s = integer_spectrum(&IntPoly::x());
        assert_eq!(s.integral(), Some(big(&[0]).as_slice()));
    }

    #[test]
    fn constant_one_is_empty_spectrum() {
        let s = integer_spectrum(&IntPoly::one());
        assert!(s.is_integral());
        assert!(s.roots().is_empty());
    }

    proptest! {
        #[test]
        fn peeled_roots_multiply_back(
            roots in prop::collection::vec(-12i64..12, 0..6),
            extra in prop::option::of((1i64..5, -5i64..5)),
        ) {
            let roots = big(&roots);
            let mut p = IntPoly::from_roots(roots.iter());
            // optionally append an irreducible quadratic x^2 + b x + c with c > b^2/4
            if let Some((c0, b)) = extra {
                let q = IntPoly::from_i64s(&[b * b + c0, b, 1]);
                p = &p * &q;
            }
            let s = integer_spectrum(&p);
            let back = &IntPoly::from_roots(s.roots().iter()) * s.residual();
            prop_assert_eq!(back, p);
            let mut want = roots.clone();
            want.sort();
            prop_assert_eq!(s.roots(), want.as_slice());
        }
    }
}
