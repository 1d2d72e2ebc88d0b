//! A number that is either an exact rational or an arbitrary-precision float.
//!
//! Classical (q = 1) evaluations stay exact end to end; quantum evaluations
//! carry MPFR floats at the precision of the originating context. Mixing the
//! two promotes to the float side at its precision.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Rational),
    Real(Float),
}

impl Scalar {
    pub fn one() -> Self {
        Scalar::Exact(Rational::from(1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(Rational::from(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Exact(r)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Real(_) => None,
        }
    }

    fn prec(&self) -> Option<u32> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Real(f) => Some(f.prec()),
        }
    }

    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Scalar::Exact(r) => Float::with_val(prec, r),
            Scalar::Real(f) => Float::with_val(prec, f),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                Scalar::Exact(Rational::from(a * b))
            }
            _ => {
                let p = self.prec().or(rhs.prec()).unwrap();
                Scalar::Real(Float::with_val(p, self.to_float(p) * rhs.to_float(p)))
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                Scalar::Exact(Rational::from(a / b))
            }
            _ => {
                let p = self.prec().or(rhs.prec()).unwrap();
                Scalar::Real(Float::with_val(p, self.to_float(p) / rhs.to_float(p)))
            }
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                Scalar::Exact(Rational::from(a + b))
            }
            _ => {
                let p = self.prec().or(rhs.prec()).unwrap();
                Scalar::Real(Float::with_val(p, self.to_float(p) + rhs.to_float(p)))
            }
        }
    }

    pub fn pow_i(&self, e: i32) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(Rational::from(r.pow(e))),
            Scalar::Real(f) => Scalar::Real(Float::with_val(f.prec(), f.pow(e))),
        }
    }

    pub fn square(&self) -> Scalar {
        self.mul(self)
    }

    /// Render for output: exact values as `p/q`, floats at `sig` significant digits.
    pub fn render(&self, sig: usize) -> String {
        match self {
            Scalar::Exact(r) => r.to_string(),
            Scalar::Real(f) => format_float(f, sig),
        }
    }
}

/// Deterministic decimal rendering with a fixed number of significant digits.
pub fn format_float(f: &Float, sig: usize) -> String {
    f.to_string_radix(10, Some(sig.max(2)))
}

/// |a - b| / |b|, at the working precision of `b`.
pub fn relative_residual(a: &Float, b: &Float) -> Float {
    let p = b.prec().max(a.prec());
    let diff = Float::with_val(p, a - b).abs();
    let denom = Float::with_val(p, b).abs();
    if denom == 0 {
        return diff;
    }
    Float::with_val(p, diff / denom)
}

/// Balanced pairwise reduction; deterministic for a fixed input order.
pub fn pairwise_sum(mut terms: Vec<Float>, prec: u32) -> Float {
    if terms.is_empty() {
        return Float::with_val(prec, 0);
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut it = terms.chunks(2);
        for pair in &mut it {
            if pair.len() == 2 {
                next.push(Float::with_val(prec, &pair[0] + &pair[1]));
            } else {
                next.push(pair[0].clone());
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

pub fn binomial(n: u32, k: u32) -> Integer {
    let num = factorial(n);
    let den = factorial(k) * factorial(n - k);
    num / den
}
