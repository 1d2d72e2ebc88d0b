//! q-numbers, q-factorials and Lie superfactorials.
//!
//! At a root of unity indexed by l, the q-number of a rational x is
//! sin(x pi / l) / sin(pi / l), evaluated as an arbitrary-precision real.
//! In classical mode (q = 1) the q-number of x is x itself, exactly.

use crate::error::Error;
use crate::lie::{self, Family};
use crate::scalar::Scalar;
use rug::{Float, Rational};

#[derive(Clone, Debug)]
pub struct QContext {
    /// None means classical mode.
    pub ell: Option<u32>,
    /// Significand bits for the quantum evaluations.
    pub prec: u32,
}

impl QContext {
    pub fn quantum(ell: u32, prec: u32) -> QContext {
        QContext {
            ell: Some(ell),
            prec,
        }
    }

    pub fn classical(prec: u32) -> QContext {
        QContext { ell: None, prec }
    }

    /// Context for the category of G at level k: l = k + dual Coxeter number.
    pub fn for_level(family: Family, rank: usize, level: u32, prec: u32) -> QContext {
        QContext::quantum(level + lie::dual_coxeter_number(family, rank), prec)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec, rug::float::Constant::Pi)
    }

    /// sin(x pi / l) as a float; x is exact.
    fn sin_frac(&self, x: &Rational, ell: u32) -> Float {
        let xf = Float::with_val(self.prec, x);
        let arg = Float::with_val(self.prec, xf * self.pi()) / ell;
        arg.sin()
    }

    pub fn qnumber(&self, x: &Rational) -> Scalar {
        match self.ell {
            None => Scalar::Exact(x.clone()),
            Some(ell) => {
                let num = self.sin_frac(x, ell);
                let den = self.sin_frac(&Rational::from(1), ell);
                Scalar::Real(Float::with_val(self.prec, num / den))
            }
        }
    }

    pub fn qnumber_int(&self, n: i64) -> Scalar {
        self.qnumber(&Rational::from(n))
    }

    /// [n]! = [1][2]...[n].
    pub fn qfactorial(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for j in 1..=n as i64 {
            acc = acc.mul(&self.qnumber_int(j));
        }
        acc
    }

    /// Product of q-numbers over an explicit argument list.
    pub fn qproduct(&self, args: &[Rational]) -> Scalar {
        let mut acc = Scalar::one();
        for x in args {
            acc = acc.mul(&self.qnumber(x));
        }
        acc
    }
}

/// Argument multiset of the superfactorial of the given type: the
/// superfactorial is the product of q-numbers over this list. For the
/// simply-laced types this is the union of {1..s} over the exponents s;
/// for B/C/F4/G2 the per-exponent factorials are the twisted variants with
/// half- (or third-) integer arguments.
pub fn superfactorial_args(family: Family, rank: usize) -> Vec<Rational> {
    let exps = lie::exponents(family, rank);
    let mut args: Vec<Rational> = Vec::new();
    match family {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => {
            for &s in &exps {
                for j in 1..=s as i64 {
                    args.push(Rational::from(j));
                }
            }
        }
        Family::B => {
            // [s/2] [s-1] [s-2] ... [2] [1]
            for &s in &exps {
                args.push(Rational::from((s as i64, 2)));
                for j in 1..s as i64 {
                    args.push(Rational::from(j));
                }
            }
        }
        Family::C => {
            // [s/2] [(s-1)/2] ... [(s+3)/4... the upper half halved,
            // the middle term (s+1)/2 whole, the lower half halved.
            for &s in &exps {
                let s = s as i64;
                let mut j = s;
                while 2 * j > s + 1 {
                    args.push(Rational::from((j, 2)));
                    j -= 1;
                }
                args.push(Rational::from((s + 1, 2)));
                j = (s - 1) / 2;
                while j >= 1 {
                    args.push(Rational::from((j, 2)));
                    j -= 1;
                }
            }
        }
        Family::F4 => {
            let halves = [1, 1, 2, 2, 2, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 8, 8, 9, 10, 10, 11, 12, 14, 16];
            for h in halves {
                args.push(Rational::from((h, 2)));
            }
        }
        Family::G2 => {
            for (p, q) in [(5, 3), (4, 3), (3, 1), (2, 1), (1, 1), (1, 3)] {
                args.push(Rational::from((p, q)));
            }
        }
    }
    args.sort();
    args
}

/// The superfactorial of the type, in the mode of the context.
pub fn superfactorial(family: Family, rank: usize, ctx: &QContext) -> Scalar {
    ctx.qproduct(&superfactorial_args(family, rank))
}

/// Classical reference value: scale_factor * prod over exponents of s!.
pub fn superfactorial_classical_reference(family: Family, rank: usize) -> Result<Rational, Error> {
    let data = lie::LieData::new(family, rank)?;
    let mut acc = Rational::from(data.scale_factor);
    for &s in &data.exponents {
        acc *= crate::scalar::factorial(s);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::from((p, q))
    }

    #[test]
    fn classical_qnumber_is_identity() {
        let ctx = QContext::classical(64);
        assert_eq!(
            ctx.qnumber(&rat(7, 2)).as_exact().unwrap(),
            &rat(7, 2)
        );
    }

    #[test]
    fn qnumber_two_at_ell_six() {
        // [2] = 2 cos(pi/6) = sqrt(3) when l = 6.
        let ctx = QContext::quantum(6, 128);
        let v = ctx.qnumber_int(2).to_float(128);
        let sqrt3 = Float::with_val(128, 3).sqrt();
        let resid = crate::scalar::relative_residual(&v, &sqrt3);
        assert!(resid < Float::with_val(128, 2f64.powi(-120)));
    }

    #[test]
    fn qnumber_reflection() {
        let ctx = QContext::quantum(11, 128);
        for x in [rat(1, 2), rat(5, 3), rat(4, 1)] {
            let a = ctx.qnumber(&x).to_float(128);
            let refl = Rational::from(11) - &x;
            let b = ctx.qnumber(&refl).to_float(128);
            let resid = crate::scalar::relative_residual(&a, &b);
            assert!(resid < Float::with_val(128, 2f64.powi(-120)));
        }
    }

    #[test]
    fn large_ell_approaches_classical() {
        let ctx = QContext::quantum(1_000_000, 128);
        let v = ctx.qnumber(&rat(7, 2)).to_float(128);
        let x = Float::with_val(128, rat(7, 2));
        let resid = crate::scalar::relative_residual(&v, &x);
        assert!(resid < Float::with_val(128, 1e-5));
    }

    #[test]
    fn half_arguments_do_not_factor() {
        // [7/2] differs from [7]/[2]: the q-deformation applies to the
        // argument as a whole.
        let ctx = QContext::quantum(10, 128);
        let a = ctx.qnumber(&rat(7, 2)).to_float(128);
        let b = ctx
            .qnumber_int(7)
            .div(&ctx.qnumber_int(2))
            .to_float(128);
        let diff = Float::with_val(128, &a - &b).abs();
        assert!(diff > 1e-3);
    }

    #[test]
    fn qfactorial_classical() {
        let ctx = QContext::classical(64);
        assert_eq!(ctx.qfactorial(0).as_exact().unwrap(), &Rational::from(1));
        assert_eq!(ctx.qfactorial(3).as_exact().unwrap(), &Rational::from(6));
    }

    #[test]
    fn b_series_tilde_arguments() {
        let args = superfactorial_args(Family::B, 2);
        let expect: Vec<Rational> =
            [(1, 2), (1, 1), (3, 2), (2, 1)].map(|(p, q)| rat(p, q)).to_vec();
        assert_eq!(args, expect);
    }

    #[test]
    fn c_series_tilde_arguments() {
        let args = superfactorial_args(Family::C, 2);
        let expect: Vec<Rational> =
            [(1, 2), (1, 1), (3, 2), (2, 1)].map(|(p, q)| rat(p, q)).to_vec();
        assert_eq!(args, expect);
        // s = 5 contributes [5/2][2][3][1][1/2].
        let args3 = superfactorial_args(Family::C, 3);
        let expect3: Vec<Rational> = [
            (1, 2), (1, 2), (1, 1), (1, 1), (3, 2), (2, 1), (2, 1), (5, 2), (3, 1),
        ]
        .map(|(p, q)| rat(p, q))
        .to_vec();
        assert_eq!(args3, expect3);
    }

    #[test]
    fn classical_superfactorials_match_reference() {
        let cases = [
            (Family::A, 6),
            (Family::B, 6),
            (Family::C, 6),
            (Family::D, 6),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
            (Family::F4, 4),
            (Family::G2, 2),
        ];
        let ctx = QContext::classical(64);
        for (f, r) in cases {
            let direct = superfactorial(f, r, &ctx);
            let reference = superfactorial_classical_reference(f, r).unwrap();
            assert_eq!(direct.as_exact().unwrap(), &reference, "{:?}", f);
        }
    }

    #[test]
    fn g2_classical_value() {
        let ctx = QContext::classical(64);
        let v = superfactorial(Family::G2, 2, &ctx);
        assert_eq!(v.as_exact().unwrap(), &rat(120, 27));
    }

    #[test]
    fn f4_classical_value() {
        let ctx = QContext::classical(64);
        let v = superfactorial(Family::F4, 4, &ctx);
        // 1! 5! 7! 11! / 2^12
        let expect = rat(1, 4096)
            * crate::scalar::factorial(5)
            * crate::scalar::factorial(7)
            * crate::scalar::factorial(11);
        assert_eq!(v.as_exact().unwrap(), &expect);
    }

    #[test]
    fn argument_count_is_root_count() {
        for (f, r) in [
            (Family::A, 5),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::F4, 4),
            (Family::G2, 2),
            (Family::E7, 7),
        ] {
            let args = superfactorial_args(f, r);
            let n = lie::coxeter_number(f, r) as usize;
            assert_eq!(args.len(), r * n / 2, "{:?}", f);
        }
    }
}
