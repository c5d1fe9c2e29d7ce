//! Canonical fractions of Laurent polynomials and the domain newtypes
//! `RatFunc` (ℚ(A)), `MultiRat` (ℚ(A, λ̄)) and `ExpCoeff` (rational fractions
//! in `A` and the formal exponentials `X_e`).
//!
//! Canonical form: the denominator is a genuine polynomial with minimal
//! exponent 0 in every variable, its smallest monomial has positive
//! coefficient, numerator and denominator have trivial polynomial gcd and
//! coprime integer contents. Equality of canonical forms is structural.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use num_traits::Signed;

use super::poly::{Mono, Var, XPoly};
use crate::error::RingError;

/// A canonical fraction `num / den` of Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Frac {
    num: XPoly,
    den: XPoly,
}

impl Frac {
    pub fn zero() -> Self {
        Frac {
            num: XPoly::zero(),
            den: XPoly::one(),
        }
    }

    pub fn one() -> Self {
        Frac {
            num: XPoly::one(),
            den: XPoly::one(),
        }
    }

    pub fn from_poly(p: XPoly) -> Self {
        Frac {
            num: p,
            den: XPoly::one(),
        }
    }

    pub fn int(c: i64) -> Self {
        Frac::from_poly(XPoly::int(c))
    }

    /// Build `num/den` in canonical form. `den` must be nonzero.
    pub fn new(num: XPoly, den: XPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: XPoly, den: XPoly) -> Self {
        if num.is_zero() {
            return Frac::zero();
        }
        if den.is_one() {
            return Frac {
                num,
                den: XPoly::one(),
            };
        }
        // move denominator units (monomial factors) into the numerator
        let mut unit = Mono::one();
        for v in den.vars() {
            let m = den.min_exp(v);
            if m != 0 {
                unit = unit.mul(&Mono::var(v, -m));
            }
        }
        let den = den.mul_mono(&unit, &BigInt::one());
        let num = num.mul_mono(&unit, &BigInt::one());
        // split numerator unit so gcd runs on genuine polynomials
        let mut num_unit = Mono::one();
        for v in num.vars() {
            let m = num.min_exp(v);
            if m != 0 {
                num_unit = num_unit.mul(&Mono::var(v, m));
            }
        }
        let num0 = num.mul_mono(&num_unit.inv(), &BigInt::one());
        let g = XPoly::gcd(&num0, &den);
        let mut num0 = num0.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // coprime integer contents
        let cn = num0.int_content();
        let cd = den.int_content();
        let cg = num_integer::Integer::gcd(&cn, &cd);
        if !cg.is_one() {
            num0 = num0.div_int_exact(&cg);
            den = den.div_int_exact(&cg);
        }
        // denominator sign: smallest monomial positive
        if den.lead_low_sign() < 0 {
            num0 = num0.neg();
            den = den.neg();
        }
        // dividing by g may reintroduce monomial units in den; clear again
        let mut extra = Mono::one();
        for v in den.vars() {
            let m = den.min_exp(v);
            if m != 0 {
                extra = extra.mul(&Mono::var(v, -m));
            }
        }
        let den = den.mul_mono(&extra, &BigInt::one());
        let num_unit = num_unit.mul(&extra.inv());
        let num = num0.mul_mono(&num_unit, &BigInt::one());
        Frac { num, den }
    }

    pub fn num(&self) -> &XPoly {
        &self.num
    }

    pub fn den(&self) -> &XPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn add(&self, other: &Frac) -> Frac {
        if self.den == other.den {
            return Frac::canonical(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Frac::canonical(num, den)
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        if self.den == other.den {
            return Frac::canonical(self.num.sub(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Frac::canonical(num, den)
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        Frac::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Frac) -> Result<Frac, RingError> {
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Frac::canonical(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Frac, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Frac::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> Result<Frac, RingError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = Frac::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Substitute `X_e ↦ A^{color(e)}`; errors if the denominator vanishes.
    pub fn subst_x_to_a(&self, color: &dyn Fn(u32) -> Option<i64>) -> Result<Frac, RingError> {
        let den = self.den.subst_x_to_a(color);
        if den.is_zero() {
            return Err(RingError::VanishingDenominator);
        }
        let num = self.num.subst_x_to_a(color);
        Ok(Frac::canonical(num, den))
    }

    /// Substitute `X_e ↦ A^k · X_e`.
    pub fn subst_x_scale(&self, e: u32, k: i64) -> Frac {
        Frac::canonical(self.num.subst_x_scale(e, k), self.den.subst_x_scale(e, k))
    }

    pub fn mirror_a(&self) -> Frac {
        Frac::canonical(self.num.mirror_a(), self.den.mirror_a())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        for v in self.den.vars() {
            if let Err(pos) = vs.binary_search(&v) {
                vs.insert(pos, v);
            }
        }
        vs
    }

    pub fn num_terms(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! frac_newtype {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
        pub struct $name(pub Frac);

        impl $name {
            pub fn zero() -> Self {
                $name(Frac::zero())
            }
            pub fn one() -> Self {
                $name(Frac::one())
            }
            pub fn int(c: i64) -> Self {
                $name(Frac::int(c))
            }
            pub fn from_poly(p: XPoly) -> Self {
                $name(Frac::from_poly(p))
            }
            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }
            pub fn is_one(&self) -> bool {
                self.0.is_one()
            }
            pub fn add(&self, other: &Self) -> Self {
                $name(self.0.add(&other.0))
            }
            pub fn sub(&self, other: &Self) -> Self {
                $name(self.0.sub(&other.0))
            }
            pub fn neg(&self) -> Self {
                $name(self.0.neg())
            }
            pub fn mul(&self, other: &Self) -> Self {
                $name(self.0.mul(&other.0))
            }
            pub fn div(&self, other: &Self) -> Result<Self, RingError> {
                Ok($name(self.0.div(&other.0)?))
            }
            pub fn inv(&self) -> Result<Self, RingError> {
                Ok($name(self.0.inv()?))
            }
            pub fn pow(&self, n: i32) -> Result<Self, RingError> {
                Ok($name(self.0.pow(n)?))
            }
            pub fn num(&self) -> &XPoly {
                self.0.num()
            }
            pub fn den(&self) -> &XPoly {
                self.0.den()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

frac_newtype!(
    /// Element of ℚ(A): a canonical fraction involving only the variable `A`.
    RatFunc
);

frac_newtype!(
    /// Element of ℚ(A, λ̄): canonical fraction in `A` and the symbols `λ_i`.
    MultiRat
);

frac_newtype!(
    /// Operator coefficient: canonical fraction in `A` and the formal
    /// exponentials `X_e`, with `λ` symbols allowed for localized runs.
    ExpCoeff
);

impl RatFunc {
    /// The quantum integer `{n} = A^{2n} − A^{−2n}`.
    pub fn quantum(n: i64) -> RatFunc {
        RatFunc::from_poly(quantum_poly(n))
    }

    pub fn a_pow(k: i64) -> RatFunc {
        RatFunc::from_poly(XPoly::a_pow(k))
    }

    /// Promote into the λ-field.
    pub fn to_multi(&self) -> MultiRat {
        MultiRat(self.0.clone())
    }

    /// Promote into operator-coefficient land.
    pub fn to_exp(&self) -> ExpCoeff {
        ExpCoeff(self.0.clone())
    }

    pub fn mirror_a(&self) -> RatFunc {
        RatFunc(self.0.mirror_a())
    }
}

impl MultiRat {
    pub fn lam(i: u32) -> MultiRat {
        MultiRat(Frac::from_poly(XPoly::lam(i)))
    }

    pub fn a_pow(k: i64) -> MultiRat {
        MultiRat(Frac::from_poly(XPoly::a_pow(k)))
    }

    /// Downcast to ℚ(A) when no λ symbol occurs.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        if self
            .0
            .vars()
            .iter()
            .any(|v| matches!(v, Var::Lam(_)))
        {
            None
        } else {
            Some(RatFunc(self.0.clone()))
        }
    }

    pub fn to_exp(&self) -> ExpCoeff {
        ExpCoeff(self.0.clone())
    }
}

impl ExpCoeff {
    pub fn a_pow(k: i64) -> ExpCoeff {
        ExpCoeff(Frac::from_poly(XPoly::a_pow(k)))
    }

    pub fn x_pow(e: u32, k: i64) -> ExpCoeff {
        ExpCoeff(Frac::from_poly(XPoly::x_pow(e, k)))
    }

    /// `{a·c_e/…}`-style bracket: the quantum integer of the affine form
    /// `k + Σ coeff_i·c_{e_i}` written with integer exponents,
    /// `A^{2k}·ΠX^{2a_i} − A^{−2k}·ΠX^{−2a_i}`.
    pub fn quantum_affine(k: i64, terms: &[(u32, i64)]) -> ExpCoeff {
        let mut pos = Mono::var(Var::A, 2 * k);
        let mut neg = Mono::var(Var::A, -2 * k);
        for &(e, a) in terms {
            pos = pos.mul(&Mono::var(Var::X(e), 2 * a));
            neg = neg.mul(&Mono::var(Var::X(e), -2 * a));
        }
        let p = XPoly::monomial(BigInt::one(), pos).sub(&XPoly::monomial(BigInt::one(), neg));
        ExpCoeff::from_poly(p)
    }

    /// Evaluate `X_e ↦ A^{c_e}`; all edge variables must be covered by `color`.
    pub fn eval(&self, color: &dyn Fn(u32) -> Option<i64>) -> Result<MultiRat, RingError> {
        Ok(MultiRat(self.0.subst_x_to_a(color)?))
    }

    /// Re-center: substitute `X_e ↦ A^k·X_e`, so that
    /// `shift(F, e, k).eval(c) == F.eval(c + k·δ_e)`.
    pub fn shift(&self, e: u32, k: i64) -> ExpCoeff {
        ExpCoeff(self.0.subst_x_scale(e, k))
    }

    pub fn mirror_a(&self) -> ExpCoeff {
        ExpCoeff(self.0.mirror_a())
    }

    pub fn scale_multi(&self, c: &MultiRat) -> ExpCoeff {
        ExpCoeff(self.0.mul(&c.0))
    }
}

/// `{n} = A^{2n} − A^{−2n}` as a Laurent polynomial.
pub fn quantum_poly(n: i64) -> XPoly {
    XPoly::a_pow(2 * n).sub(&XPoly::a_pow(-2 * n))
}

/// Loop value `d = −A² − A^{−2}`.
pub fn loop_value() -> RatFunc {
    RatFunc::from_poly(XPoly::a_pow(2).neg().sub(&XPoly::a_pow(-2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn quantum_integer_values() {
        assert!(RatFunc::quantum(0).is_zero());
        let q1 = RatFunc::quantum(1);
        assert_eq!(q1.num(), &quantum_poly(1));
        let qm2 = RatFunc::quantum(-2);
        assert_eq!(qm2, RatFunc::quantum(2).neg());
        for n in 1..=12 {
            assert!(!RatFunc::quantum(n).is_zero());
        }
    }

    #[test]
    fn field_division_cancels() {
        // (A^2 - A^-2)/(A - A^-1) = A + A^-1
        let n = RatFunc::from_poly(XPoly::a_pow(2).sub(&XPoly::a_pow(-2)));
        let d = RatFunc::from_poly(XPoly::a_pow(1).sub(&XPoly::a_pow(-1)));
        let q = n.div(&d).unwrap();
        let expect = RatFunc::from_poly(XPoly::a_pow(1).add(&XPoly::a_pow(-1)));
        assert_eq!(q, expect);
        // {2}/{1} = A^2 + A^-2
        let q2 = RatFunc::quantum(2).div(&RatFunc::quantum(1)).unwrap();
        assert_eq!(
            q2,
            RatFunc::from_poly(XPoly::a_pow(2).add(&XPoly::a_pow(-2)))
        );
    }

    #[test]
    fn canonical_equality_matches_cross_multiplication() {
        let mut rng = StdRng::seed_from_u64(7);
        let rand_poly = |rng: &mut StdRng| {
            let mut p = XPoly::zero();
            for _ in 0..4 {
                let e = rng.gen_range(-3..4);
                let c = rng.gen_range(-5..6);
                p = p.add(&XPoly::monomial(
                    BigInt::from(c),
                    Mono::var(Var::A, e),
                ));
            }
            p
        };
        for _ in 0..60 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let c = rand_poly(&mut rng);
            let d = rand_poly(&mut rng);
            if b.is_zero() || d.is_zero() {
                continue;
            }
            let f1 = Frac::new(a.clone(), b.clone()).unwrap();
            let f2 = Frac::new(c.clone(), d.clone()).unwrap();
            let cross = a.mul(&d).sub(&c.mul(&b)).is_zero();
            assert_eq!(f1 == f2, cross);
        }
    }

    #[test]
    fn add_inverse_is_zero() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let n = XPoly::int(rng.gen_range(-9..10)).mul(&XPoly::a_pow(rng.gen_range(-2..3)));
            let d = XPoly::a_pow(rng.gen_range(-2..3)).add(&XPoly::int(rng.gen_range(1..5)));
            let x = Frac::new(n, d).unwrap();
            assert!(x.add(&x.neg()).is_zero());
        }
    }

    #[test]
    fn expcoeff_eval_and_shift() {
        // F = X0^2 at c0=3 is A^6
        let f = ExpCoeff::x_pow(0, 2);
        let v = f.eval(&|_| Some(3)).unwrap();
        assert_eq!(v, MultiRat(Frac::from_poly(XPoly::a_pow(6))));

        // F = A^2 X0^2 - A^-2 X0^-2 encodes {c0+1}; at c0=1 gives A^4 - A^-4
        let f = ExpCoeff::quantum_affine(1, &[(0, 1)]);
        let v = f.eval(&|_| Some(1)).unwrap();
        assert_eq!(v, MultiRat(Frac::from_poly(quantum_poly(2))));

        // 1/{c0} at c0 = 0 has vanishing denominator
        let f = ExpCoeff::one()
            .div(&ExpCoeff::quantum_affine(0, &[(0, 1)]))
            .unwrap();
        assert!(matches!(
            f.eval(&|_| Some(0)),
            Err(RingError::VanishingDenominator)
        ));

        // shift-eval compatibility on random data
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let f = ExpCoeff::quantum_affine(rng.gen_range(-2..3), &[(0, 1), (1, -1)])
                .add(&ExpCoeff::x_pow(0, rng.gen_range(-2..3)));
            let k = rng.gen_range(-3..4i64);
            let c0 = rng.gen_range(-3..4i64);
            let c1 = rng.gen_range(-3..4i64);
            let lhs = f.shift(0, k).eval(&|e| Some(if e == 0 { c0 } else { c1 }));
            let rhs = f.eval(&|e| Some(if e == 0 { c0 + k } else { c1 }));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                _ => panic!("shift/eval disagree on definedness"),
            }
        }
    }

    #[test]
    fn cancelling_sum_is_zero_and_random_eval_agrees() {
        let mut rng = StdRng::seed_from_u64(5);
        // build a 5-monomial sum then subtract it term by term
        let mut terms = Vec::new();
        for _ in 0..5 {
            terms.push(ExpCoeff::from_poly(XPoly::monomial(
                BigInt::from(rng.gen_range(1..5)),
                Mono::var(Var::X(0), rng.gen_range(-2..3))
                    .mul(&Mono::var(Var::A, rng.gen_range(-2..3))),
            )));
        }
        let mut s = ExpCoeff::zero();
        for t in &terms {
            s = s.add(t);
        }
        for t in &terms {
            s = s.sub(t);
        }
        assert!(s.is_zero());
        // probabilistic cross-check of the canonicalizer: evaluate at integer
        // colorings and rational A values
        for seed in 0..3 {
            let c = 1 + seed;
            let evald = ExpCoeff::zero().eval(&|_| Some(c)).unwrap();
            for denom in 2..4i64 {
                let v = evald.num().eval_rational(&|_| {
                    BigRational::new(BigInt::from(3), BigInt::from(denom))
                });
                assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn multirat_lambda_arithmetic() {
        let l = MultiRat::lam(1);
        let x = l.mul(&l).sub(&MultiRat::one());
        let y = l.sub(&MultiRat::one());
        let q = x.div(&y).unwrap();
        assert_eq!(q, l.add(&MultiRat::one()));
        assert!(q.as_ratfunc().is_none());
        assert!(MultiRat::int(3).as_ratfunc().is_some());
    }
}
