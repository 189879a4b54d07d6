//! Rational functions: quotients of multivariate polynomials, gcd-reduced.
//!
//! Canonical form: numerator and denominator coprime, denominator primitive
//! with positive leading coefficient. Equality on canonical forms is then
//! structural and agrees with cross-multiplication.

use crate::mpoly::{mpoly_gcd, MPoly, Var};
use crate::rational::Rat;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        RatFun {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFun {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        RatFun::from_poly(MPoly::constant(r))
    }

    pub fn int(n: i64) -> Self {
        RatFun::from_poly(MPoly::int(n))
    }

    pub fn var(v: Var) -> Self {
        RatFun::from_poly(MPoly::var(v))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one();
            return;
        }
        let g = mpoly_gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        // denominator primitive with positive leading coefficient
        let c = self.den.content();
        if !c.is_zero() {
            let cinv = c.recip();
            self.den = self.den.scale(&cinv);
            self.num = self.num.scale(&cinv);
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFun) -> RatFun {
        assert!(!other.is_zero(), "division by zero rational function");
        RatFun::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, s: &Rat) -> RatFun {
        RatFun::new(self.num.scale(s), self.den.clone())
    }

    /// Cross-multiplication equality check; agrees with `==` on canonical
    /// forms and is kept as the specified semantic test.
    pub fn eq_cross(&self, other: &RatFun) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// The underlying polynomial, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<MPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    /// Substitute a rational value for a variable; the specialized
    /// denominator must not vanish.
    pub fn subst_rat(&self, v: Var, value: &Rat) -> RatFun {
        let num = self.num.subst_rat(v, value);
        let den = self.den.subst_rat(v, value);
        assert!(!den.is_zero(), "specialization pole in denominator");
        RatFun::new(num, den)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() <= 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
