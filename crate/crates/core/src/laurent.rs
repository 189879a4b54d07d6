//! Laurent polynomials with bounded exponent support, in one or two
//! auxiliary variables. These carry the x/y/z bookkeeping of vertex
//! operator traces and tangent-space characters.

use crate::rational::{rat_string, Rat};
use crate::series::Coeff;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in one auxiliary variable.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e: i64, c: Rat) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(e, c);
        }
        LaurentPoly { terms: t }
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, e: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// Keep only exponents within [lo, hi].
    pub fn window(&self, lo: i64, hi: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e >= lo && **e <= hi)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Substitute the variable by its inverse.
    pub fn invert_var(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiply by a single term c * v^e.
    pub fn mul_term(&self, e: i64, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::new();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect(),
        }
    }
}

impl LaurentPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentPoly::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl std::ops::Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(&self, &rhs)
    }
}

impl std::ops::Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(&self, &rhs)
    }
}

impl std::ops::Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(&self, &rhs)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(&self)
    }
}

impl num_traits::Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::new()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl num_traits::One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::monomial(0, Rat::from_integer(1.into()))
    }
}

impl Coeff for LaurentPoly {
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return LaurentPoly::new();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        LaurentPoly::monomial(0, r.clone())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            use num_traits::Signed;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", e),
            };
            use num_traits::One;
            if mono.is_empty() {
                write!(f, "{}", rat_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", rat_string(&mag), mono)?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in two auxiliary variables (z1, z2) or (x, y).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent2 {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl Laurent2 {
    pub fn new() -> Self {
        Laurent2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e1: i64, e2: i64, c: Rat) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((e1, e2), c);
        }
        Laurent2 { terms: t }
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> Rat {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, e1: i64, e2: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((e1, e2)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(e1, e2));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of (second variable)^0, as a Laurent polynomial in the first.
    pub fn extract_var2_zero(&self) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for ((e1, e2), c) in &self.terms {
            if *e2 == 0 {
                out.add_term(*e1, c.clone());
            }
        }
        out
    }

    /// Substitute first variable -> (second variable)^{-1}: monomial
    /// z1^a z2^b becomes z2^{b-a}.
    pub fn subst_var1_inv_var2(&self) -> LaurentPoly {
        let mut out = LaurentPoly::new();
        for ((e1, e2), c) in &self.terms {
            out.add_term(e2 - e1, c.clone());
        }
        out
    }

    /// Keep terms with both exponents within the window.
    pub fn window(&self, lo: i64, hi: i64) -> Laurent2 {
        Laurent2 {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| *a >= lo && *a <= hi && *b >= lo && *b <= hi)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Keep terms whose first-variable exponent lies in [lo1, hi1] and
    /// second-variable exponent in [lo2, hi2].
    pub fn window2(&self, lo1: i64, hi1: i64, lo2: i64, hi2: i64) -> Laurent2 {
        Laurent2 {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| *a >= lo1 && *a <= hi1 && *b >= lo2 && *b <= hi2)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }
}

impl Laurent2 {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(*a, *b, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Laurent2::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                r.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        r
    }

    pub fn neg(&self) -> Self {
        Laurent2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn one() -> Self {
        Laurent2::monomial(0, 0, Rat::from_integer(1.into()))
    }
}

impl std::ops::Add for Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: Laurent2) -> Laurent2 {
        Laurent2::add(&self, &rhs)
    }
}

impl std::ops::Sub for Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: Laurent2) -> Laurent2 {
        Laurent2::sub(&self, &rhs)
    }
}

impl std::ops::Mul for Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: Laurent2) -> Laurent2 {
        Laurent2::mul(&self, &rhs)
    }
}

impl std::ops::Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        Laurent2::neg(&self)
    }
}

impl num_traits::Zero for Laurent2 {
    fn zero() -> Self {
        Laurent2::new()
    }
    fn is_zero(&self) -> bool {
        Laurent2::is_zero(self)
    }
}

impl num_traits::One for Laurent2 {
    fn one() -> Self {
        Laurent2::one()
    }
}

impl Coeff for Laurent2 {
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Laurent2::new();
        }
        Laurent2 {
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        Laurent2::monomial(0, 0, r.clone())
    }
}
