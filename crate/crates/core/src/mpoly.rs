//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! The variable set is fixed: t1, t2, m, z1, z2, x, y, a1, a2. A polynomial
//! is a map from exponent vectors to nonzero rational coefficients, kept in
//! graded-lexicographic term order for canonical serialization.

use crate::rational::{rat_gcd, rat_string, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 9;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Var {
    T1 = 0,
    T2 = 1,
    M = 2,
    Z1 = 3,
    Z2 = 4,
    X = 5,
    Y = 6,
    A1 = 7,
    A2 = 8,
}

pub const ALL_VARS: [Var; NVARS] = [
    Var::T1,
    Var::T2,
    Var::M,
    Var::Z1,
    Var::Z2,
    Var::X,
    Var::Y,
    Var::A1,
    Var::A2,
];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T1 => "t1",
            Var::T2 => "t2",
            Var::M => "m",
            Var::Z1 => "z1",
            Var::Z2 => "z2",
            Var::X => "x",
            Var::Y => "y",
            Var::A1 => "a1",
            Var::A2 => "a2",
        }
    }
}

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn unit() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Mono(e)
    }

    /// Componentwise quotient, if divisible.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(e))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].min(other.0[i]);
        }
        Mono(e)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; invariant: no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Mono::unit(), r);
        }
        MPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(crate::rational::rat_i(n))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Rat::one());
        MPoly { terms }
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::unit()))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Mono::unit()).cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_add(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.insert_add(*m, c.clone());
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, s: &Rat) -> MPoly {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut r = MPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m.0[v as usize])
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.0[v as usize] > 0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Substitute a polynomial for a variable.
    pub fn subst(&self, v: Var, image: &MPoly) -> MPoly {
        let vi = v as usize;
        let maxdeg = self.degree_in(v);
        // image powers, computed once
        let mut powers: Vec<MPoly> = Vec::with_capacity(maxdeg as usize + 1);
        powers.push(MPoly::one());
        for _ in 0..maxdeg {
            powers.push(powers.last().unwrap().mul(image));
        }
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[vi];
            let mut rest = *m;
            rest.0[vi] = 0;
            let part = powers[e as usize].mul(&MPoly::monomial(rest, c.clone()));
            r = r.add(&part);
        }
        r
    }

    pub fn subst_rat(&self, v: Var, value: &Rat) -> MPoly {
        self.subst(v, &MPoly::constant(value.clone()))
    }

    /// Evaluate fully at rational values (missing variables default needed: all used vars must be given).
    pub fn eval(&self, values: &[(Var, Rat)]) -> Rat {
        let mut p = self.clone();
        for (v, r) in values {
            p = p.subst_rat(*v, r);
        }
        p.as_constant().expect("eval left free variables")
    }

    /// Coefficients as a dense univariate list in `v` (other vars inside).
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        let vi = v as usize;
        for (m, c) in &self.terms {
            let e = m.0[vi] as usize;
            let mut rest = *m;
            rest.0[vi] = 0;
            out[e].insert_add(rest, c.clone());
        }
        out
    }

    /// Rebuild from dense univariate coefficients in `v`.
    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let shift = {
                let mut m = [0u16; NVARS];
                m[v as usize] = e as u16;
                MPoly::monomial(Mono(m), Rat::one())
            };
            r = r.add(&c.mul(&shift));
        }
        r
    }

    /// Exact multivariate division; `None` if not divisible.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = MPoly::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let t = MPoly::monomial(qm, qc);
            q = q.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(q)
    }

    /// Rational content: gcd of coefficients, signed so the leading
    /// coefficient of `self / content` is positive.
    pub fn content(&self) -> Rat {
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, c);
        }
        if let Some((_, lc)) = self.leading() {
            if lc.is_negative() {
                g = -g;
            }
        }
        g
    }

    /// Monomial content (componentwise min of exponents over all terms).
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::unit(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    pub fn vars_used(&self) -> Vec<Var> {
        ALL_VARS
            .iter()
            .copied()
            .filter(|&v| self.uses_var(v))
            .collect()
    }
}

impl std::ops::Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        MPoly::add(&self, &rhs)
    }
}

impl std::ops::Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        MPoly::sub(&self, &rhs)
    }
}

impl std::ops::Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        MPoly::mul(&self, &rhs)
    }
}

impl std::ops::Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(&self)
    }
}

impl num_traits::Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

impl num_traits::One for MPoly {
    fn one() -> Self {
        MPoly::one()
    }
    fn is_one(&self) -> bool {
        MPoly::is_one(self)
    }
}

/// Primitive part: divide out rational content (result has content 1, positive leading coefficient).
fn primitive(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return MPoly::zero();
    }
    let c = p.content();
    p.scale(&c.recip())
}

/// Pseudo-remainder of `a` by `b` in variable `v`: lc(b)^(da-db+1) * a  mod b.
fn pseudo_rem(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let db = b.degree_in(v) as i64;
    let bc = b.coeffs_in(v);
    let lb = bc.last().unwrap().clone();
    let mut r = a.clone();
    loop {
        let dr = r.degree_in(v) as i64;
        if r.is_zero() || dr < db {
            return r;
        }
        let rc = r.coeffs_in(v);
        let lr = rc.last().unwrap().clone();
        // r <- lb * r - lr * v^(dr-db) * b
        let shift = {
            let mut m = [0u16; NVARS];
            m[v as usize] = (dr - db) as u16;
            MPoly::monomial(Mono(m), Rat::one())
        };
        r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
    }
}

/// Multivariate polynomial gcd (primitive, positive leading coefficient).
/// Euclidean pseudo-remainder sequence with recursive content removal;
/// instance sizes in this crate are tiny, so no subresultant tricks.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return primitive(b);
    }
    if b.is_zero() {
        return primitive(a);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = a.div_exact(&MPoly::monomial(ma, Rat::one())).unwrap();
    let b1 = b.div_exact(&MPoly::monomial(mb, Rat::one())).unwrap();
    let g = gcd_inner(&primitive(&a1), &primitive(&b1));
    g.mul(&MPoly::monomial(mg, Rat::one()))
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    let vars: Vec<Var> = ALL_VARS
        .iter()
        .copied()
        .filter(|&v| a.uses_var(v) || b.uses_var(v))
        .collect();
    if vars.is_empty() {
        return MPoly::one();
    }
    let v = vars[0];
    if !a.uses_var(v) {
        // a is content-like with respect to v: gcd(a, cont_v(b))
        let bc = b.coeffs_in(v);
        let mut g = a.clone();
        for c in &bc {
            if g.is_one() {
                break;
            }
            g = mpoly_gcd(&g, c);
        }
        return g;
    }
    if !b.uses_var(v) {
        return gcd_inner(b, a);
    }
    // contents and primitive parts with respect to v
    let cont = |p: &MPoly| -> MPoly {
        let cs = p.coeffs_in(v);
        let mut g = MPoly::zero();
        for c in &cs {
            if c.is_zero() {
                continue;
            }
            g = mpoly_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    };
    let ca = cont(a);
    let cb = cont(b);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let cg = mpoly_gcd(&ca, &cb);

    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            MPoly::zero()
        } else {
            // strip content of the remainder to keep sizes down
            let rc = cont(&r);
            primitive(&r.div_exact(&rc).unwrap())
        };
    }
    let pg = if f.degree_in(v) == 0 {
        MPoly::one()
    } else {
        primitive(&f.div_exact(&cont(&f)).unwrap())
    };
    cg.mul(&pg)
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending graded-lex
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for v in ALL_VARS {
                let e = m.0[v as usize];
                if e == 1 {
                    factors.push(v.name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v.name(), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", rat_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rat_string(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}
