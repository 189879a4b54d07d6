//! The Fock space as polynomials in power sums p_1, p_2, ... over the
//! fraction field in t1, t2, with Nakajima operators, the equivariant inner
//! product, and the Jack/Schur bases.
//!
//! A `FockElement` is a finite linear combination of power-sum monomials
//! p_mu with rational-function coefficients; the degree-n component has
//! dimension p(n).

use crate::mpoly::{MPoly, Var};
use crate::partitions::{enumerate, Partition};
use crate::ratfun::RatFun;
use crate::rational::{rat_i, sign_pow, Rat};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;
use std::sync::OnceLock;

#[derive(Clone, PartialEq, Debug, Default)]
pub struct FockElement {
    terms: BTreeMap<Partition, RatFun>,
}

impl FockElement {
    pub fn zero() -> Self {
        FockElement {
            terms: BTreeMap::new(),
        }
    }

    /// |0>, the empty power-sum monomial with coefficient 1.
    pub fn vacuum() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), RatFun::one());
        FockElement { terms }
    }

    pub fn monomial(mu: Partition, c: RatFun) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        FockElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFun {
        self.terms.get(mu).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, mu: Partition, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn add(&self, other: &FockElement) -> FockElement {
        let mut r = self.clone();
        for (mu, c) in &other.terms {
            r.add_term(mu.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &FockElement) -> FockElement {
        self.add(&other.scale(&RatFun::int(-1)))
    }

    pub fn scale(&self, s: &RatFun) -> FockElement {
        if s.is_zero() {
            return FockElement::zero();
        }
        FockElement {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|mu| mu.size()).max().unwrap_or(0)
    }

    /// Specialize t1, t2 to rational values; every coefficient must remain finite.
    pub fn specialize_t(&self, t1: &Rat, t2: &Rat) -> BTreeMap<Partition, Rat> {
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            let v = c
                .subst_rat(Var::T1, t1)
                .subst_rat(Var::T2, t2)
                .as_constant()
                .expect("specialization left free variables");
            if !v.is_zero() {
                out.insert(mu.clone(), v);
            }
        }
        out
    }

    /// JSON form: list of (partition, coefficient-string) pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(mu, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::String(mu.to_string()),
                        serde_json::Value::String(c.to_string()),
                    ])
                })
                .collect(),
        )
    }
}

/// z(mu) = (prod of parts) * (prod of multiplicity factorials).
pub fn zaut(mu: &Partition) -> Rat {
    let mut v = Rat::one();
    for &p in mu.parts() {
        v *= rat_i(p as i64);
    }
    for (_, m) in mu.part_multiplicities() {
        for k in 2..=m as i64 {
            v *= rat_i(k);
        }
    }
    v
}

fn t1t2() -> MPoly {
    MPoly::var(Var::T1).mul(&MPoly::var(Var::T2))
}

/// <p_mu, p_mu> = (-1)^(|mu| - l(mu)) z(mu) / (t1 t2)^l(mu).
pub fn pairing_norm(mu: &Partition) -> RatFun {
    let sign = sign_pow((mu.size() as u64) - (mu.len() as u64));
    let num = MPoly::constant(zaut(mu) * sign);
    let den = t1t2().pow(mu.len() as u32);
    RatFun::new(num, den)
}

/// The deformed inner product; bilinear and diagonal on the p-basis.
pub fn inner(u: &FockElement, v: &FockElement) -> RatFun {
    let mut acc = RatFun::zero();
    for (mu, cu) in u.terms() {
        let cv = v.coeff(mu);
        if cv.is_zero() {
            continue;
        }
        acc = acc.add(&cu.mul(&cv).mul(&pairing_norm(mu)));
    }
    acc
}

/// Multiplication by p_k: the Nakajima creation operator alpha_{-k}.
pub fn create(k: u32, v: &FockElement) -> FockElement {
    assert!(k >= 1, "creation index must be positive");
    let mut out = FockElement::zero();
    for (mu, c) in v.terms() {
        let mut parts = mu.parts().to_vec();
        parts.push(k);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.add_term(Partition::new(parts), c.clone());
    }
    out
}

/// Plain partial derivative with respect to p_k.
pub fn deriv_pk(k: u32, v: &FockElement) -> FockElement {
    assert!(k >= 1);
    let mut out = FockElement::zero();
    for (mu, c) in v.terms() {
        let mult = mu.multiplicity(k);
        if mult == 0 {
            continue;
        }
        let mut parts = mu.parts().to_vec();
        let pos = parts.iter().position(|&p| p == k).unwrap();
        parts.remove(pos);
        out.add_term(Partition::new(parts), c.scale(&rat_i(mult as i64)));
    }
    out
}

/// The Nakajima annihilation operator alpha_k = (k/(t1 t2)) d/dp_k.
pub fn annihilate(k: u32, v: &FockElement) -> FockElement {
    assert!(k >= 1, "annihilation index must be positive");
    let factor = RatFun::new(MPoly::int(k as i64), t1t2());
    deriv_pk(k, v).scale(&factor)
}

/// Irreducible symmetric-group character chi^la_mu, by the
/// Murnaghan-Nakayama rule on beta-numbers, memoized.
pub fn character(la: &Partition, mu: &Partition) -> Rat {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), Rat>>> = OnceLock::new();
    assert_eq!(la.size(), mu.size(), "character needs equal sizes");
    fn go(
        la: &Partition,
        mu_parts: &[u32],
        cache: &Mutex<HashMap<(Partition, Partition), Rat>>,
    ) -> Rat {
        if mu_parts.is_empty() {
            return if la.is_empty() {
                Rat::one()
            } else {
                Rat::zero()
            };
        }
        let key = (la.clone(), Partition::new(mu_parts.to_vec()));
        if let Some(v) = cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let r = mu_parts[0] as i64;
        let rest = &mu_parts[1..];
        let ell = la.len();
        // beta numbers la_i + (ell - i), strictly decreasing
        let beta: Vec<i64> = (1..=ell as i64)
            .map(|i| la.part(i as u32) as i64 + ell as i64 - i)
            .collect();
        let mut total = Rat::zero();
        for (i, &b) in beta.iter().enumerate() {
            let nb = b - r;
            if nb < 0 || beta.contains(&nb) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > nb && x < b).count();
            let sign = sign_pow(between as u64);
            let mut newbeta: Vec<i64> = beta
                .iter()
                .enumerate()
                .map(|(j, &x)| if j == i { nb } else { x })
                .collect();
            newbeta.sort_unstable_by(|a, b| b.cmp(a));
            let newla = Partition::new(
                newbeta
                    .iter()
                    .enumerate()
                    .map(|(j, &x)| (x - (ell as i64 - 1 - j as i64)) as u32)
                    .collect(),
            );
            total += sign * go(&newla, rest, cache);
        }
        cache.lock().unwrap().insert(key, total.clone());
        total
    }
    go(
        la,
        mu.parts(),
        CACHE.get_or_init(|| Mutex::new(HashMap::new())),
    )
}

/// Schur polynomial s_mu in the power-sum basis (rational coefficients).
pub fn schur(mu: &Partition) -> FockElement {
    let n = mu.size();
    let mut out = FockElement::zero();
    for la in enumerate(n) {
        let chi = character(mu, &la);
        if chi.is_zero() {
            continue;
        }
        out.add_term(la.clone(), RatFun::from_rat(chi / zaut(&la)));
    }
    out
}

/// p_mu expanded in the Schur basis: p_mu = sum_la chi^la_mu s_la.
pub fn power_sum_in_schur(mu: &Partition) -> Vec<(Partition, Rat)> {
    let n = mu.size();
    enumerate(n)
        .into_iter()
        .filter_map(|la| {
            let chi = character(&la, mu);
            if chi.is_zero() {
                None
            } else {
                Some((la, chi))
            }
        })
        .collect()
}

/// Dominance-compatible total order: compare partial-sum vectors
/// lexicographically. If la is dominated by mu then la sorts before mu.
fn partial_sum_key(mu: &Partition) -> Vec<u32> {
    let mut acc = 0;
    mu.parts()
        .iter()
        .map(|&p| {
            acc += p;
            acc
        })
        .collect()
}

/// p_n -> t1 p_n on every power-sum monomial: p_mu picks up t1^{l(mu)}.
fn twist_by_t1(v: &FockElement) -> FockElement {
    let t1 = MPoly::var(Var::T1);
    let mut out = FockElement::zero();
    for (mu, c) in v.terms() {
        let factor = RatFun::from_poly(t1.pow(mu.len() as u32));
        out.add_term(mu.clone(), c.mul(&factor));
    }
    out
}

/// The integral-form Jack polynomial basis of a fixed degree, built by
/// Gram-Schmidt against the deformed inner product in a dominance-compatible
/// order, then normalized so that <J_mu, p_1^n> = n!.
///
/// The starting basis is the Schur family with p_n replaced by t1 p_n: the
/// integral forms are unitriangular against the correspondingly twisted
/// monomial basis, so orthogonalizing in dominance order reproduces them.
fn jack_degree(n: u32) -> BTreeMap<Partition, FockElement> {
    let mut order = enumerate(n);
    order.sort_by_key(partial_sum_key);
    let mut basis: Vec<(Partition, FockElement, RatFun)> = Vec::new();
    for mu in &order {
        let mut v = twist_by_t1(&schur(mu));
        for (_, jl, norm) in &basis {
            let c = inner(&v, jl).div(norm);
            if !c.is_zero() {
                v = v.sub(&jl.scale(&c));
            }
        }
        let norm = inner(&v, &v);
        assert!(
            !norm.is_zero(),
            "degenerate Gram matrix in Jack construction"
        );
        basis.push((mu.clone(), v, norm));
    }
    // normalization <J_mu, p_1^n> = n!
    let p1n = FockElement::monomial(Partition::new(vec![1; n as usize]), RatFun::one());
    let mut nfact = Rat::one();
    for k in 2..=n as i64 {
        nfact *= rat_i(k);
    }
    basis
        .into_iter()
        .map(|(mu, v, _)| {
            let ip = inner(&v, &p1n);
            assert!(!ip.is_zero(), "Jack normalization pairing vanished");
            let scale = RatFun::from_rat(nfact.clone()).div(&ip);
            (mu, v.scale(&scale))
        })
        .collect()
}

/// Integral-form Jack polynomial, memoized per degree.
pub fn jack(mu: &Partition) -> FockElement {
    static CACHE: OnceLock<Mutex<HashMap<u32, BTreeMap<Partition, FockElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let n = mu.size();
    {
        let guard = cache.lock().unwrap();
        if let Some(deg) = guard.get(&n) {
            return deg[mu].clone();
        }
    }
    let deg = jack_degree(n);
    let result = deg[mu].clone();
    cache.lock().unwrap().insert(n, deg);
    result
}
