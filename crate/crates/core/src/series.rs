//! Truncated formal power series in q over a pluggable exact coefficient ring.
//!
//! A `Series<C>` stores the coefficients of q^0..q^N for an explicit
//! truncation order N. Arithmetic never reads past the truncation;
//! operations on mismatched truncations truncate to the minimum.

use crate::rational::Rat;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Exact coefficient ring with a rational scalar action.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
    fn scale(&self, r: &Rat) -> Self;
    fn from_rat(r: &Rat) -> Self;
}

impl Coeff for Rat {
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl Coeff for crate::mpoly::MPoly {
    fn scale(&self, r: &Rat) -> Self {
        crate::mpoly::MPoly::scale(self, r)
    }
    fn from_rat(r: &Rat) -> Self {
        crate::mpoly::MPoly::constant(r.clone())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>,
}

/// Order specification for q-Pochhammer products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochOrder {
    /// (a;q)_n = (1-a)(1-aq)...(1-aq^n), n+1 factors.
    Finite(usize),
    Infinite,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    /// Truncation order N (coefficients q^0..q^N are stored).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        assert!(n < self.coeffs.len());
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Series<C> {
        let n = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Series<C>) -> Series<C> {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series<C>) -> Series<C> {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() - other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Series<C>) -> Series<C> {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let t = self.coeffs[i].clone() * other.coeffs[j].clone();
                out[i + j] = out[i + j].clone() + t;
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, r: &Rat) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn scale_coeff(&self, k: &C) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Multiply by q^k, keeping the truncation order (top coefficients drop).
    pub fn shift_up(&self, k: usize) -> Series<C> {
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for i in 0..=n {
            if i + k <= n {
                out[i + k] = self.coeffs[i].clone();
            }
        }
        Series { coeffs: out }
    }

    /// Multiply by the binomial (1 - c q^v).
    pub fn mul_binomial(&self, c: &C, v: usize) -> Series<C> {
        let n = self.order();
        let mut out = self.coeffs.clone();
        if v == 0 {
            let f = C::one() - c.clone();
            return Series {
                coeffs: out.iter().map(|x| x.clone() * f.clone()).collect(),
            };
        }
        for i in (v..=n).rev() {
            let t = self.coeffs[i - v].clone() * c.clone();
            out[i] = out[i].clone() - t;
        }
        Series { coeffs: out }
    }

    /// Multiply by 1/(1 - c q^v), v >= 1.
    pub fn div_binomial(&self, c: &C, v: usize) -> Series<C> {
        assert!(v >= 1, "geometric inverse needs positive q-power");
        let n = self.order();
        let mut out = self.coeffs.clone();
        for i in v..=n {
            let t = out[i - v].clone() * c.clone();
            out[i] = out[i].clone() + t;
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn inverse(&self) -> Series<C> {
        assert!(
            self.coeffs[0].is_one(),
            "series inverse requires unit constant term"
        );
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = C::one();
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out[k] = -acc;
        }
        Series { coeffs: out }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Series<C> {
        assert!(
            self.coeffs[0].is_zero(),
            "series exp requires zero constant term"
        );
        let n = self.order();
        let mut e = vec![C::zero(); n + 1];
        e[0] = C::one();
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                let t = (self.coeffs[j].clone() * e[k - j].clone())
                    .scale(&crate::rational::rat_i(j as i64));
                acc = acc + t;
            }
            e[k] = acc.scale(&crate::rational::rat(1, k as i64));
        }
        Series { coeffs: e }
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Series<C> {
        assert!(
            self.coeffs[0].is_one(),
            "series log requires constant term 1"
        );
        let n = self.order();
        let mut l = vec![C::zero(); n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&crate::rational::rat_i(k as i64));
            for j in 1..k {
                let t = (l[j].clone() * self.coeffs[k - j].clone())
                    .scale(&crate::rational::rat_i(j as i64));
                acc = acc - t;
            }
            l[k] = acc.scale(&crate::rational::rat(1, k as i64));
        }
        Series { coeffs: l }
    }

    /// s^e for a coefficient-ring exponent (e.g. a polynomial in m):
    /// exp(e * log s). Requires constant term 1.
    pub fn pow_coeff(&self, e: &C) -> Series<C> {
        self.log().scale_coeff(e).exp()
    }

    /// Integer power; negative powers invert (constant term must be 1).
    pub fn pow_int(&self, e: i64) -> Series<C> {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut r = Series::one(self.order());
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        r
    }

    /// Map coefficients.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// q-Pochhammer product (a;q)_n or (a;q)_inf with a = c * q^v.
///
/// The finite form follows the display convention
/// (a;q)_n = (1-a)(1-aq)...(1-aq^n), which has n+1 factors.
pub fn pochhammer<C: Coeff>(c: &C, v: usize, ord: PochOrder, order: usize) -> Series<C> {
    let mut s = Series::one(order);
    if c.is_zero() {
        return s;
    }
    match ord {
        PochOrder::Finite(n) => {
            for k in 0..=n {
                let qpow = v + k;
                if qpow <= order {
                    s = s.mul_binomial(c, qpow);
                }
            }
        }
        PochOrder::Infinite => {
            let mut qpow = v;
            loop {
                if qpow > order {
                    break;
                }
                if qpow == 0 {
                    s = s.mul_binomial(c, 0);
                } else {
                    s = s.mul_binomial(c, qpow);
                }
                qpow += 1;
            }
        }
    }
    s
}

/// (q;q)_inf to the given order.
pub fn qq_inf(order: usize) -> Series<Rat> {
    qq_inf_step(1, order)
}

/// (q^step; q^step)_inf to the given order.
pub fn qq_inf_step(step: usize, order: usize) -> Series<Rat> {
    let mut s = Series::one(order);
    let one: Rat = One::one();
    let mut k = step;
    while k <= order {
        s = s.mul_binomial(&one, k);
        k += step;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn q(order: usize) -> Series<Rat> {
        let mut s = Series::zero(order);
        s.set_coeff(1, rat_i(1));
        s
    }

    #[test]
    fn exp_of_q() {
        let e = q(3).exp();
        assert_eq!(e.coeff(0), rat_i(1));
        assert_eq!(e.coeff(1), rat_i(1));
        assert_eq!(e.coeff(2), rat(1, 2));
        assert_eq!(e.coeff(3), rat(1, 6));
    }

    #[test]
    fn qq_inf_pentagonal() {
        let s = qq_inf(8);
        let expect = [1i64, -1, -1, 0, 0, 1, 0, 1, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(i), rat_i(e), "at q^{}", i);
        }
    }

    #[test]
    fn pochhammer_n0_is_one_minus_a() {
        // (a;q)_0 = 1 - a with the display convention
        let s = pochhammer(&rat(1, 3), 0, PochOrder::Finite(0), 4);
        assert_eq!(s.coeff(0), rat(2, 3));
        assert_eq!(s.coeff(1), rat_i(0));
    }

    #[test]
    fn pochhammer_zero_arg() {
        let s = pochhammer(&rat_i(0), 0, PochOrder::Infinite, 5);
        assert_eq!(s, Series::one(5));
    }

    #[test]
    fn pochhammer_q_is_euler_product() {
        let s = pochhammer(&rat_i(1), 1, PochOrder::Infinite, 10);
        assert_eq!(s, qq_inf(10));
    }

    #[test]
    fn log_exp_roundtrip() {
        let mut s = Series::zero(10);
        for (i, v) in [(1usize, rat(1, 2)), (2, rat_i(-3)), (5, rat(7, 3))] {
            s.set_coeff(i, v);
        }
        assert_eq!(s.exp().log(), s);
    }

    #[test]
    fn inverse_mul_is_one() {
        let s = qq_inf(12);
        assert_eq!(s.mul(&s.inverse()), Series::one(12));
    }

    #[test]
    fn pow_int_matches_repeated_mul() {
        let s = qq_inf(10);
        for k in 0..=5i64 {
            let mut r = Series::one(10);
            for _ in 0..k {
                r = r.mul(&s);
            }
            assert_eq!(s.pow_int(k), r, "k={}", k);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_series() -> impl Strategy<Value = Series<Rat>> {
            prop::collection::vec((-5i64..6, 1i64..5), 11..=11).prop_map(|cs| {
                Series::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn ring_axioms(a in small_series(), b in small_series(), c in small_series()) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn log_inverts_exp(a in small_series()) {
                let mut z = a.clone();
                z.set_coeff(0, rat_i(0));
                prop_assert_eq!(z.exp().log(), z);
            }
        }
    }
}
