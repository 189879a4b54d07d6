//! Rank-2 instanton partition function by localization over pairs of
//! partitions, the blending specialization that reduces it to rank 1, and
//! the charge-weighted dual partition function with its modular-form
//! fixture check.

use crate::correlators::{w_weight, w_weight_at, MValue};
use crate::mpoly::{MPoly, Var};
use crate::partitions::{charge, enumerate, Partition};
use crate::qseries::eta_quotient;
use crate::rational::{rat_i, Rat};
use crate::series::{qq_inf, Series};
use crate::vertex::tangent_character;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum ZInstError {
    /// A tangent weight vanished at the given parameters: the torus action
    /// is not generic enough for localization.
    VanishingWeight { mu1: Partition, mu2: Partition },
}

impl fmt::Display for ZInstError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZInstError::VanishingWeight { mu1, mu2 } => write!(
                f,
                "vanishing tangent weight at fixed point ({}; {})",
                mu1, mu2
            ),
        }
    }
}

/// The localization weight of the fixed point (mu1, mu2) of the rank-2
/// moduli space: product over the four sectors (i, j) of
/// e(m-shifted sector) / e(sector), with the sector character
/// tangent_character(mu^(j), mu^(i)) specialized at t1 = t, t2 = -t
/// and shifted by a_i - a_j. Polynomial in m for symbolic mass.
pub fn rank2_weight(
    mu1: &Partition,
    mu2: &Partition,
    a1: &Rat,
    a2: &Rat,
    t: &Rat,
    m: &MValue,
) -> Result<MPoly, ZInstError> {
    let comps = [mu1, mu2];
    let avals = [a1, a2];
    let mut num = MPoly::one();
    let mut den = Rat::one();
    for i in 0..2 {
        for j in 0..2 {
            let ch = tangent_character(comps[j], comps[i]);
            let shift = avals[i] - avals[j];
            for ((e1, e2), c) in ch.terms() {
                // weight of z1^e1 z2^e2 at t1 = t, t2 = -t
                let w = &shift + rat_i(e1 - e2) * t;
                if w.is_zero() {
                    return Err(ZInstError::VanishingWeight {
                        mu1: mu1.clone(),
                        mu2: mu2.clone(),
                    });
                }
                let mult: i64 = {
                    assert!(c.denom() == &num_bigint::BigInt::from(1));
                    c.numer().try_into().expect("character multiplicity")
                };
                assert!(mult > 0, "tangent character has negative multiplicity");
                for _ in 0..mult {
                    let factor = match m {
                        MValue::Symbolic => MPoly::var(Var::M).add(&MPoly::constant(w.clone())),
                        MValue::Numeric(mv) => MPoly::constant(mv + &w),
                    };
                    num = num.mul(&factor);
                    den *= &w;
                }
            }
        }
    }
    Ok(num.scale(&den.recip()))
}

/// Rank-2 instanton partition function
/// Z = sum over pairs of partitions of q^{2n} * weight, n the total size.
pub fn z_inst_rank2(
    a1: &Rat,
    a2: &Rat,
    t: &Rat,
    m: &MValue,
    order: usize,
) -> Result<Series<MPoly>, ZInstError> {
    let mut s = Series::zero(order);
    for n in 0..=(order / 2) as u32 {
        let mut acc = MPoly::zero();
        for s1 in 0..=n {
            let s2 = n - s1;
            for mu1 in enumerate(s1) {
                for mu2 in enumerate(s2) {
                    acc = acc.add(&rank2_weight(&mu1, &mu2, a1, a2, t, m)?);
                }
            }
        }
        if 2 * n as usize <= order {
            s.set_coeff(2 * n as usize, acc);
        }
    }
    Ok(s)
}

/// Dual partition function coefficient of zeta^k:
/// Z_k = sum_mu q^{|mu|} (2 b(mu))^k / k! * w_m(mu),
/// with b(mu) the blending charge.
pub fn dual_partition(k: u32, m: &MValue, order: usize) -> Series<MPoly> {
    let mut kfact = Rat::one();
    for j in 2..=k as i64 {
        kfact *= rat_i(j);
    }
    let mut s = Series::zero(order);
    for n in 0..=order {
        let mut acc = MPoly::zero();
        for mu in enumerate(n as u32) {
            let b = charge(&mu);
            let cw = rat_i(2 * b).pow(k as i32) / &kfact;
            if cw.is_zero() {
                continue;
            }
            let w = match m {
                MValue::Symbolic => w_weight(&mu).scale(&cw),
                MValue::Numeric(mv) => MPoly::constant(w_weight_at(&mu, mv) * cw),
            };
            acc = acc.add(&w);
        }
        s.set_coeff(n, acc);
    }
    s
}

/// Numeric-mass dual partition function as a rational series.
pub fn dual_partition_at(k: u32, m: &Rat, order: usize) -> Series<Rat> {
    dual_partition(k, &MValue::Numeric(m.clone()), order).map(|c| {
        c.as_constant()
            .expect("numeric mass gives rational coefficients")
    })
}

/// The weight-5 modular-form basis fixtures for Gamma_1(4), shipped as data.
pub mod fixtures {
    use crate::rational::{rat_i, Rat};

    const DATA: &str = include_str!("../data/gamma1_4_weight5_basis.txt");

    /// (name, coefficients of q^0.. up to the shipped depth)
    pub fn basis() -> Vec<(String, Vec<Rat>)> {
        DATA.lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .map(|l| {
                let mut it = l.split_whitespace();
                let name = it.next().unwrap().to_string();
                let coeffs = it
                    .map(|v| rat_i(v.parse::<i64>().expect("integer fixture coefficient")))
                    .collect();
                (name, coeffs)
            })
            .collect()
    }

    pub fn series(name: &str) -> Vec<Rat> {
        basis()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .unwrap_or_else(|| panic!("no fixture series {}", name))
    }
}

#[derive(Clone, Debug)]
pub struct ModularReport {
    pub order: usize,
    /// eta-quotient q-exponent prefactor and the net q-shift after
    /// combining with the series factors; must be a nonnegative integer
    pub eta_prefactor: Rat,
    pub net_shift: i64,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
    pub per_order: Vec<bool>,
    pub equal: bool,
}

/// Check that Z_2(3, q) / (q;q)_inf^8 * eta(tau)^4 eta(2tau)^2 eta(4tau)^4
/// equals 4/5 E1 - 4/5 E3 in the fixture basis, coefficient-by-coefficient
/// up to the requested order (at most the fixture depth).
pub fn modular_example_check(order: usize) -> ModularReport {
    modular_example_check_with(order, &fixtures::series("E1"), &fixtures::series("E3"))
}

/// Same check against caller-supplied basis series (used for the negative
/// control with zeroed fixtures).
pub fn modular_example_check_with(order: usize, e1: &[Rat], e3: &[Rat]) -> ModularReport {
    assert!(
        order < e1.len() && order < e3.len(),
        "fixture depth exceeded"
    );
    let eq = eta_quotient(&[(1, 4), (2, 2), (4, 4)], order);
    // the prefactor must cancel to an integer against the plain power series
    // (q;q)_inf^{-8}, whose q-exponent prefactor is zero
    assert!(eq.prefactor.denom().is_one(), "non-integer net prefactor");
    let shift: i64 = eq.prefactor.numer().try_into().unwrap();
    assert!(shift >= 0);
    let z2 = dual_partition_at(2, &rat_i(3), order);
    let body = eq.body.mul(&qq_inf(order).pow_int(-8));
    let prod = z2.mul(&body).shift_up(shift as usize);
    let lhs: Vec<Rat> = (0..=order).map(|n| prod.coeff(n)).collect();
    let c = crate::rational::rat(4, 5);
    let rhs: Vec<Rat> = (0..=order).map(|n| (&e1[n] - &e3[n]) * &c).collect();
    let per_order: Vec<bool> = lhs.iter().zip(&rhs).map(|(a, b)| a == b).collect();
    ModularReport {
        order,
        eta_prefactor: eq.prefactor,
        net_shift: shift,
        equal: per_order.iter().all(|&b| b),
        lhs,
        rhs,
        per_order,
    }
}

/// The blending specialization: the rank-2 weight at t -> 2t, a1 = 2bt,
/// a2 = (-2b-1)t equals w_m(blend)/w_m(nu(b)); returns the cross-multiplied
/// sides w_m(blend) and w_m(nu(b)) * weight for exact comparison.
pub fn blending_identity_sides(
    b: i64,
    mu1: &Partition,
    mu2: &Partition,
    t: &Rat,
) -> Result<(MPoly, MPoly), ZInstError> {
    let a1 = t * rat_i(2 * b);
    let a2 = t * rat_i(-2 * b - 1);
    let two_t = t * rat_i(2);
    let weight = rank2_weight(mu1, mu2, &a1, &a2, &two_t, &MValue::Symbolic)?;
    let mu = crate::partitions::blend(b, mu1, mu2);
    let nu_b = crate::partitions::nu(b);
    let lhs = w_weight(&mu);
    let rhs = w_weight(&nu_b).mul(&weight);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_inst_below_first_instanton() {
        let s = z_inst_rank2(&rat_i(1), &rat_i(-2), &Rat::one(), &MValue::Symbolic, 1).unwrap();
        assert_eq!(s.coeff(0), MPoly::one());
        assert_eq!(s.coeff(1), MPoly::zero());
    }

    #[test]
    fn z_inst_mass_zero_counts_pairs() {
        // every weight is 1 at m = 0: coefficient of q^{2n} counts pairs
        let s = z_inst_rank2(
            &rat_i(1),
            &crate::rational::rat(-7, 3),
            &Rat::one(),
            &MValue::Numeric(Rat::zero()),
            4,
        )
        .unwrap();
        assert_eq!(s.coeff(2), MPoly::int(2));
        // pairs of total size 2: (2|-), (11|-), (1|1), (-|2), (-|11) = 5
        assert_eq!(s.coeff(4), MPoly::int(5));
        assert_eq!(s.coeff(1), MPoly::zero());
        assert_eq!(s.coeff(3), MPoly::zero());
    }

    #[test]
    fn z_inst_rejects_degenerate_parameters() {
        // a1 = a2 makes off-diagonal sector weights vanish
        let r = z_inst_rank2(&Rat::one(), &Rat::one(), &Rat::one(), &MValue::Symbolic, 2);
        assert!(r.is_err());
    }

    #[test]
    fn sector_swap_symmetry() {
        // at a1 = -a2 the weight is invariant under swapping components
        // together with a -> -a
        let a = crate::rational::rat(5, 2);
        let t = Rat::one();
        for s1 in 0..=2u32 {
            for s2 in 0..=2u32 {
                for mu1 in enumerate(s1) {
                    for mu2 in enumerate(s2) {
                        let w1 =
                            rank2_weight(&mu1, &mu2, &a, &(-&a), &t, &MValue::Symbolic).unwrap();
                        let w2 =
                            rank2_weight(&mu2, &mu1, &(-&a), &a, &t, &MValue::Symbolic).unwrap();
                        assert_eq!(w1, w2, "mu1={} mu2={}", mu1, mu2);
                    }
                }
            }
        }
    }

    #[test]
    fn blending_identity_small() {
        let t = Rat::one();
        for b in -2..=2i64 {
            for s1 in 0..=1u32 {
                for s2 in 0..=1u32 {
                    if 2 * s1 as i64 + 2 * s2 as i64 + 2 * b * b + b > 6 {
                        continue;
                    }
                    for mu1 in enumerate(s1) {
                        for mu2 in enumerate(s2) {
                            let (lhs, rhs) = blending_identity_sides(b, &mu1, &mu2, &t).unwrap();
                            assert_eq!(lhs, rhs, "b={} mu1={} mu2={}", b, mu1, mu2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_partition_k0_is_rank1() {
        let z = dual_partition(0, &MValue::Symbolic, 8);
        let r = crate::correlators::z_rank1(8);
        assert_eq!(z, r.product_form);
    }

    #[test]
    fn dual_partition_k2_m3_fixture() {
        let z = dual_partition_at(2, &rat_i(3), 9);
        let expect = [0i64, -16, 0, 0, 0, 128, 0, 0, 0, -320];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(z.coeff(n), rat_i(e), "q^{}", n);
        }
    }

    #[test]
    fn charge_of_first_contributors() {
        assert_eq!(charge(&p(&[1])), -1);
        assert_eq!(charge(&p(&[3, 1, 1])), -1);
    }

    #[test]
    fn fixtures_parse() {
        let b = fixtures::basis();
        assert_eq!(b.len(), 3);
        assert_eq!(fixtures::series("E1")[1], Rat::one());
        assert_eq!(fixtures::series("E3")[6], rat_i(1280));
    }

    #[test]
    fn modular_example_to_fixture_depth() {
        let r = modular_example_check(6);
        assert!(r.equal, "mismatches: {:?}", r.per_order);
        assert_eq!(r.net_shift, 1);
    }

    #[test]
    fn modular_example_negative_control() {
        // zeroed fixtures must fail at q^1... the first nonzero order is q^2
        let zeros = vec![Rat::zero(); 7];
        let r = modular_example_check_with(6, &zeros, &zeros);
        assert!(!r.equal);
        assert!(!r.per_order[2]);
    }
}
