//! The Chern-class vertex operator in its combinatorial form: half-vertex
//! exponentials acting on Fock elements, matrix elements between Jack
//! polynomials, the equivalent arm/leg hook product, and the
//! tangent-obstruction character of a pair of monomial ideals.

use crate::fock::{deriv_pk, inner, jack, FockElement};
use crate::laurent::Laurent2;
use crate::mpoly::{MPoly, Var};
use crate::partitions::{arm, leg_t, Partition};
use crate::ratfun::RatFun;
use crate::rational::{rat, sign_pow};

/// Sign pattern of a half-vertex exponential.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignPattern {
    /// alternating (-1)^(n+1) over the modes
    Alternating,
    /// constant +1
    Constant,
}

/// Annihilation-side half-vertex operator: scale c and sign pattern.
/// Truncation is implicit; each derivative lowers degree, so the
/// exponential terminates on any element of bounded degree.
#[derive(Clone, Debug)]
pub struct HalfVertexSpec {
    pub scale: RatFun,
    pub sign: SignPattern,
}

fn t1t2() -> MPoly {
    MPoly::var(Var::T1).mul(&MPoly::var(Var::T2))
}

/// exp(sum_n w(n) d/dp_n) applied to v; the sum terminates because each
/// derivative lowers the degree.
fn exp_derivs(v: &FockElement, weight: impl Fn(u32) -> RatFun) -> FockElement {
    let deg = v.degree();
    let mut total = v.clone();
    let mut current = v.clone();
    for j in 1..=deg {
        // current <- D(current) / j, with D = sum_n w(n) d/dp_n
        let mut next = FockElement::zero();
        for n in 1..=deg {
            let w = weight(n);
            if w.is_zero() {
                continue;
            }
            let d = deriv_pk(n, &current);
            if !d.is_zero() {
                next = next.add(&d.scale(&w));
            }
        }
        if next.is_zero() {
            break;
        }
        current = next.scale(&RatFun::from_rat(rat(1, j as i64)));
        total = total.add(&current);
    }
    total
}

/// The parity involution p_n -> (-1)^(n+1) p_n, i.e. p_mu is scaled by
/// (-1)^(|mu| + l(mu)).
pub fn parity_twist(v: &FockElement) -> FockElement {
    let mut out = FockElement::zero();
    for (mu, c) in v.terms() {
        let s = sign_pow(mu.size() as u64 + mu.len() as u64);
        out.add_term(mu.clone(), c.scale(&s));
    }
    out
}

/// exp((c/(t1 t2)) sum_n d/dp_n) on v.
pub(crate) fn exp_plain(c: &RatFun, v: &FockElement) -> FockElement {
    let base = c.div(&RatFun::from_poly(t1t2()));
    exp_derivs(v, |_| base.clone())
}

/// exp((c/(t1 t2)) sum_n (-1)^(n+1) d/dp_n) on v.
pub(crate) fn exp_alt(c: &RatFun, v: &FockElement) -> FockElement {
    let base = c.div(&RatFun::from_poly(t1t2()));
    exp_derivs(v, |n| base.scale(&sign_pow(n as u64 + 1)))
}

/// Apply a half-vertex operator to a Fock element.
///
/// The two sign patterns are calibrated so that the matrix element of the
/// full vertex operator between Jack polynomials,
/// <apply(Alternating, m, J_mu), apply(Constant, m+t1+t2, J_la)>,
/// equals the arm/leg hook product. In closed form the alternating pattern
/// acts as the parity involution composed with the plain exponential, which
/// is the same operator as conjugating the alternating exponential by the
/// involution.
pub fn half_vertex_apply(spec: &HalfVertexSpec, v: &FockElement) -> FockElement {
    match spec.sign {
        SignPattern::Alternating => parity_twist(&exp_plain(&spec.scale, v)),
        SignPattern::Constant => exp_alt(&spec.scale, v),
    }
}

fn m_poly() -> RatFun {
    RatFun::var(Var::M)
}

fn m_shifted() -> RatFun {
    RatFun::from_poly(
        MPoly::var(Var::M)
            .add(&MPoly::var(Var::T1))
            .add(&MPoly::var(Var::T2)),
    )
}

/// Matrix element of the vertex operator between fixed-point classes,
/// computed on the Nakajima side. The result clears to a polynomial in
/// t1, t2, m.
pub fn w_matrix_element(mu: &Partition, la: &Partition) -> MPoly {
    let a = exp_plain(&m_poly(), &jack(mu));
    let b = exp_alt(&m_shifted(), &jack(la));
    let ip = inner(&a, &b);
    ip.as_poly()
        .expect("vertex matrix element did not clear to a polynomial")
}

/// The hook-product side: over cells of mu the factor
/// m + t1 a_la + t1 - t2 l_mu, and over cells of la the factor
/// m - t1 a_mu + t2 l_la + t2, with generalized (possibly negative)
/// arms and legs across the two partitions.
pub fn hook_side(mu: &Partition, la: &Partition) -> MPoly {
    let m = MPoly::var(Var::M);
    let t1 = MPoly::var(Var::T1);
    let t2 = MPoly::var(Var::T2);
    let mu_t = mu.transpose();
    let la_t = la.transpose();
    let mut prod = MPoly::one();
    for c in mu.cells() {
        let a = arm(la, c);
        let l = leg_t(&mu_t, c);
        // m + t1*a + t1 - t2*l
        let f = m
            .add(&t1.scale(&crate::rational::rat_i(a + 1)))
            .sub(&t2.scale(&crate::rational::rat_i(l)));
        prod = prod.mul(&f);
    }
    for c in la.cells() {
        let a = arm(mu, c);
        let l = leg_t(&la_t, c);
        // m - t1*a + t2*l + t2
        let f = m
            .sub(&t1.scale(&crate::rational::rat_i(a)))
            .add(&t2.scale(&crate::rational::rat_i(l + 1)));
        prod = prod.mul(&f);
    }
    prod
}

/// Character of the tangent-obstruction space of the pair (I_la, I_mu):
/// sum over cells of mu of z1^(a_la+1) z2^(-l_mu) plus sum over cells of
/// la of z1^(-a_mu) z2^(l_la+1). Has |mu| + |la| terms counted with
/// multiplicity.
pub fn tangent_character(la: &Partition, mu: &Partition) -> Laurent2 {
    let mu_t = mu.transpose();
    let la_t = la.transpose();
    let mut out = Laurent2::new();
    for c in mu.cells() {
        out.add_term(arm(la, c) + 1, -leg_t(&mu_t, c), crate::rational::rat_i(1));
    }
    for c in la.cells() {
        out.add_term(-arm(mu, c), leg_t(&la_t, c) + 1, crate::rational::rat_i(1));
    }
    out
}

/// One failing pair of the main identity, for reporting.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFailure {
    pub mu: Partition,
    pub la: Partition,
    pub matrix_element: MPoly,
    pub hook_product: MPoly,
}

/// Sweep the main identity over all pairs with |mu|, |la| <= max_size and,
/// additionally, all pairs of equal size diag_size. Pairs are checked in
/// parallel; the failure list is returned in a deterministic order.
pub fn main_identity_failures(
    max_size: u32,
    diag_size: Option<u32>,
) -> (usize, Vec<IdentityFailure>) {
    use rayon::prelude::*;
    let small = crate::partitions::enumerate_up_to(max_size);
    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for mu in &small {
        for la in &small {
            pairs.push((mu.clone(), la.clone()));
        }
    }
    if let Some(d) = diag_size {
        if d > max_size {
            let diag = crate::partitions::enumerate(d);
            for mu in &diag {
                for la in &diag {
                    pairs.push((mu.clone(), la.clone()));
                }
            }
        }
    }
    let failures: Vec<IdentityFailure> = pairs
        .par_iter()
        .filter_map(|(mu, la)| {
            let w = w_matrix_element(mu, la);
            let h = hook_side(mu, la);
            if w == h {
                None
            } else {
                Some(IdentityFailure {
                    mu: mu.clone(),
                    la: la.clone(),
                    matrix_element: w,
                    hook_product: h,
                })
            }
        })
        .collect();
    (pairs.len(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate;
    use crate::rational::rat_i;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }
    fn t1() -> MPoly {
        MPoly::var(Var::T1)
    }
    fn t2() -> MPoly {
        MPoly::var(Var::T2)
    }
    fn m() -> MPoly {
        MPoly::var(Var::M)
    }

    #[test]
    fn vacuum_is_fixed() {
        let spec = HalfVertexSpec {
            scale: RatFun::var(Var::M),
            sign: SignPattern::Alternating,
        };
        assert_eq!(
            half_vertex_apply(&spec, &FockElement::vacuum()),
            FockElement::vacuum()
        );
    }

    #[test]
    fn worked_expansion_mu_2() {
        // alternating half-vertex with scale m on J_(2):
        // m(m-t1) + 2m t1 t2 p_1 + t1^2 t2^2 p_1^2 + t1^2 t2 p_2
        let spec = HalfVertexSpec {
            scale: RatFun::var(Var::M),
            sign: SignPattern::Alternating,
        };
        let out = half_vertex_apply(&spec, &jack(&p(&[2])));
        let expect_const = m().mul(&m().sub(&t1()));
        assert_eq!(
            out.coeff(&Partition::empty()).as_poly().unwrap(),
            expect_const
        );
        assert_eq!(
            out.coeff(&p(&[1])).as_poly().unwrap(),
            m().mul(&t1()).mul(&t2()).scale(&rat_i(2))
        );
        assert_eq!(
            out.coeff(&p(&[1, 1])).as_poly().unwrap(),
            t1().pow(2).mul(&t2().pow(2))
        );
        assert_eq!(
            out.coeff(&p(&[2])).as_poly().unwrap(),
            t1().pow(2).mul(&t2())
        );
    }

    #[test]
    fn worked_expansion_la_11() {
        // constant half-vertex with scale m+t1+t2 on J_(1,1):
        // (m+t1+2t2)(m+t1+t2) + 2 t1 t2 (m+t1+t2) p_1 + t1^2 t2^2 p_1^2 - t1 t2^2 p_2
        let shift = m().add(&t1()).add(&t2());
        let spec = HalfVertexSpec {
            scale: RatFun::from_poly(shift.clone()),
            sign: SignPattern::Constant,
        };
        let out = half_vertex_apply(&spec, &jack(&p(&[1, 1])));
        let expect_const = m().add(&t1()).add(&t2().scale(&rat_i(2))).mul(&shift);
        assert_eq!(
            out.coeff(&Partition::empty()).as_poly().unwrap(),
            expect_const
        );
        assert_eq!(
            out.coeff(&p(&[1])).as_poly().unwrap(),
            t1().mul(&t2()).scale(&rat_i(2)).mul(&shift)
        );
        assert_eq!(
            out.coeff(&p(&[1, 1])).as_poly().unwrap(),
            t1().pow(2).mul(&t2().pow(2))
        );
        assert_eq!(
            out.coeff(&p(&[2])).as_poly().unwrap(),
            t1().mul(&t2().pow(2)).neg()
        );
    }

    #[test]
    fn worked_matrix_element() {
        // mu=(2), la=(1,1): m (m+t1) (m+t1+t2) (m-t1+2t2)
        let got = w_matrix_element(&p(&[2]), &p(&[1, 1]));
        let expect = m()
            .mul(&m().add(&t1()))
            .mul(&m().add(&t1()).add(&t2()))
            .mul(&m().sub(&t1()).add(&t2().scale(&rat_i(2))));
        assert_eq!(got, expect);
        assert_eq!(hook_side(&p(&[2]), &p(&[1, 1])), expect);
    }

    #[test]
    fn empty_pair() {
        assert_eq!(
            w_matrix_element(&Partition::empty(), &Partition::empty()),
            MPoly::one()
        );
        assert_eq!(
            hook_side(&Partition::empty(), &Partition::empty()),
            MPoly::one()
        );
    }

    #[test]
    fn single_column_fixture() {
        // mu = empty, la = (1): m + t1 + t2
        let got = w_matrix_element(&Partition::empty(), &p(&[1]));
        assert_eq!(got, m().add(&t1()).add(&t2()));
        // mu = (1), la = (1): (m+t1)(m+t2)
        let got = w_matrix_element(&p(&[1]), &p(&[1]));
        assert_eq!(got, m().add(&t1()).mul(&m().add(&t2())));
    }

    #[test]
    fn main_identity_small() {
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for mu in enumerate(a) {
                    for la in enumerate(b) {
                        assert_eq!(
                            w_matrix_element(&mu, &la),
                            hook_side(&mu, &la),
                            "mu={} la={}",
                            mu,
                            la
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn serre_duality_symmetry() {
        // hook(mu,la)(m) = (-1)^(|mu|+|la|) hook(la,mu)(-t1-t2-m)
        let neg_shift = MPoly::var(Var::M).neg().sub(&t1()).sub(&t2());
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for mu in enumerate(a) {
                    for la in enumerate(b) {
                        let lhs = hook_side(&mu, &la);
                        let rhs = hook_side(&la, &mu)
                            .subst(Var::M, &neg_shift)
                            .scale(&sign_pow((mu.size() + la.size()) as u64));
                        assert_eq!(lhs, rhs, "mu={} la={}", mu, la);
                    }
                }
            }
        }
    }

    #[test]
    fn tangent_character_fixtures() {
        // la = mu = (1): z1 + z2
        let t = tangent_character(&p(&[1]), &p(&[1]));
        assert_eq!(t.coeff(1, 0), rat_i(1));
        assert_eq!(t.coeff(0, 1), rat_i(1));
        assert_eq!(t.num_terms(), 2);
        // la = empty, mu = (1): the monomial z1^0 z2^0
        let t = tangent_character(&Partition::empty(), &p(&[1]));
        assert_eq!(t.coeff(0, 0), rat_i(1));
        assert_eq!(t.num_terms(), 1);
        // la = (1), mu = empty: z1 z2
        let t = tangent_character(&p(&[1]), &Partition::empty());
        assert_eq!(t.coeff(1, 1), rat_i(1));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn diagonal_character_pairs_into_hooks() {
        // at la = mu, substituting z1 -> z2^{-1} pairs the 2|mu| terms into
        // {h, -h} over the hooks of mu
        for n in 0..=5u32 {
            for mu in enumerate(n) {
                let ch = tangent_character(&mu, &mu);
                let sub = ch.subst_var1_inv_var2();
                let mut expect: Vec<i64> = Vec::new();
                for h in crate::partitions::hooks(&mu) {
                    expect.push(h as i64);
                    expect.push(-(h as i64));
                }
                let mut got: Vec<i64> = Vec::new();
                for (e, c) in sub.terms() {
                    let mult: i64 = {
                        let v = c.clone();
                        assert!(v.denom() == &num_bigint::BigInt::from(1));
                        v.numer().try_into().unwrap()
                    };
                    assert!(mult > 0);
                    for _ in 0..mult {
                        got.push(*e);
                    }
                }
                expect.sort_unstable();
                got.sort_unstable();
                assert_eq!(expect, got, "mu={}", mu);
            }
        }
    }

    #[test]
    fn column_row_closed_form() {
        // mu = (1^k), la = (l): (m + l t1 - (k-1) t2)
        //   * prod_{j=0}^{k-2} (m - j t2) * prod_{j=0}^{l-1} (m + t2 + j t1)
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                let mu = Partition::new(vec![1; k as usize]);
                let la = p(&[l]);
                let mut expect = m()
                    .add(&t1().scale(&rat_i(l as i64)))
                    .sub(&t2().scale(&rat_i(k as i64 - 1)));
                for j in 0..k.saturating_sub(1) {
                    expect = expect.mul(&m().sub(&t2().scale(&rat_i(j as i64))));
                }
                for j in 0..l {
                    expect = expect.mul(&m().add(&t2()).add(&t1().scale(&rat_i(j as i64))));
                }
                assert_eq!(w_matrix_element(&mu, &la), expect, "k={} l={}", k, l);
            }
        }
    }
}
