//! The charged infinite wedge: free fermions, the charge-shift operator,
//! boson-fermion correspondence, diagonal content operators, and the
//! affine sl2 action in both its mode-by-mode (matrix) form and its
//! principal vertex-operator form.
//!
//! A basis vector (c, mu) encodes v_{mu_1+c} ^ v_{mu_2+c-1} ^ ..., i.e. the
//! descending index set { mu_k - k + c }.

use crate::fock::{character, power_sum_in_schur, zaut};
use crate::partitions::{content, enumerate, Partition};
use crate::rational::{rat, rat_i, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Debug, Default)]
pub struct WedgeVector {
    terms: BTreeMap<(i64, Partition), Rat>,
}

impl WedgeVector {
    pub fn zero() -> Self {
        WedgeVector {
            terms: BTreeMap::new(),
        }
    }

    /// Vacuum of a given charge: |c> = v_c ^ v_{c-1} ^ ...
    pub fn vacuum(charge: i64) -> Self {
        WedgeVector::basis(charge, Partition::empty())
    }

    pub fn basis(charge: i64, mu: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((charge, mu), Rat::one());
        WedgeVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, Partition), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, charge: i64, mu: &Partition) -> Rat {
        self.terms
            .get(&(charge, mu.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, charge: i64, mu: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (charge, mu);
        let e = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &WedgeVector) -> WedgeVector {
        let mut r = self.clone();
        for ((c, mu), v) in &other.terms {
            r.add_term(*c, mu.clone(), v.clone());
        }
        r
    }

    pub fn sub(&self, other: &WedgeVector) -> WedgeVector {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> WedgeVector {
        if s.is_zero() {
            return WedgeVector::zero();
        }
        WedgeVector {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Maximum energy |mu| over the support.
    pub fn energy(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, mu)| mu.size())
            .max()
            .unwrap_or(0)
    }
}

/// Descending occupied index list of (charge, mu), first `depth` entries:
/// slot k holds index mu_k - k + 1 + charge.
fn occupied(charge: i64, mu: &Partition, depth: usize) -> Vec<i64> {
    (1..=depth as i64)
        .map(|k| mu.part(k as u32) as i64 - k + 1 + charge)
        .collect()
}

/// Rebuild (charge, partition) from a full descending index head whose tail
/// continues with consecutive integers.
fn rebuild(charge: i64, indices: &[i64]) -> Partition {
    let parts: Vec<i64> = indices
        .iter()
        .enumerate()
        .map(|(k0, &i)| i + k0 as i64 - charge)
        .collect();
    assert!(parts.iter().all(|&p| p >= 0), "invalid wedge index set");
    Partition::new(parts.iter().map(|&p| p as u32).collect())
}

fn window_depth(charge: i64, mu: &Partition, reach: i64) -> usize {
    let excite = mu.len() as i64 + mu.size() as i64;
    (excite + (charge - reach).abs() + 8) as usize
}

/// Signed insertion of index i into a basis vector; None if occupied.
fn insert_index(charge: i64, mu: &Partition, i: i64) -> Option<(Rat, i64, Partition)> {
    let depth = window_depth(charge, mu, i);
    let mut idx = occupied(charge, mu, depth);
    if idx.contains(&i) {
        return None;
    }
    let pos = idx.iter().position(|&x| x < i).unwrap_or(idx.len());
    idx.insert(pos, i);
    let sign = crate::rational::sign_pow(pos as u64);
    let nu = rebuild(charge + 1, &idx);
    Some((sign, charge + 1, nu))
}

/// Signed deletion of index i from a basis vector; None if not occupied.
fn delete_index(charge: i64, mu: &Partition, i: i64) -> Option<(Rat, i64, Partition)> {
    let depth = window_depth(charge, mu, i);
    let mut idx = occupied(charge, mu, depth);
    let pos = idx.iter().position(|&x| x == i)?;
    idx.remove(pos);
    let sign = crate::rational::sign_pow(pos as u64);
    let nu = rebuild(charge - 1, &idx);
    Some((sign, charge - 1, nu))
}

/// psi_i: wedge with v_i; raises charge by one.
pub fn psi(i: i64, w: &WedgeVector) -> WedgeVector {
    let mut out = WedgeVector::zero();
    for ((c, mu), v) in w.terms() {
        if let Some((sign, nc, nmu)) = insert_index(*c, mu, i) {
            out.add_term(nc, nmu, v * sign);
        }
    }
    out
}

/// psi*_i: contract the slot occupied by v_i; lowers charge by one.
pub fn psi_star(i: i64, w: &WedgeVector) -> WedgeVector {
    let mut out = WedgeVector::zero();
    for ((c, mu), v) in w.terms() {
        if let Some((sign, nc, nmu)) = delete_index(*c, mu, i) {
            out.add_term(nc, nmu, v * sign);
        }
    }
    out
}

/// Q^k: shift every index by k; charge moves by k, partition unchanged.
pub fn q_shift(w: &WedgeVector, k: i64) -> WedgeVector {
    WedgeVector {
        terms: w
            .terms()
            .map(|((c, mu), v)| ((c + k, mu.clone()), v.clone()))
            .collect(),
    }
}

/// Move one occupied index from n+k to n, summed over n: the fermionic
/// bilinear realizing the Heisenberg mode alpha_k; preserves charge.
pub fn alpha_fermionic(k: i64, w: &WedgeVector) -> WedgeVector {
    assert!(k != 0, "alpha_0 is the charge, not a mode");
    let mut out = WedgeVector::zero();
    for ((c, mu), v) in w.terms() {
        let depth = window_depth(
            *c,
            mu,
            *c - (mu.len() as i64 + mu.size() as i64 + k.abs() + 4),
        );
        let idx = occupied(*c, mu, depth);
        let bottom = *idx.last().unwrap();
        for &b in &idx {
            let target = b - k;
            // below the window everything is occupied, so the move dies
            if target < bottom || idx.contains(&target) {
                continue;
            }
            let (s1, c1, m1) = delete_index(*c, mu, b).expect("index occupied");
            let (s2, c2, m2) = insert_index(c1, &m1, target).expect("target free");
            debug_assert_eq!(c2, *c);
            out.add_term(c2, m2, v * s1 * s2);
        }
    }
    out
}

/// Diagonal content operator: multiplies v_mu by sum over cells of
/// (j - i)^k / k!, with 0^0 = 1 so that k = 0 counts cells.
pub fn f_diag(k: u32, w: &WedgeVector) -> WedgeVector {
    let mut kfact = Rat::one();
    for j in 2..=k as i64 {
        kfact *= rat_i(j);
    }
    let mut out = WedgeVector::zero();
    for ((c, mu), v) in w.terms() {
        let mut sum = Rat::zero();
        for cell in mu.cells() {
            let ct = content(cell);
            let pw = if k == 0 {
                Rat::one()
            } else {
                rat_i(ct).pow(k as i32)
            };
            sum += pw;
        }
        out.add_term(*c, mu.clone(), v * sum.clone() / kfact.clone());
    }
    out
}

/// Content power sum over the cells of mu: sum (j-i)^k with 0^0 = 1.
pub fn content_power_sum(mu: &Partition, k: u32) -> Rat {
    let mut sum = Rat::zero();
    for cell in mu.cells() {
        sum += if k == 0 {
            Rat::one()
        } else {
            rat_i(content(cell)).pow(k as i32)
        };
    }
    sum
}

// ---------------------------------------------------------------------------
// Boson-fermion correspondence
// ---------------------------------------------------------------------------

/// Polynomial in power sums with rational coefficients: the bosonic side of
/// the charge-zero wedge at the t1 = 1, t2 = -1 specialization.
pub type BosonElement = BTreeMap<Partition, Rat>;

fn boson_add_term(b: &mut BosonElement, mu: Partition, c: Rat) {
    if c.is_zero() {
        return;
    }
    let e = b.entry(mu.clone()).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        b.remove(&mu);
    }
}

/// Phi: sends the Schur function s_mu to the charge-zero basis vector v_mu.
/// Input is a power-sum expansion with rational coefficients.
pub fn phi_iso(v: &BosonElement) -> WedgeVector {
    let mut out = WedgeVector::zero();
    for (mu, c) in v {
        // p_mu = sum_la chi^la_mu s_la
        for (la, chi) in power_sum_in_schur(mu) {
            out.add_term(0, la, c * chi);
        }
    }
    out
}

/// Inverse of Phi on the charge-zero sector.
pub fn phi_inv(w: &WedgeVector) -> BosonElement {
    let mut out = BosonElement::new();
    for ((c, mu), v) in w.terms() {
        assert_eq!(*c, 0, "phi inverse needs charge zero");
        // s_mu = sum_la chi^mu_la p_la / z(la)
        for la in enumerate(mu.size()) {
            let chi = character(mu, &la);
            if chi.is_zero() {
                continue;
            }
            boson_add_term(&mut out, la.clone(), v * chi / zaut(&la));
        }
    }
    out
}

/// Multiplication by p_k on the bosonic side.
pub fn boson_mul_pk(k: u32, v: &BosonElement) -> BosonElement {
    let mut out = BosonElement::new();
    for (mu, c) in v {
        let mut parts = mu.parts().to_vec();
        parts.push(k);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        boson_add_term(&mut out, Partition::new(parts), c.clone());
    }
    out
}

/// Plain d/dp_k on the bosonic side.
pub fn boson_del_pk(k: u32, v: &BosonElement) -> BosonElement {
    let mut out = BosonElement::new();
    for (mu, c) in v {
        let mult = mu.multiplicity(k);
        if mult == 0 {
            continue;
        }
        let mut parts = mu.parts().to_vec();
        let pos = parts.iter().position(|&p| p == k).unwrap();
        parts.remove(pos);
        boson_add_term(&mut out, Partition::new(parts), c * rat_i(mult as i64));
    }
    out
}

/// Heisenberg mode with [a_k, a_{-k}] = k: a_{-r} = p_r multiplication,
/// a_r = r d/dp_r for r > 0.
pub fn boson_alpha(r: i64, v: &BosonElement) -> BosonElement {
    if r < 0 {
        boson_mul_pk((-r) as u32, v)
    } else {
        let out = boson_del_pk(r as u32, v);
        out.into_iter().map(|(mu, c)| (mu, c * rat_i(r))).collect()
    }
}

// ---------------------------------------------------------------------------
// Affine sl2: matrix action
// ---------------------------------------------------------------------------

/// Generators of the affine sl2 action on the charge-zero wedge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sl2Gen {
    /// e_j: moves even indices n -> n - 2j - 1
    E(i64),
    /// f_j: moves odd indices n -> n - 2j + 1
    F(i64),
    /// h_j for j != 0: n -> n - 2j with sign +1 on even, -1 on odd indices
    H(i64),
    /// regularized h_0, diagonal with eigenvalue twice the blending charge
    H0,
    /// central element, acts as 1
    K,
}

/// Index-shift derivation: sum over occupied slots n of the given parity,
/// replace by n + shift with the slot sign rule.
fn shift_derivation(
    w: &WedgeVector,
    parity: i64,
    shift: i64,
    coeff: impl Fn(i64) -> Rat,
) -> WedgeVector {
    let mut out = WedgeVector::zero();
    for ((c, mu), v) in w.terms() {
        let depth = window_depth(
            *c,
            mu,
            *c - (mu.len() as i64 + mu.size() as i64 + shift.abs() + 4),
        );
        let idx = occupied(*c, mu, depth);
        let bottom = *idx.last().unwrap();
        for &n in &idx {
            if n.rem_euclid(2) != parity {
                continue;
            }
            let target = n + shift;
            if target < bottom || idx.contains(&target) {
                continue;
            }
            let (s1, c1, m1) = delete_index(*c, mu, n).expect("occupied");
            let (s2, c2, m2) = insert_index(c1, &m1, target).expect("free");
            out.add_term(c2, m2, v * s1 * s2 * coeff(n));
        }
    }
    out
}

/// Eigenvalue of the regularized h_0 on a basis vector: over positive
/// occupied indices count +1 for even and -1 for odd, over nonpositive
/// missing indices the opposite sign; the vacuum gets 0.
pub fn h0_eigenvalue(charge: i64, mu: &Partition) -> i64 {
    let depth = window_depth(
        charge,
        mu,
        charge - (mu.len() as i64 + mu.size() as i64 + 4),
    );
    let idx = occupied(charge, mu, depth);
    let bottom = *idx.last().unwrap();
    let mut val = 0i64;
    for &n in &idx {
        if n > 0 {
            val += if n.rem_euclid(2) == 0 { 1 } else { -1 };
        }
    }
    for n in bottom..=0 {
        if !idx.contains(&n) {
            val -= if n.rem_euclid(2) == 0 { 1 } else { -1 };
        }
    }
    val
}

/// Matrix (mode-by-mode) action of an affine sl2 generator.
pub fn sl2_matrix_action(gen: Sl2Gen, w: &WedgeVector) -> WedgeVector {
    match gen {
        Sl2Gen::E(j) => shift_derivation(w, 0, -2 * j - 1, |_| Rat::one()),
        Sl2Gen::F(j) => shift_derivation(w, 1, -2 * j + 1, |_| Rat::one()),
        Sl2Gen::H(j) => {
            assert!(j != 0, "use H0 for the regularized zero mode");
            let even = shift_derivation(w, 0, -2 * j, |_| Rat::one());
            let odd = shift_derivation(w, 1, -2 * j, |_| -Rat::one());
            even.add(&odd)
        }
        Sl2Gen::H0 => {
            let mut out = WedgeVector::zero();
            for ((c, mu), v) in w.terms() {
                out.add_term(*c, mu.clone(), v * rat_i(h0_eigenvalue(*c, mu)));
            }
            out
        }
        Sl2Gen::K => w.clone(),
    }
}

// ---------------------------------------------------------------------------
// Affine sl2: principal vertex-operator construction
// ---------------------------------------------------------------------------

/// Generator combinations realized by the principal construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrincipalGen {
    /// h_j (any j, including the regularized zero mode)
    H(i64),
    /// e_j + f_{j+1}
    EPlusF(i64),
    /// e_j - f_{j+1}
    EMinusF(i64),
    /// 2d + h_0
    TwoDPlusH0,
    /// central element
    K,
}

/// Odd-part partitions of n.
fn odd_partitions(n: u32) -> Vec<Partition> {
    enumerate(n)
        .into_iter()
        .filter(|mu| mu.parts().iter().all(|p| p % 2 == 1))
        .collect()
}

fn aut_factor(mu: &Partition) -> Rat {
    let mut f = Rat::one();
    for (_, m) in mu.part_multiplicities() {
        for k in 2..=m as i64 {
            f *= rat_i(k);
        }
    }
    f
}

/// Coefficient of z^s in Gamma(z) = exp(2 sum_odd (z^r/r) a_{-r})
///                               * exp(-2 sum_odd (z^{-r}/r) a_r),
/// applied to a bosonic element, with the output truncated to the given
/// degree. Modes a are the [a_r, a_{-r}] = r bosons of `boson_alpha`.
fn gamma_odd_coeff(s: i64, v: &BosonElement, max_out_degree: u32) -> BosonElement {
    let mut out = BosonElement::new();
    let in_deg: u32 = v.keys().map(|mu| mu.size()).max().unwrap_or(0);
    for ann in 0..=in_deg {
        let cre = ann as i64 + s;
        if cre < 0 || cre as u32 > max_out_degree + ann {
            continue;
        }
        let cre = cre as u32;
        for la in odd_partitions(ann) {
            // annihilation factor: (-2)^{l(la)} / aut(la), derivative d_la
            let mut dv = v.clone();
            for &pt in la.parts() {
                dv = boson_del_pk(pt, &dv);
                if dv.is_empty() {
                    break;
                }
            }
            if dv.is_empty() {
                continue;
            }
            let mut ac = Rat::one();
            for _ in 0..la.len() {
                ac *= rat_i(-2);
            }
            ac /= aut_factor(&la);
            for ka in odd_partitions(cre) {
                // creation factor: prod (2/k_i) / aut(ka), multiply p_ka
                let mut cc = Rat::one();
                for &pt in ka.parts() {
                    cc *= rat(2, pt as i64);
                }
                cc /= aut_factor(&ka);
                let mut term = dv.clone();
                for &pt in ka.parts() {
                    term = boson_mul_pk(pt, &term);
                }
                let scale = &ac * &cc;
                for (mu, c) in term {
                    if mu.size() <= max_out_degree {
                        boson_add_term(&mut out, mu, c * &scale);
                    }
                }
            }
        }
    }
    out
}

/// Principal (Nakajima-side) action of an affine sl2 generator on a
/// charge-zero wedge vector, computed through the boson-fermion dictionary.
/// `truncation` bounds the energy of the output.
pub fn sl2_principal_action(gen: PrincipalGen, w: &WedgeVector, truncation: u32) -> WedgeVector {
    let v = phi_inv(w);
    let out: BosonElement = match gen {
        PrincipalGen::K => v,
        PrincipalGen::H(j) => {
            // h_j = [z^{-2j}] (Gamma(z) - 1)/2
            let mut g = gamma_odd_coeff(-2 * j, &v, truncation);
            let g = {
                if j == 0 {
                    for (mu, c) in &v {
                        boson_add_term(&mut g, mu.clone(), -c.clone());
                    }
                }
                g
            };
            g.into_iter().map(|(mu, c)| (mu, c * rat(1, 2))).collect()
        }
        PrincipalGen::EMinusF(j) => {
            // e_j - f_{j+1} = [z^{-(2j+1)}] Gamma(z)/2
            let g = gamma_odd_coeff(-(2 * j + 1), &v, truncation);
            g.into_iter().map(|(mu, c)| (mu, c * rat(1, 2))).collect()
        }
        PrincipalGen::EPlusF(j) => boson_alpha(2 * j + 1, &v),
        PrincipalGen::TwoDPlusH0 => {
            // 2d = 2 sum_{r>=1} a_{-r} a_r, plus the h_0 extraction
            let in_deg: u32 = v.keys().map(|mu| mu.size()).max().unwrap_or(0);
            let mut acc = BosonElement::new();
            for r in 1..=in_deg as i64 {
                let t = boson_alpha(-r, &boson_alpha(r, &v));
                for (mu, c) in t {
                    boson_add_term(&mut acc, mu, c * rat_i(2));
                }
            }
            let mut g = gamma_odd_coeff(0, &v, truncation);
            for (mu, c) in &v {
                boson_add_term(&mut g, mu.clone(), -c.clone());
            }
            for (mu, c) in g {
                boson_add_term(&mut acc, mu, c * rat(1, 2));
            }
            acc
        }
    };
    phi_iso(&out)
}

/// The same generator combination evaluated through the matrix action,
/// for cross-checking against the principal construction.
pub fn sl2_matrix_combo(gen: PrincipalGen, w: &WedgeVector) -> WedgeVector {
    match gen {
        PrincipalGen::K => w.clone(),
        PrincipalGen::H(0) => sl2_matrix_action(Sl2Gen::H0, w),
        PrincipalGen::H(j) => sl2_matrix_action(Sl2Gen::H(j), w),
        PrincipalGen::EPlusF(j) => {
            sl2_matrix_action(Sl2Gen::E(j), w).add(&sl2_matrix_action(Sl2Gen::F(j + 1), w))
        }
        PrincipalGen::EMinusF(j) => {
            sl2_matrix_action(Sl2Gen::E(j), w).sub(&sl2_matrix_action(Sl2Gen::F(j + 1), w))
        }
        PrincipalGen::TwoDPlusH0 => {
            let mut out = WedgeVector::zero();
            for ((c, mu), v) in w.terms() {
                let eig = rat_i(2 * mu.size() as i64 + h0_eigenvalue(*c, mu));
                out.add_term(*c, mu.clone(), v * eig);
            }
            out
        }
    }
}
