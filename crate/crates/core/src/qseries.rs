//! Classical q-series and modular objects: Eisenstein series, Dedekind eta
//! quotients, theta functions and their expansions, the weight-graded
//! quasimodular basis generated by E2, E4, E6, and exact linear fitting of
//! q-series into it.

use crate::laurent::LaurentPoly;
use crate::linsolve::{linear_solve_poly_rhs, SolveOutcome};
use crate::mpoly::MPoly;
use crate::rational::{rat, rat_i, Rat};
use crate::series::{pochhammer, qq_inf, PochOrder, Series};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Bernoulli number B_n (B_1 = -1/2 convention).
pub fn bernoulli(n: u32) -> Rat {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Rat::one()]));
    let mut c = cache.lock().unwrap();
    while c.len() <= n as usize {
        let m = c.len();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rat::zero();
        let mut binom = Rat::one(); // C(m+1, 0)
        for (j, b) in c.iter().enumerate() {
            acc += &binom * b;
            binom = binom * rat_i((m as i64 + 1) - j as i64) / rat_i(j as i64 + 1);
        }
        let bm = -acc / binom;
        c.push(bm);
    }
    c[n as usize].clone()
}

/// Eisenstein series E_{2k} = -B_{2k}/(4k) + sum_{n>=1} sigma_{2k-1}(n) q^n,
/// the normalization under which the weight-2k grading is consistent.
pub fn eisenstein(weight: u32, order: usize) -> Series<Rat> {
    assert!(weight >= 2 && weight % 2 == 0, "even weight required");
    let k = weight / 2;
    let mut s = Series::zero(order);
    s.set_coeff(0, -bernoulli(weight) / rat_i(4 * k as i64));
    for n in 1..=order {
        let mut sig = Rat::zero();
        for d in 1..=n {
            if n % d == 0 {
                sig += rat_i(d as i64).pow(weight as i32 - 1);
            }
        }
        s.set_coeff(n, sig);
    }
    s
}

/// Monomial E2^a E4^b E6^c of the quasimodular algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct QmfMonomial {
    pub e2: u32,
    pub e4: u32,
    pub e6: u32,
}

impl QmfMonomial {
    pub fn weight(&self) -> u32 {
        2 * self.e2 + 4 * self.e4 + 6 * self.e6
    }
}

impl fmt::Display for QmfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("E2", self.e2), ("E4", self.e4), ("E6", self.e6)] {
            if e == 1 {
                parts.push(name.to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", name, e));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of weight <= max_weight, sorted by weight then exponents.
pub fn qmf_basis(max_weight: u32) -> Vec<QmfMonomial> {
    let mut out = Vec::new();
    for a in 0..=max_weight / 2 {
        for b in 0..=max_weight / 4 {
            for c in 0..=max_weight / 6 {
                let m = QmfMonomial {
                    e2: a,
                    e4: b,
                    e6: c,
                };
                if m.weight() <= max_weight {
                    out.push(m);
                }
            }
        }
    }
    out.sort_by_key(|m| (m.weight(), m.e2, m.e4, m.e6));
    out
}

/// q-expansion of a basis monomial, memoized.
pub fn qmf_expansion(m: &QmfMonomial, order: usize) -> Series<Rat> {
    type ExpansionCache = Mutex<HashMap<(QmfMonomial, usize), Series<Rat>>>;
    static CACHE: OnceLock<ExpansionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(*m, order)) {
        return s.clone();
    }
    let mut s = Series::one(order);
    for _ in 0..m.e2 {
        s = s.mul(&eisenstein(2, order));
    }
    for _ in 0..m.e4 {
        s = s.mul(&eisenstein(4, order));
    }
    for _ in 0..m.e6 {
        s = s.mul(&eisenstein(6, order));
    }
    cache.lock().unwrap().insert((*m, order), s.clone());
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fit {
    /// Coefficient of each basis monomial; entries are polynomials in m
    /// (constants when the input series is rational).
    pub coeffs: Vec<(QmfMonomial, MPoly)>,
    /// Orders used to solve and the further orders verified.
    pub solved_orders: usize,
    pub verified_orders: usize,
}

impl Fit {
    pub fn coeff(&self, m: &QmfMonomial) -> MPoly {
        self.coeffs
            .iter()
            .find(|(b, _)| b == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(MPoly::zero)
    }

    pub fn nonzero(&self) -> Vec<(QmfMonomial, MPoly)> {
        self.coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FitError {
    /// Series not known to enough orders for this basis plus guard.
    InsufficientOrder { needed: usize, have: usize },
    /// No exact solution; first failing q-order.
    Inconsistent { order: usize },
    /// Basis matrix is singular over the solve window.
    Singular,
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::InsufficientOrder { needed, have } => {
                write!(f, "series order {} < required {}", have, needed)
            }
            FitError::Inconsistent { order } => {
                write!(f, "no exact fit: first mismatch at q^{}", order)
            }
            FitError::Singular => write!(f, "singular basis matrix"),
        }
    }
}

/// Exact fit of a series with polynomial-in-m coefficients into the
/// inhomogeneous quasimodular basis of weight <= max_weight.
///
/// The first dim(basis) orders determine the candidate; all remaining
/// orders up to the series truncation act as guard checks, of which at
/// least `guard` must be available.
pub fn fit_series(s: &Series<MPoly>, max_weight: u32, guard: usize) -> Result<Fit, FitError> {
    let basis = qmf_basis(max_weight);
    let dim = basis.len();
    let have = s.order() + 1;
    if have < dim + guard {
        return Err(FitError::InsufficientOrder {
            needed: dim + guard,
            have,
        });
    }
    let expansions: Vec<Series<Rat>> = basis.iter().map(|m| qmf_expansion(m, s.order())).collect();
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|r| expansions.iter().map(|e| e.coeff(r)).collect())
        .collect();
    let b: Vec<MPoly> = (0..dim).map(|r| s.coeff(r)).collect();
    let sol = match linear_solve_poly_rhs(&a, &b) {
        SolveOutcome::Unique(x) => x,
        SolveOutcome::Underdetermined { .. } => return Err(FitError::Singular),
        SolveOutcome::Inconsistent { row } => return Err(FitError::Inconsistent { order: row }),
    };
    // verify every remaining order exactly
    for r in dim..have {
        let mut acc = MPoly::zero();
        for (j, e) in expansions.iter().enumerate() {
            if sol[j].is_zero() {
                continue;
            }
            acc = acc.add(&sol[j].scale(&e.coeff(r)));
        }
        if acc != s.coeff(r) {
            return Err(FitError::Inconsistent { order: r });
        }
    }
    Ok(Fit {
        coeffs: basis.into_iter().zip(sol).collect(),
        solved_orders: dim,
        verified_orders: have - dim,
    })
}

/// Convenience: fit a rational series.
pub fn fit_series_rat(s: &Series<Rat>, max_weight: u32, guard: usize) -> Result<Fit, FitError> {
    fit_series(&s.map(|c| MPoly::constant(c.clone())), max_weight, guard)
}

/// theta(x; q) = (xq; q)_inf (x^{-1}; q)_inf (q; q)_inf^{-2}, as a q-series
/// whose coefficients are Laurent polynomials in x restricted to the given
/// exponent window. The window only trims the output; the computation is
/// exact (each product factor moves x-degree by at most one).
pub fn theta(order: usize, window: (i64, i64)) -> Series<LaurentPoly> {
    let x = LaurentPoly::monomial(1, Rat::one());
    let xinv = LaurentPoly::monomial(-1, Rat::one());
    let mut s: Series<LaurentPoly> = pochhammer(&x, 1, PochOrder::Infinite, order);
    s = s.mul(&pochhammer(&xinv, 0, PochOrder::Infinite, order));
    let qq2 = qq_inf(order).pow_int(2).inverse();
    let qq2 = qq2.map(|c| LaurentPoly::monomial(0, c.clone()));
    s = s.mul(&qq2);
    s.map(|c| c.window(window.0, window.1))
}

/// Coefficient series of the odd powers w^1, w^3, ..., w^(2k_max+1) of the
/// symmetric expansion e^{w/2} theta(e^w; q); the even powers vanish
/// identically and are asserted to.
pub fn theta_z_expansion(order: usize, k_max: usize) -> Vec<Series<Rat>> {
    let wlen = 2 * k_max + 2; // powers w^0..w^(2k_max+1)
                              // polynomials in w truncated at wlen, as Vec<Rat>
    let exp_w = |half: Rat| -> Vec<Rat> {
        // e^{half * w}
        let mut c = vec![Rat::zero(); wlen];
        let mut term = Rat::one();
        for (j, slot) in c.iter_mut().enumerate() {
            if j > 0 {
                term = &term * &half / rat_i(j as i64);
            }
            *slot = term.clone();
        }
        c
    };
    let wmul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); wlen];
        for i in 0..wlen {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..wlen - i {
                if !b[j].is_zero() {
                    let t = &a[i] * &b[j];
                    out[i + j] += t;
                }
            }
        }
        out
    };
    let wone = {
        let mut c = vec![Rat::zero(); wlen];
        c[0] = Rat::one();
        c
    };
    // q-series with w-polynomial coefficients, stored as Vec over q orders
    let mut series: Vec<Vec<Rat>> = vec![vec![Rat::zero(); wlen]; order + 1];
    series[0] = wone.clone();
    let mul_binomial = |s: &mut Vec<Vec<Rat>>, c: &[Rat], v: usize| {
        // multiply by (1 - c(w) q^v)
        for i in (v..=order).rev() {
            let t = wmul(&s[i - v], c);
            for (j, tv) in t.into_iter().enumerate() {
                s[i][j] -= tv;
            }
        }
    };
    let ew = exp_w(Rat::one());
    let ewinv = exp_w(-Rat::one());
    // (x q; q)_inf with x = e^w
    for k in 1..=order {
        mul_binomial(&mut series, &ew, k);
    }
    // (x^{-1}; q)_inf
    let mut k0 = vec![vec![Rat::zero(); wlen]; order + 1];
    k0[0] = wone.iter().zip(&ewinv).map(|(a, b)| a - b).collect();
    let mut combined: Vec<Vec<Rat>> = vec![vec![Rat::zero(); wlen]; order + 1];
    for i in 0..=order {
        let t = wmul(&series[i], &k0[0]);
        for (j, tv) in t.into_iter().enumerate() {
            combined[i][j] += tv;
        }
    }
    let mut series = combined;
    for k in 1..=order {
        mul_binomial(&mut series, &ewinv, k);
    }
    // * (q;q)_inf^{-2}
    let qqinv2 = qq_inf(order).pow_int(-2);
    let mut out: Vec<Vec<Rat>> = vec![vec![Rat::zero(); wlen]; order + 1];
    for i in 0..=order {
        for j in 0..=order - i {
            let c = qqinv2.coeff(j);
            if c.is_zero() {
                continue;
            }
            for l in 0..wlen {
                let t = &series[i][l] * &c;
                out[i + j][l] += t;
            }
        }
    }
    // * e^{w/2}
    let ehalf = exp_w(rat(1, 2));
    for row in out.iter_mut() {
        *row = wmul(row, &ehalf);
    }
    // even powers must vanish
    for (i, row) in out.iter().enumerate() {
        for l in (0..wlen).step_by(2) {
            assert!(row[l].is_zero(), "even w-power {} survived at q^{}", l, i);
        }
    }
    (0..=k_max)
        .map(|k| Series::from_coeffs((0..=order).map(|i| out[i][2 * k + 1].clone()).collect()))
        .collect()
}

/// An eta quotient prod eta(d tau)^{r_d}: rational q-exponent prefactor
/// sum d r_d / 24 and the integer-coefficient body series.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaQuotient {
    pub factors: Vec<(u32, i32)>,
    pub prefactor: Rat,
    pub body: Series<Rat>,
}

/// Build an eta quotient from (multiplier, exponent) pairs.
pub fn eta_quotient(factors: &[(u32, i32)], order: usize) -> EtaQuotient {
    let mut prefactor = Rat::zero();
    let mut body = Series::one(order);
    for &(d, r) in factors {
        assert!(d >= 1);
        prefactor += rat((d as i64) * (r as i64), 24);
        let base = crate::series::qq_inf_step(d as usize, order);
        body = body.mul(&base.pow_int(r as i64));
    }
    EtaQuotient {
        factors: factors.to_vec(),
        prefactor,
        body,
    }
}
