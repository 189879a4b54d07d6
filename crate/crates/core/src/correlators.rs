//! Correlation functions of the rank-1 theory by equivariant localization,
//! the product form of the partition function, quasimodular classification
//! of the correlators, and the theta-product form of the one-insertion
//! trace.

use crate::laurent::{Laurent2, LaurentPoly};
use crate::mpoly::{MPoly, Var};
use crate::partitions::{enumerate, hooks, Partition};
use crate::qseries::{fit_series, qmf_basis, Fit, FitError};
use crate::rational::{rat_i, Rat};
use crate::series::{qq_inf, Series};
use crate::wedge::content_power_sum;
use num_traits::{One, Zero};

/// Value taken by the mass parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum MValue {
    Symbolic,
    Numeric(Rat),
}

/// A correlation function specification: insertion orders, mass mode, and
/// q-truncation.
#[derive(Clone, Debug)]
pub struct CorrelationSpec {
    pub ks: Vec<u32>,
    pub m: MValue,
    pub order: usize,
}

/// Localization weight prod over cells of (h^2 - m^2)/h^2 as an exact
/// polynomial in m.
pub fn w_weight(mu: &Partition) -> MPoly {
    let m2 = MPoly::var(Var::M).pow(2);
    let mut out = MPoly::one();
    for h in hooks(mu) {
        let h2 = rat_i((h as i64) * (h as i64));
        // (h^2 - m^2)/h^2 = 1 - m^2/h^2
        out = out.mul(&MPoly::one().sub(&m2.scale(&h2.recip())));
    }
    out
}

/// Localization weight at a numeric mass value.
pub fn w_weight_at(mu: &Partition, m: &Rat) -> Rat {
    let m2 = m * m;
    let mut out = Rat::one();
    for h in hooks(mu) {
        let h2 = rat_i((h as i64) * (h as i64));
        out *= (&h2 - &m2) / h2;
    }
    out
}

/// The insertion factor attached to one Chern-character slot of order k:
/// the content power sum over the cells of the fixed point.
pub fn insertion_factor(mu: &Partition, k: u32) -> Rat {
    content_power_sum(mu, k)
}

/// Correlation series by localization over partitions:
/// F(k_1,...,k_N; m, q) = sum_mu q^{|mu|} (prod_l insertion) * weight.
/// Coefficients are polynomials in m when the spec is symbolic.
pub fn localization_f(spec: &CorrelationSpec) -> Series<MPoly> {
    let mut s = Series::zero(spec.order);
    for n in 0..=spec.order {
        let mut acc = MPoly::zero();
        for mu in enumerate(n as u32) {
            let mut factor = Rat::one();
            for &k in &spec.ks {
                factor *= insertion_factor(&mu, k);
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let w = match &spec.m {
                MValue::Symbolic => w_weight(&mu).scale(&factor),
                MValue::Numeric(m) => MPoly::constant(w_weight_at(&mu, m) * factor),
            };
            acc = acc.add(&w);
        }
        s.set_coeff(n, acc);
    }
    s
}

/// The exponent m^2 - 1 as a polynomial.
fn m2_minus_1() -> MPoly {
    MPoly::var(Var::M).pow(2).sub(&MPoly::one())
}

/// (q;q)_inf as a series with polynomial coefficients.
fn qq_inf_poly(order: usize) -> Series<MPoly> {
    qq_inf(order).map(|c| MPoly::constant(c.clone()))
}

#[derive(Clone, Debug)]
pub struct RankOneReport {
    pub localization: Series<MPoly>,
    pub product_form: Series<MPoly>,
    pub equal: bool,
}

/// The rank-1 partition function two ways: the localization sum
/// sum_mu q^{|mu|} w_m(mu) and the product form (q;q)_inf^{m^2-1};
/// the two must agree coefficient-by-coefficient in m.
pub fn z_rank1(order: usize) -> RankOneReport {
    let spec = CorrelationSpec {
        ks: vec![],
        m: MValue::Symbolic,
        order,
    };
    let localization = localization_f(&spec);
    let product_form = qq_inf_poly(order).pow_coeff(&m2_minus_1());
    let equal = localization == product_form;
    RankOneReport {
        localization,
        product_form,
        equal,
    }
}

/// z_rank1 at a numeric mass.
pub fn z_rank1_at(m: &Rat, order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    for n in 0..=order {
        let mut acc = Rat::zero();
        for mu in enumerate(n as u32) {
            acc += w_weight_at(&mu, m);
        }
        s.set_coeff(n, acc);
    }
    s
}

#[derive(Clone, Debug)]
pub struct QmReport {
    pub fit: Fit,
    /// weight bound 2N + sum k_i used for the basis
    pub max_weight: u32,
    /// claimed degree bound 2N + 2 sum floor(k_i/2) and whether it holds
    pub m_degree_bound: u32,
    pub m_degree_ok: bool,
}

/// Divide the correlation series by the partition function and fit the
/// quotient into the quasimodular basis of weight <= 2N + sum k_i;
/// also checks the m-degree bound on every q-coefficient of F.
pub fn quasimodular_report(spec: &CorrelationSpec, guard: usize) -> Result<QmReport, FitError> {
    assert!(matches!(spec.m, MValue::Symbolic));
    let max_weight = 2 * spec.ks.len() as u32 + spec.ks.iter().sum::<u32>();
    let needed = qmf_basis(max_weight).len() + guard;
    if spec.order + 1 < needed {
        return Err(FitError::InsufficientOrder {
            needed,
            have: spec.order + 1,
        });
    }
    let f = localization_f(spec);
    // F / Z = F * (q;q)_inf^{1 - m^2}
    let one_minus_m2 = MPoly::one().sub(&MPoly::var(Var::M).pow(2));
    let quotient = f.mul(&qq_inf_poly(spec.order).pow_coeff(&one_minus_m2));
    // the m-degree bound of the theorem concerns the quotient F/Z
    let m_degree_bound = 2 * spec.ks.len() as u32 + 2 * spec.ks.iter().map(|k| k / 2).sum::<u32>();
    let m_degree_ok = quotient
        .coeffs()
        .iter()
        .all(|c| c.degree_in(Var::M) as u32 <= m_degree_bound);
    let fit = fit_series(&quotient, max_weight, guard)?;
    Ok(QmReport {
        fit,
        max_weight,
        m_degree_bound,
        m_degree_ok,
    })
}

// ---------------------------------------------------------------------------
// Theta-product form of the one-insertion trace
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct GthetaReport {
    pub m: u32,
    pub q_order: usize,
    pub x_window: (i64, i64),
    /// per q-order: whether the Laurent coefficients agree on the window
    pub per_order: Vec<bool>,
    pub equal: bool,
    /// first (q-order, x-exponent) disagreement, if any
    pub first_mismatch: Option<(usize, i64)>,
}

/// Diagonal-trace side: sum_mu q^{|mu|} (sum_i x^{mu_i - i + 1}) w_m(mu),
/// with the x-sum truncated to the window.
fn gtheta_lhs(m: u32, order: usize, window: (i64, i64)) -> Vec<LaurentPoly> {
    let mrat = rat_i(m as i64);
    let mut out = vec![LaurentPoly::new(); order + 1];
    for n in 0..=order {
        for mu in enumerate(n as u32) {
            let w = w_weight_at(&mu, &mrat);
            if w.is_zero() {
                continue;
            }
            let mut i: i64 = 1;
            loop {
                let e = mu.part(i as u32) as i64 - i + 1;
                if e < window.0 {
                    break;
                }
                if e <= window.1 {
                    out[n].add_term(e, w.clone());
                }
                i += 1;
            }
        }
    }
    out
}

/// Theta-product side: the y^0 coefficient of
/// theta(x;q)^{-1} (theta(xy;q)/theta(y;q))^m Z(m, q)
/// expanded in the region |xy| > |y| > 1. Written multiplicatively this is
/// (q;q)^{m^2+1} (xq;q)^{-1} (x^{-1};q)^{-1} (xyq;q)^m ((xy)^{-1};q)^m
/// (yq;q)^{-m} (y^{-1};q)^{-m}, with the two zero-q-power factors
/// 1/(1 - x^{-1}) and 1/(1 - y^{-1})^m expanded as geometric tails.
fn gtheta_rhs(m: u32, order: usize, window: (i64, i64)) -> Vec<LaurentPoly> {
    let p = order as i64;
    // every positive x- or y-power in the product costs at least one power
    // of q, so tails truncated below these depths cannot reach back into
    // the target window / the y^0 slot
    let jx = window.1.abs().max(window.0.abs()) + p + 2;
    let jy = 2 * p + m as i64 + 2;
    let xlo = -(jx + p + m as i64 + 2);
    let xhi = jx;
    let ylo = -(jy + p + 2);
    let yhi = jy;
    let trim =
        |s: Series<Laurent2>| -> Series<Laurent2> { s.map(|c| c.window2(xlo, xhi, ylo, yhi)) };

    let x = Laurent2::monomial(1, 0, Rat::one());
    let y = Laurent2::monomial(0, 1, Rat::one());
    let xy = Laurent2::monomial(1, 1, Rat::one());
    let xinv = Laurent2::monomial(-1, 0, Rat::one());
    let xyinv = Laurent2::monomial(-1, -1, Rat::one());

    // (q;q)^(m^2+1)
    let mut s: Series<Laurent2> = qq_inf(order)
        .pow_int((m as i64) * (m as i64) + 1)
        .map(|c| Laurent2::monomial(0, 0, c.clone()));

    // (x q; q)^{-1} and (x^{-1} q; q)^{-1}-type factors
    for k in 1..=order {
        s = s.div_binomial(&x, k);
        s = s.div_binomial(&xinv, k);
        for _ in 0..m {
            s = s.mul_binomial(&xy, k);
            s = s.mul_binomial(&xyinv, k);
            s = s.div_binomial(&y, k);
            let yinv = Laurent2::monomial(0, -1, Rat::one());
            s = s.div_binomial(&yinv, k);
        }
        s = trim(s);
    }
    // q^0 factors: 1/(1-x^{-1}), (1-(xy)^{-1})^m, 1/(1-y^{-1})^m
    let mut geo_x = Laurent2::new();
    for j in 0..=jx {
        geo_x.add_term(-j, 0, Rat::one());
    }
    s = s.scale_coeff(&geo_x);
    let one = Laurent2::one();
    let mut xy0 = one.sub(&xyinv);
    let mut xy_pow = Laurent2::one();
    for _ in 0..m {
        xy_pow = xy_pow.mul(&xy0);
    }
    xy0 = xy_pow;
    s = s.scale_coeff(&xy0);
    let mut geo_y = Laurent2::new();
    for j in 0..=jy {
        // coefficient C(j + m - 1, m - 1) of y^{-j} in (1 - y^{-1})^{-m}
        let mut c = Rat::one();
        for t in 1..=(m as i64 - 1) {
            c = c * rat_i(j + t) / rat_i(t);
        }
        if m == 0 {
            if j == 0 {
                geo_y.add_term(0, 0, Rat::one());
            }
            continue;
        }
        geo_y.add_term(0, -j, c);
    }
    s = trim(s.scale_coeff(&geo_y));

    (0..=order)
        .map(|n| s.coeff(n).extract_var2_zero().window(window.0, window.1))
        .collect()
}

/// Compare the diagonal trace against the theta-product form for integer
/// mass m to the given q-order over the given x-window.
pub fn gtheta_check(m: u32, q_order: usize, x_window: (i64, i64)) -> GthetaReport {
    let lhs = gtheta_lhs(m, q_order, x_window);
    let rhs = gtheta_rhs(m, q_order, x_window);
    let mut per_order = Vec::new();
    let mut first_mismatch = None;
    for n in 0..=q_order {
        let ok = lhs[n] == rhs[n];
        if !ok && first_mismatch.is_none() {
            for e in x_window.0..=x_window.1 {
                if lhs[n].coeff(e) != rhs[n].coeff(e) {
                    first_mismatch = Some((n, e));
                    break;
                }
            }
        }
        per_order.push(ok);
    }
    GthetaReport {
        m,
        q_order,
        x_window,
        equal: per_order.iter().all(|&b| b),
        per_order,
        first_mismatch,
    }
}
