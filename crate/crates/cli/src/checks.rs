//! The verification suites behind `verify-all` and the single-purpose
//! subcommands, each returning a machine-readable pass/fail record.

use hilbq::correlators::{
    gtheta_check, localization_f, quasimodular_report, z_rank1, CorrelationSpec, MValue,
};
use hilbq::fock::{inner, jack, FockElement};
use hilbq::laurent::Laurent2;
use hilbq::linsolve::{linear_solve, SolveOutcome};
use hilbq::mpoly::{MPoly, Var};
use hilbq::nekrasov::{dual_partition_at, modular_example_check};
use hilbq::partitions::{charge, enumerate, Partition};
use hilbq::qseries::qmf_basis;
use hilbq::ratfun::RatFun;
use hilbq::rational::{rat, rat_i, Rat};
use hilbq::series::qq_inf;
use hilbq::vertex::{hook_side, main_identity_failures, tangent_character};
use hilbq::wedge::{
    alpha_fermionic, boson_alpha, h0_eigenvalue, phi_iso, psi, psi_star, sl2_matrix_combo,
    sl2_principal_action, BosonElement, PrincipalGen, WedgeVector,
};
use serde_json::{json, Value};

pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub details: Value,
}

impl CheckResult {
    fn pass(name: &'static str, details: Value) -> Self {
        CheckResult {
            name,
            pass: true,
            details,
        }
    }
    fn fail(name: &'static str, details: Value) -> Self {
        CheckResult {
            name,
            pass: false,
            details,
        }
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

/// Truncated staircase oracle for the tangent character; kept independent
/// of the closed-form implementation it is checking.
pub fn staircase_character(la: &Partition, mu: &Partition, win: i64) -> Laurent2 {
    let mu_t = mu.transpose();
    let reach = [
        la.len() as i64,
        la.part(1) as i64,
        mu_t.len() as i64,
        mu_t.part(1) as i64,
    ]
    .into_iter()
    .max()
    .unwrap();
    let m = win + reach + 2;
    let mut out = Laurent2::new();
    for i in 1..=m {
        for j in 1..=m {
            let a1 = la.part(i as u32) as i64 - j + 1;
            let a2 = i - mu_t.part(j as u32) as i64;
            if a1.abs() <= win && a2.abs() <= win {
                out.add_term(a1, a2, rat_i(1));
            }
            let b1 = 1 - j;
            let b2 = i;
            if b1.abs() <= win && b2.abs() <= win {
                out.add_term(b1, b2, rat_i(-1));
            }
        }
    }
    out
}

pub fn check_partitions_blend(max: u32) -> CheckResult {
    for n in 0..=max {
        for mu in enumerate(n) {
            let u = hilbq::partitions::unblend(&mu);
            if hilbq::partitions::blend(u.charge, &u.comp1, &u.comp2) != mu {
                return CheckResult::fail(
                    "partitions-blend-roundtrip",
                    json!({"counterexample": mu.to_string()}),
                );
            }
            let size = 2 * u.comp1.size() as i64
                + 2 * u.comp2.size() as i64
                + 2 * u.charge * u.charge
                + u.charge;
            if size != n as i64 {
                return CheckResult::fail(
                    "partitions-blend-roundtrip",
                    json!({"counterexample": mu.to_string(), "reason": "size relation"}),
                );
            }
            if h0_eigenvalue(0, &mu) != 2 * u.charge {
                return CheckResult::fail(
                    "partitions-blend-roundtrip",
                    json!({"counterexample": mu.to_string(), "reason": "charge vs h0"}),
                );
            }
        }
    }
    CheckResult::pass("partitions-blend-roundtrip", json!({"max_size": max}))
}

pub fn check_goettsche(max: u32) -> CheckResult {
    let gf = qq_inf(max as usize).inverse();
    for n in 0..=max {
        if gf.coeff(n as usize) != rat_i(enumerate(n).len() as i64) {
            return CheckResult::fail("goettsche-degeneration", json!({"n": n}));
        }
    }
    CheckResult::pass("goettsche-degeneration", json!({"max_size": max}))
}

pub fn check_linear_solve() -> CheckResult {
    // Vandermonde interpolation of m^2 on nodes 0, 1, 2
    let a: Vec<Vec<Rat>> = (0..3)
        .map(|x: i64| (0..3).map(|e| rat_i(x.pow(e as u32))).collect())
        .collect();
    let b = vec![rat_i(0), rat_i(1), rat_i(4)];
    let ok = linear_solve(&a, &b) == SolveOutcome::Unique(vec![rat_i(0), rat_i(0), rat_i(1)]);
    // inconsistency reporting
    let bad = linear_solve(&[vec![rat_i(1)], vec![rat_i(1)]], &[rat_i(1), rat_i(2)]);
    let ok = ok && bad == SolveOutcome::Inconsistent { row: 1 };
    if ok {
        CheckResult::pass("linear-solve", json!({}))
    } else {
        CheckResult::fail("linear-solve", json!({}))
    }
}

pub fn check_jack(max: u32) -> CheckResult {
    let t1 = MPoly::var(Var::T1);
    let t2 = MPoly::var(Var::T2);
    let j2 = jack(&p(&[2]));
    let fixtures_ok = j2.coeff(&p(&[1, 1])).as_poly() == Some(t1.pow(2).mul(&t2.pow(2)))
        && j2.coeff(&p(&[2])).as_poly() == Some(t1.pow(2).mul(&t2).neg())
        && jack(&p(&[1, 1])).coeff(&p(&[2])).as_poly() == Some(t1.mul(&t2.pow(2)).neg());
    if !fixtures_ok {
        return CheckResult::fail("jack-basis", json!({"reason": "degree-2 fixtures"}));
    }
    for n in 1..=max {
        let js: Vec<FockElement> = enumerate(n).iter().map(jack).collect();
        let p1n = FockElement::monomial(Partition::new(vec![1; n as usize]), RatFun::one());
        let mut nfact = rat_i(1);
        for k in 2..=n as i64 {
            nfact *= rat_i(k);
        }
        for (i, a) in js.iter().enumerate() {
            if inner(a, &p1n).as_constant() != Some(nfact.clone()) {
                return CheckResult::fail("jack-basis", json!({"reason": "normalization", "n": n}));
            }
            for b in js.iter().skip(i + 1) {
                if !inner(a, b).is_zero() {
                    return CheckResult::fail(
                        "jack-basis",
                        json!({"reason": "orthogonality", "n": n}),
                    );
                }
            }
        }
    }
    CheckResult::pass("jack-basis", json!({"max_size": max}))
}

pub fn check_main_identity(max_size: u32, diag: Option<u32>) -> CheckResult {
    let (pairs, failures) = main_identity_failures(max_size, diag);
    if failures.is_empty() {
        CheckResult::pass("main-identity", json!({"pairs_checked": pairs}))
    } else {
        CheckResult::fail(
            "main-identity",
            json!({
                "pairs_checked": pairs,
                "first_counterexample": {
                    "mu": failures[0].mu.to_string(),
                    "la": failures[0].la.to_string(),
                    "matrix_element": failures[0].matrix_element.to_string(),
                    "hook_product": failures[0].hook_product.to_string(),
                }
            }),
        )
    }
}

pub fn check_serre_duality(max_size: u32) -> CheckResult {
    let m = MPoly::var(Var::M);
    let t1 = MPoly::var(Var::T1);
    let t2 = MPoly::var(Var::T2);
    let neg_shift = m.neg().sub(&t1).sub(&t2);
    for a in 0..=max_size {
        for b in 0..=max_size {
            for mu in enumerate(a) {
                for la in enumerate(b) {
                    let lhs = hook_side(&mu, &la);
                    let sign = if (mu.size() + la.size()) % 2 == 0 {
                        rat_i(1)
                    } else {
                        rat_i(-1)
                    };
                    let rhs = hook_side(&la, &mu).subst(Var::M, &neg_shift).scale(&sign);
                    if lhs != rhs {
                        return CheckResult::fail(
                            "serre-duality",
                            json!({"mu": mu.to_string(), "la": la.to_string()}),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("serre-duality", json!({"max_size": max_size}))
}

pub fn check_tangent_oracle(max_size: u32) -> CheckResult {
    for a in 0..=max_size {
        for b in 0..=max_size {
            for mu in enumerate(a) {
                for la in enumerate(b) {
                    let win = [la.part(1), la.len() as u32, mu.part(1), mu.len() as u32]
                        .into_iter()
                        .max()
                        .unwrap() as i64
                        + 2;
                    let closed = tangent_character(&la, &mu);
                    if closed.window(-win, win) != closed
                        || closed != staircase_character(&la, &mu, win)
                    {
                        return CheckResult::fail(
                            "tangent-character-oracle",
                            json!({"mu": mu.to_string(), "la": la.to_string()}),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass("tangent-character-oracle", json!({"max_size": max_size}))
}

pub fn check_clifford(max_energy: u32, max_mode: i64) -> CheckResult {
    let mut vecs = Vec::new();
    for n in 0..=max_energy {
        for mu in enumerate(n) {
            vecs.push(WedgeVector::basis(0, mu));
        }
    }
    for i in -max_mode..=max_mode {
        for j in -max_mode..=max_mode {
            for w in &vecs {
                let anti = psi(i, &psi_star(j, w)).add(&psi_star(j, &psi(i, w)));
                let expect = if i == j {
                    w.clone()
                } else {
                    WedgeVector::zero()
                };
                if anti != expect {
                    return CheckResult::fail("clifford-relations", json!({"i": i, "j": j}));
                }
            }
        }
    }
    CheckResult::pass(
        "clifford-relations",
        json!({"max_energy": max_energy, "max_mode": max_mode}),
    )
}

pub fn check_boson_fermion(max_energy: u32, max_mode: i64) -> CheckResult {
    for n in 0..=max_energy {
        for mu in enumerate(n) {
            let mut b = BosonElement::new();
            b.insert(mu.clone(), rat_i(1));
            let w = phi_iso(&b);
            for k in 1..=max_mode {
                if phi_iso(&boson_alpha(-k, &b)) != alpha_fermionic(-k, &w)
                    || phi_iso(&boson_alpha(k, &b)) != alpha_fermionic(k, &w)
                {
                    return CheckResult::fail(
                        "boson-fermion-intertwine",
                        json!({"mu": mu.to_string(), "k": k}),
                    );
                }
            }
        }
    }
    CheckResult::pass(
        "boson-fermion-intertwine",
        json!({"max_energy": max_energy, "max_mode": max_mode}),
    )
}

pub fn check_pvoc(max_energy: u32) -> CheckResult {
    let mut gens = vec![PrincipalGen::TwoDPlusH0, PrincipalGen::K];
    for j in -2..=2i64 {
        gens.push(PrincipalGen::H(j));
    }
    for j in -2..=1i64 {
        gens.push(PrincipalGen::EPlusF(j));
        gens.push(PrincipalGen::EMinusF(j));
    }
    for n in 0..=max_energy {
        for mu in enumerate(n) {
            let w = WedgeVector::basis(0, mu.clone());
            for g in &gens {
                if sl2_matrix_combo(*g, &w) != sl2_principal_action(*g, &w, n + 10) {
                    return CheckResult::fail(
                        "principal-construction",
                        json!({"mu": mu.to_string(), "generator": format!("{:?}", g)}),
                    );
                }
            }
        }
    }
    // worked fixture
    let v1 = WedgeVector::basis(0, p(&[1]));
    if sl2_principal_action(PrincipalGen::H(0), &v1, 6) != v1.scale(&rat_i(-2)) {
        return CheckResult::fail("principal-construction", json!({"reason": "h0 fixture"}));
    }
    CheckResult::pass("principal-construction", json!({"max_energy": max_energy}))
}

pub fn check_charge_vs_h0(max: u32) -> CheckResult {
    for n in 0..=max {
        for mu in enumerate(n) {
            if h0_eigenvalue(0, &mu) != 2 * charge(&mu) {
                return CheckResult::fail("charge-vs-h0", json!({"mu": mu.to_string()}));
            }
        }
    }
    CheckResult::pass("charge-vs-h0", json!({"max_size": max}))
}

pub fn check_z_rank1(order: usize) -> CheckResult {
    let r = z_rank1(order);
    if r.equal {
        CheckResult::pass("rank1-partition-function", json!({"order": order}))
    } else {
        CheckResult::fail("rank1-partition-function", json!({"order": order}))
    }
}

pub fn check_f13_fixture() -> CheckResult {
    let spec = CorrelationSpec {
        ks: vec![1, 3],
        m: MValue::Symbolic,
        order: 3,
    };
    let f = localization_f(&spec);
    let m = MPoly::var(Var::M);
    let e2 = MPoly::int(2)
        .sub(&m.pow(2).scale(&rat(5, 2)))
        .add(&m.pow(4).scale(&rat(1, 2)));
    let e3 = MPoly::int(54)
        .sub(&m.pow(2).scale(&rat(147, 2)))
        .add(&m.pow(4).scale(&rat_i(21)))
        .sub(&m.pow(6).scale(&rat(3, 2)));
    if f.coeff(2) == e2 && f.coeff(3) == e3 {
        CheckResult::pass("correlation-f13-fixture", json!({}))
    } else {
        CheckResult::fail(
            "correlation-f13-fixture",
            json!({"q2": f.coeff(2).to_string(), "q3": f.coeff(3).to_string()}),
        )
    }
}

pub fn check_quasimodular(ks: Vec<u32>, guard: usize) -> CheckResult {
    let w = 2 * ks.len() as u32 + ks.iter().sum::<u32>();
    let order = qmf_basis(w).len() + guard;
    let spec = CorrelationSpec {
        ks: ks.clone(),
        m: MValue::Symbolic,
        order,
    };
    match quasimodular_report(&spec, guard) {
        Ok(r) if r.m_degree_ok => CheckResult::pass(
            "quasimodular-fit",
            json!({"ks": ks, "max_weight": w, "verified_orders": r.fit.verified_orders}),
        ),
        Ok(_) => CheckResult::fail("quasimodular-fit", json!({"ks": ks, "reason": "m-degree"})),
        Err(e) => CheckResult::fail(
            "quasimodular-fit",
            json!({"ks": ks, "reason": e.to_string()}),
        ),
    }
}

pub fn check_gtheta(ms: &[u32], q_order: usize, win: i64) -> CheckResult {
    for &m in ms {
        let r = gtheta_check(m, q_order, (-win, win));
        if !r.equal {
            return CheckResult::fail(
                "gtheta-trace",
                json!({"m": m, "first_mismatch": format!("{:?}", r.first_mismatch)}),
            );
        }
    }
    CheckResult::pass(
        "gtheta-trace",
        json!({"m_values": ms, "q_order": q_order, "window": win}),
    )
}

pub fn check_dual_partition(order: usize) -> CheckResult {
    let z = dual_partition_at(2, &rat_i(3), order);
    let expect: &[(usize, i64)] = &[(1, -16), (5, 128), (9, -320), (17, 1120), (21, -1024)];
    for n in 0..=order {
        let want = expect
            .iter()
            .find(|(i, _)| *i == n)
            .map(|(_, v)| rat_i(*v))
            .unwrap_or_else(|| rat_i(0));
        if z.coeff(n) != want {
            return CheckResult::fail(
                "dual-partition-z2",
                json!({"order": n, "got": z.coeff(n).to_string(), "want": want.to_string()}),
            );
        }
    }
    CheckResult::pass("dual-partition-z2", json!({"order": order}))
}

pub fn check_blending(max_blend_size: i64) -> CheckResult {
    let t = rat_i(1);
    for b in -2..=2i64 {
        let base = 2 * b * b + b;
        if base > max_blend_size {
            continue;
        }
        let rest = ((max_blend_size - base) / 2) as u32;
        for s1 in 0..=rest {
            for s2 in 0..=(rest - s1) {
                for mu1 in enumerate(s1) {
                    for mu2 in enumerate(s2) {
                        match hilbq::nekrasov::blending_identity_sides(b, &mu1, &mu2, &t) {
                            Ok((lhs, rhs)) if lhs == rhs => {}
                            _ => {
                                return CheckResult::fail(
                                    "rank2-blending-identity",
                                    json!({
                                        "b": b,
                                        "mu1": mu1.to_string(),
                                        "mu2": mu2.to_string()
                                    }),
                                )
                            }
                        }
                    }
                }
            }
        }
    }
    CheckResult::pass(
        "rank2-blending-identity",
        json!({"max_blend_size": max_blend_size}),
    )
}

pub fn check_modular_example(order: usize) -> CheckResult {
    let r = modular_example_check(order);
    if r.equal && r.net_shift == 1 {
        CheckResult::pass("modular-example", json!({"order": order}))
    } else {
        let first_bad = r.per_order.iter().position(|&b| !b);
        CheckResult::fail(
            "modular-example",
            json!({"order": order, "first_mismatch_order": first_bad}),
        )
    }
}

/// The full verification battery; `quick` shrinks bounds but covers every
/// module.
pub fn verify_all(quick: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if quick {
        out.push(check_partitions_blend(8));
        out.push(check_goettsche(10));
        out.push(check_linear_solve());
        out.push(check_jack(4));
        out.push(check_main_identity(3, None));
        out.push(check_serre_duality(3));
        out.push(check_tangent_oracle(3));
        out.push(check_clifford(5, 4));
        out.push(check_boson_fermion(4, 3));
        out.push(check_pvoc(4));
        out.push(check_charge_vs_h0(8));
        out.push(check_z_rank1(6));
        out.push(check_f13_fixture());
        out.push(check_quasimodular(vec![2], 5));
        out.push(check_gtheta(&[2], 3, 4));
        out.push(check_dual_partition(9));
        out.push(check_blending(6));
        out.push(check_modular_example(6));
    } else {
        out.push(check_partitions_blend(12));
        out.push(check_goettsche(12));
        out.push(check_linear_solve());
        out.push(check_jack(6));
        out.push(check_main_identity(4, Some(5)));
        out.push(check_serre_duality(4));
        out.push(check_tangent_oracle(5));
        out.push(check_clifford(8, 6));
        out.push(check_boson_fermion(6, 4));
        out.push(check_pvoc(6));
        out.push(check_charge_vs_h0(10));
        out.push(check_z_rank1(10));
        out.push(check_f13_fixture());
        out.push(check_quasimodular(vec![1, 3], 5));
        out.push(check_quasimodular(vec![2], 5));
        out.push(check_gtheta(&[0, 2, 3], 4, 6));
        out.push(check_dual_partition(21));
        out.push(check_blending(8));
        out.push(check_modular_example(6));
    }
    out
}
