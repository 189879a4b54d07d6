//! Command-line driver: every verification suite and computation of the
//! library as a subcommand with deterministic JSON output.
//!
//! All exact numbers are emitted as strings; repeated runs with identical
//! flags produce byte-identical JSON, independent of `--jobs`.

mod checks;

use clap::{Args, Parser, Subcommand};
use hilbq::correlators::{
    gtheta_check, localization_f, quasimodular_report, CorrelationSpec, MValue,
};
use hilbq::fock::jack;
use hilbq::mpoly::MPoly;
use hilbq::nekrasov::{dual_partition, modular_example_check};
use hilbq::partitions::Partition;
use hilbq::qseries::{eisenstein, fit_series_rat, qmf_basis};
use hilbq::rational::{parse_rat, rat_string, Rat};
use hilbq::series::Series;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hilbq",
    version,
    about = "exact Hilbert-scheme q-series toolkit"
)]
struct Cli {
    /// Worker threads for partition sweeps (output is independent of this).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Include wall-clock timings (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the vertex-operator matrix elements against hook products.
    Identity(IdentityArgs),
    /// Print an integral-form Jack polynomial in the power-sum basis.
    Jack(JackArgs),
    /// Correlation series by localization, optionally with a quasimodular fit.
    Correlation(CorrelationArgs),
    /// Fit a rational q-series into the quasimodular basis.
    Fit(FitArgs),
    /// Boson-fermion and affine sl2 agreement suites.
    WedgeCheck(WedgeArgs),
    /// Dual partition function coefficients, or the modular fixture check.
    Nekrasov(NekrasovArgs),
    /// Diagonal trace vs theta-product form for integer mass.
    Gtheta(GthetaArgs),
    /// Run every module's invariant suite.
    VerifyAll(VerifyArgs),
}

#[derive(Args)]
struct IdentityArgs {
    /// Check all pairs with |mu|, |la| up to this size.
    #[arg(long, default_value_t = 3)]
    max_size: u32,
    /// Additionally check all pairs of exactly this common size.
    #[arg(long)]
    diag_size: Option<u32>,
}

#[derive(Args)]
struct JackArgs {
    /// Partition, e.g. "2,1" ("-" for the empty partition).
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct CorrelationArgs {
    /// Comma-separated insertion orders, e.g. "1,3".
    #[arg(long, value_delimiter = ',')]
    ks: Vec<u32>,
    #[arg(long, default_value_t = 6)]
    order: usize,
    /// Numeric mass value (rational, e.g. "3" or "1/2"); symbolic if absent.
    #[arg(long)]
    m: Option<String>,
    /// Also fit F/Z into the quasimodular basis.
    #[arg(long)]
    fit: bool,
    /// Basis weight bound for --fit; defaults to 2N + sum(k).
    #[arg(long)]
    max_weight: Option<u32>,
    /// Guard orders verified beyond the solve window.
    #[arg(long, default_value_t = 5)]
    guard: usize,
}

#[derive(Args)]
struct FitArgs {
    /// Path to a file of rational coefficients (whitespace or line
    /// separated, q^0 first), or "builtin:e2" / "builtin:e4" / "builtin:e6".
    #[arg(long)]
    series: String,
    #[arg(long)]
    max_weight: u32,
    /// Truncation order of the series to use.
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = 5)]
    guard: usize,
}

#[derive(Args)]
struct WedgeArgs {
    /// Energy bound for the agreement sweeps.
    #[arg(long, default_value_t = 5)]
    energy: u32,
}

#[derive(Args)]
struct NekrasovArgs {
    /// zeta-coefficient index of the dual partition function.
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Mass value (rational); symbolic if absent.
    #[arg(long)]
    m: Option<String>,
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Run the modular fixture comparison instead of printing a series.
    #[arg(long)]
    check_modular: bool,
}

#[derive(Args)]
struct GthetaArgs {
    /// Integer mass value.
    #[arg(long, default_value_t = 2)]
    m: u32,
    #[arg(long, default_value_t = 3)]
    order: usize,
    /// Half-width of the symmetric x-exponent window.
    #[arg(long, default_value_t = 4)]
    window: i64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Reduced bounds for a fast end-to-end pass.
    #[arg(long)]
    quick: bool,
}

fn series_to_json(s: &Series<MPoly>) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn emit(mut doc: Map<String, Value>, pretty: bool, timings: Option<f64>) {
    doc.insert(
        "version".into(),
        Value::String(env!("CARGO_PKG_VERSION").into()),
    );
    if let Some(t) = timings {
        doc.insert("elapsed_seconds".into(), json!(t));
    }
    let v = Value::Object(doc);
    let out = if pretty {
        serde_json::to_string_pretty(&v).unwrap()
    } else {
        serde_json::to_string(&v).unwrap()
    };
    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "{}", out).unwrap();
}

fn run(cli: Cli) -> Result<bool, String> {
    let start = std::time::Instant::now();
    let mut doc = Map::new();
    let mut all_pass = true;
    match &cli.command {
        Command::Identity(a) => {
            doc.insert("command".into(), json!("identity"));
            doc.insert(
                "config".into(),
                json!({"max_size": a.max_size, "diag_size": a.diag_size}),
            );
            let (pairs, failures) = hilbq::vertex::main_identity_failures(a.max_size, a.diag_size);
            all_pass = failures.is_empty();
            doc.insert("pairs_checked".into(), json!(pairs));
            doc.insert(
                "failures".into(),
                Value::Array(
                    failures
                        .iter()
                        .map(|f| {
                            json!({
                                "mu": f.mu.to_string(),
                                "la": f.la.to_string(),
                                "matrix_element": f.matrix_element.to_string(),
                                "hook_product": f.hook_product.to_string(),
                            })
                        })
                        .collect(),
                ),
            );
            doc.insert("pass".into(), json!(all_pass));
        }
        Command::Jack(a) => {
            let mu = Partition::parse(&a.mu).ok_or_else(|| format!("bad partition: {}", a.mu))?;
            doc.insert("command".into(), json!("jack"));
            doc.insert("config".into(), json!({"mu": mu.to_string()}));
            doc.insert("jack".into(), jack(&mu).to_json());
        }
        Command::Correlation(a) => {
            let mvalue = match &a.m {
                Some(s) => {
                    MValue::Numeric(parse_rat(s).ok_or_else(|| format!("bad rational: {}", s))?)
                }
                None => MValue::Symbolic,
            };
            let spec = CorrelationSpec {
                ks: a.ks.clone(),
                m: mvalue,
                order: a.order,
            };
            doc.insert("command".into(), json!("correlation"));
            doc.insert(
                "config".into(),
                json!({"ks": a.ks, "order": a.order, "m": a.m, "guard": a.guard}),
            );
            let f = localization_f(&spec);
            doc.insert("coefficients".into(), series_to_json(&f));
            if a.fit {
                let w = a
                    .max_weight
                    .unwrap_or(2 * a.ks.len() as u32 + a.ks.iter().sum::<u32>());
                let dim = qmf_basis(w).len();
                let needed = dim + a.guard;
                if a.order + 1 < needed {
                    return Err(format!(
                        "--fit needs --order at least {} for weight {}",
                        needed - 1,
                        w
                    ));
                }
                let symbolic_spec = CorrelationSpec {
                    ks: a.ks.clone(),
                    m: MValue::Symbolic,
                    order: a.order,
                };
                match quasimodular_report(&symbolic_spec, a.guard) {
                    Ok(r) => {
                        let mut fitmap = Map::new();
                        for (mono, coeff) in r.fit.nonzero() {
                            fitmap.insert(mono.to_string(), Value::String(coeff.to_string()));
                        }
                        doc.insert("fit".into(), Value::Object(fitmap));
                        doc.insert("max_weight".into(), json!(r.max_weight));
                        doc.insert("m_degree_ok".into(), json!(r.m_degree_ok));
                        doc.insert("verified_orders".into(), json!(r.fit.verified_orders));
                        all_pass = r.m_degree_ok;
                    }
                    Err(e) => {
                        doc.insert("fit_error".into(), json!(e.to_string()));
                        all_pass = false;
                    }
                }
                doc.insert("pass".into(), json!(all_pass));
            }
        }
        Command::Fit(a) => {
            doc.insert("command".into(), json!("fit"));
            doc.insert(
                "config".into(),
                json!({"series": a.series, "max_weight": a.max_weight, "order": a.order, "guard": a.guard}),
            );
            let series: Series<Rat> = if let Some(name) = a.series.strip_prefix("builtin:") {
                match name {
                    "e2" => eisenstein(2, a.order),
                    "e4" => eisenstein(4, a.order),
                    "e6" => eisenstein(6, a.order),
                    other => return Err(format!("unknown builtin series: {}", other)),
                }
            } else {
                let text = std::fs::read_to_string(&a.series)
                    .map_err(|e| format!("cannot read {}: {}", a.series, e))?;
                let coeffs: Result<Vec<Rat>, String> = text
                    .split_whitespace()
                    .map(|tok| parse_rat(tok).ok_or_else(|| format!("bad rational: {}", tok)))
                    .collect();
                let mut coeffs = coeffs?;
                if coeffs.is_empty() {
                    return Err("empty series file".into());
                }
                coeffs.truncate(a.order + 1);
                Series::from_coeffs(coeffs)
            };
            match fit_series_rat(&series, a.max_weight, a.guard) {
                Ok(fit) => {
                    let mut fitmap = Map::new();
                    for (mono, coeff) in fit.nonzero() {
                        fitmap.insert(mono.to_string(), Value::String(coeff.to_string()));
                    }
                    doc.insert("fit".into(), Value::Object(fitmap));
                    doc.insert("verified_orders".into(), json!(fit.verified_orders));
                    doc.insert("pass".into(), json!(true));
                }
                Err(e) => {
                    doc.insert("fit_error".into(), json!(e.to_string()));
                    doc.insert("pass".into(), json!(false));
                    all_pass = false;
                }
            }
        }
        Command::WedgeCheck(a) => {
            doc.insert("command".into(), json!("wedge-check"));
            doc.insert("config".into(), json!({"energy": a.energy}));
            let results = vec![
                checks::check_clifford(a.energy.min(8), 5),
                checks::check_boson_fermion(a.energy, 4),
                checks::check_pvoc(a.energy),
                checks::check_charge_vs_h0(a.energy + 2),
            ];
            all_pass = results.iter().all(|r| r.pass);
            doc.insert("checks".into(), checks_json(&results));
            doc.insert("pass".into(), json!(all_pass));
        }
        Command::Nekrasov(a) => {
            doc.insert("command".into(), json!("nekrasov"));
            if a.check_modular {
                let order = a.order.min(6);
                doc.insert(
                    "config".into(),
                    json!({"check_modular": true, "order": order}),
                );
                let r = modular_example_check(order);
                all_pass = r.equal;
                doc.insert("eta_prefactor".into(), json!(rat_string(&r.eta_prefactor)));
                doc.insert("net_shift".into(), json!(r.net_shift));
                doc.insert(
                    "lhs".into(),
                    Value::Array(r.lhs.iter().map(|c| Value::String(rat_string(c))).collect()),
                );
                doc.insert(
                    "rhs".into(),
                    Value::Array(r.rhs.iter().map(|c| Value::String(rat_string(c))).collect()),
                );
                doc.insert("pass".into(), json!(all_pass));
            } else {
                let mvalue = match &a.m {
                    Some(s) => {
                        MValue::Numeric(parse_rat(s).ok_or_else(|| format!("bad rational: {}", s))?)
                    }
                    None => MValue::Symbolic,
                };
                doc.insert(
                    "config".into(),
                    json!({"k": a.k, "m": a.m, "order": a.order}),
                );
                let z = dual_partition(a.k, &mvalue, a.order);
                doc.insert("coefficients".into(), series_to_json(&z));
            }
        }
        Command::Gtheta(a) => {
            doc.insert("command".into(), json!("gtheta"));
            doc.insert(
                "config".into(),
                json!({"m": a.m, "order": a.order, "window": a.window}),
            );
            let r = gtheta_check(a.m, a.order, (-a.window, a.window));
            all_pass = r.equal;
            doc.insert("per_order".into(), json!(r.per_order));
            doc.insert(
                "first_mismatch".into(),
                match r.first_mismatch {
                    Some((n, e)) => json!({"q_order": n, "x_exponent": e}),
                    None => Value::Null,
                },
            );
            doc.insert("pass".into(), json!(all_pass));
        }
        Command::VerifyAll(a) => {
            doc.insert("command".into(), json!("verify-all"));
            doc.insert("config".into(), json!({"quick": a.quick}));
            let results = checks::verify_all(a.quick);
            all_pass = results.iter().all(|r| r.pass);
            doc.insert("checks".into(), checks_json(&results));
            doc.insert("checks_run".into(), json!(results.len()));
            doc.insert("pass".into(), json!(all_pass));
        }
    }
    let elapsed = cli.timings.then(|| start.elapsed().as_secs_f64());
    emit(doc, cli.pretty, elapsed);
    Ok(all_pass)
}

fn checks_json(results: &[checks::CheckResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "pass": r.pass,
                    "details": r.details,
                })
            })
            .collect(),
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
