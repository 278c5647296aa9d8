//! `hooklab`: verify hook-length expansions, expand eta-power series, and
//! explore the core bijections from the command line.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hooklab::compact::{compact_lemma_check, CompactSet};
use hooklab::cores::{
    dd_to_pair, dd_weight, delta_profile, gks_phi, gks_phi_inv, gks_weight, pair_to_dd,
    pair_weight, phi1, phi1_inv, phi2, phi2_inv, sc_weight, varphi, varphi_inv, CoreVector,
    PairScDd,
};
use hooklab::hooks::{
    genfunc_pair, no_rhs, pair_rhs, symplectic_hook_sum, symplectic_target, type_c_rhs, GenfuncMode,
};
use hooklab::macdonald::{macdonald_series, verify_macdonald, Family};
use hooklab::partition::parse_int_list;
use hooklab::sampling::seeded;
use hooklab::series::{
    eta_power, exponent_string, fraction_string, poly_identity_check, power_product, Series,
};
use hooklab::{Check, Error, Partition, Report, Status};

#[derive(Parser)]
#[command(
    name = "hooklab",
    version,
    about = "Exact hook-length expansions of eta powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order N (coefficients through x^N).
    #[arg(
        long,
        global = true,
        env = "HOOKLAB_ORDER_DEFAULT",
        default_value_t = 10
    )]
    order: usize,

    /// Output format; defaults to json for `verify` and text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum number of worker threads for sample-point evaluation.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Report runtime_ms as 0 so that reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity and print a report.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Print a truncated series, one `exponent<TAB>coefficient` line per term.
    Expand {
        #[command(subcommand)]
        expr: ExpandExpr,
    },
    /// Apply one of the core bijections.
    Bijection {
        #[command(subcommand)]
        which: BijectionKind,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Hook sum with factors (1 - z/h^2) against the product with exponent z-1;
    /// without --z, as a polynomial identity in z.
    No {
        #[arg(long, allow_hyphen_values = true)]
        z: Option<i64>,
    },
    /// Signed doubled distinct hook sum against the product with exponent
    /// 2t^2+t; without --t, as a polynomial identity in t.
    TypeC {
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
    },
    /// Principal-hook pair sum against the product and the doubled distinct sum.
    Pair {
        #[arg(long, default_value_t = 2)]
        t: i64,
    },
    /// Lattice sum of the given affine type against its eta power.
    Macdonald {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        t: usize,
    },
    /// Sum of 1/prod(hooks) over doubled distinct partitions of 2n.
    HookFormula {
        #[arg(long)]
        n: usize,
    },
    /// Core-pair generating function: enumeration against the product form
    /// (modulus t+1).
    Genfunc {
        #[arg(long)]
        t: usize,
    },
    /// Product identity for a compact set given by --set, or for --samples
    /// seeded random compact sets.
    CompactLemma {
        #[arg(long)]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Largest positive element in random sets.
        #[arg(long, default_value_t = 40)]
        max_positive: i64,
    },
}

#[derive(Subcommand)]
enum ExpandExpr {
    /// eta(x)^e.
    EtaPower {
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
    },
    /// Hook sum with factors (1 - z/h^2).
    NoRhs {
        #[arg(long, allow_hyphen_values = true)]
        z: i64,
    },
    /// Signed doubled distinct hook sum with parameter t.
    TypeCRhs {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Normalized lattice sum of the given affine type.
    Macdonald {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Args)]
struct PartitionArg {
    /// Comma-separated non-increasing parts, e.g. 7,5,3,1,1.
    #[arg(long)]
    partition: String,
    /// Modulus.
    #[arg(long)]
    t: usize,
}

#[derive(Args)]
struct VectorArg {
    /// Comma-separated integers, e.g. 3,-2,-1.
    #[arg(long, allow_hyphen_values = true)]
    vector: String,
    #[arg(long)]
    t: usize,
}

#[derive(Args)]
struct PairArg {
    /// Self-conjugate partition.
    #[arg(long)]
    lambda: String,
    /// Doubled distinct partition.
    #[arg(long)]
    mu: String,
}

#[derive(Subcommand)]
enum BijectionKind {
    /// t-core to its vector (modulus --t).
    Gks(PartitionArg),
    /// Vector with zero sum to its t-core.
    GksInv(VectorArg),
    /// Self-conjugate t-core to its half vector.
    Phi1(PartitionArg),
    Phi1Inv(VectorArg),
    /// Doubled distinct t-core to its half vector.
    Phi2(PartitionArg),
    Phi2Inv(VectorArg),
    /// Pair of (t+1)-cores to a vector of length t (--t is the rank).
    Varphi {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long)]
        t: usize,
    },
    /// Vector of length t to a pair of (t+1)-cores.
    VarphiInv(VectorArg),
    /// Pair to the doubled distinct partition with twice its principal hooks.
    PairToDd(PairArg),
    /// Doubled distinct partition back to its pair.
    DdToPair {
        #[arg(long)]
        partition: String,
    },
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    s.parse::<Partition>().map_err(UsageError::from)
}

fn parse_vector(s: &str) -> Result<Vec<i64>, UsageError> {
    parse_int_list(s).map_err(UsageError::from)
}

fn series_json(s: &Series) -> Value {
    let terms: Vec<Value> = (0..=s.order())
        .map(|k| {
            json!({
                "exponent": exponent_string(&s.exponent(k)),
                "coefficient": fraction_string(s.coeff(k)),
            })
        })
        .collect();
    json!({
        "offset": exponent_string(s.offset()),
        "order": s.order(),
        "terms": terms,
    })
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => {
            let status = match report.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Error => "error",
            };
            let mut out = format!("command: {}\nstatus: {status}\n", report.command);
            for c in &report.checks {
                let mark = if c.equal { "ok" } else { "MISMATCH" };
                out.push_str(&format!(
                    "[{mark}] {}: expected {}, actual {}\n",
                    c.name, c.expected, c.actual
                ));
            }
            out.push_str(&format!("runtime_ms: {}", report.runtime_ms));
            out
        }
    }
}

fn identity_check(report: &mut Report, label: &str, r: hooklab::series::PolyIdentityReport) {
    let expected = format!(
        "agreement at {} points through x^{}",
        r.samples.len(),
        r.order
    );
    let actual = match &r.mismatch {
        None => expected.clone(),
        Some(m) => format!(
            "{label}={} differs at x^{}: {} vs {}",
            m.param, m.index, m.lhs, m.rhs
        ),
    };
    report.push(Check::with_outcome(
        format!(
            "polynomial identity in {label} (degree bound {})",
            r.degree_bound
        ),
        expected,
        actual,
        r.passed(),
    ));
}

fn run_verify(target: &VerifyTarget, cli: &Cli) -> Result<Report, UsageError> {
    let order = cli.order;
    let report = match *target {
        VerifyTarget::No { z } => {
            let mut report = Report::new(match z {
                Some(z) => format!("verify no --z {z} --order {order}"),
                None => format!("verify no --order {order}"),
            });
            match z {
                Some(z) => report.compare_series(
                    "hook sum",
                    &power_product(z - 1, order),
                    &no_rhs(z, order),
                ),
                None => identity_check(
                    &mut report,
                    "z",
                    poly_identity_check(
                        |z| no_rhs(z, order),
                        |z| power_product(z - 1, order),
                        order,
                        |m| m,
                    ),
                ),
            }
            report
        }
        VerifyTarget::TypeC { t } => {
            let mut report = Report::new(match t {
                Some(t) => format!("verify type-c --t {t} --order {order}"),
                None => format!("verify type-c --order {order}"),
            });
            match t {
                Some(t) => report.compare_series(
                    "doubled distinct sum",
                    &power_product(2 * t * t + t, order),
                    &type_c_rhs(t, order),
                ),
                None => identity_check(
                    &mut report,
                    "t",
                    poly_identity_check(
                        |t| type_c_rhs(t, order),
                        |t| power_product(2 * t * t + t, order),
                        order,
                        |m| 2 * m,
                    ),
                ),
            }
            report
        }
        VerifyTarget::Pair { t } => {
            if t < 2 {
                return Err(UsageError(format!(
                    "pair sums are checked for t >= 2, got {t}"
                )));
            }
            let mut report = Report::new(format!("verify pair --t {t} --order {order}"));
            let full = pair_rhs(t, order, false);
            report.compare_series(
                "pair sum vs product",
                &power_product(2 * t * t + t, order),
                &full,
            );
            report.compare_series("core pairs only", &full, &pair_rhs(t, order, true));
            report.compare_series("doubled distinct sum", &type_c_rhs(t, order), &full);
            report
        }
        VerifyTarget::Macdonald { family, t } => verify_macdonald(family, t, order)?,
        VerifyTarget::HookFormula { n } => {
            if n == 0 {
                return Err(UsageError("--n must be at least 1".into()));
            }
            let mut report = Report::new(format!("verify hook-formula --n {n}"));
            report.push(Check::rational(
                format!("sum over doubled distinct partitions of {}", 2 * n),
                &symplectic_target(n),
                &symplectic_hook_sum(n),
            ));
            report
        }
        VerifyTarget::Genfunc { t } => {
            let modulus = t + 1;
            let mut report = Report::new(format!("verify genfunc --t {t} --order {order}"));
            report.compare_series(
                "core pairs",
                &genfunc_pair(modulus, order, GenfuncMode::Product)?,
                &genfunc_pair(modulus, order, GenfuncMode::Enumerate)?,
            );
            report
        }
        VerifyTarget::CompactLemma {
            t,
            ref set,
            samples,
            max_positive,
        } => match set {
            Some(s) => {
                let set = CompactSet::new(t, parse_vector(s)?)?;
                let mut report = compact_lemma_check(&set);
                report.command = format!("verify compact-lemma --t {t} --set {s}");
                report
            }
            None => {
                if max_positive < 1 {
                    return Err(UsageError("--max-positive must be at least 1".into()));
                }
                let mut rng = seeded(cli.seed);
                let mut report = Report::new(format!(
                    "verify compact-lemma --t {t} --samples {samples} --seed {}",
                    cli.seed
                ));
                let mut passed = 0;
                for _ in 0..samples {
                    let set = CompactSet::random(t, max_positive, &mut rng);
                    let check = compact_lemma_check(&set);
                    if check.passed() {
                        passed += 1;
                    } else {
                        report.extend(check);
                    }
                }
                report.push(Check::new(
                    "random compact sets satisfying the identity",
                    samples,
                    passed,
                ));
                report
            }
        },
    };
    Ok(report)
}

fn run_expand(expr: &ExpandExpr, order: usize) -> Result<Series, UsageError> {
    Ok(match *expr {
        ExpandExpr::EtaPower { e } => eta_power(e, order),
        ExpandExpr::NoRhs { z } => no_rhs(z, order),
        ExpandExpr::TypeCRhs { t } => type_c_rhs(t, order),
        ExpandExpr::Macdonald { family, t } => macdonald_series(family, t, order)?,
    })
}

fn vector_output(v: &CoreVector, input: &str, weight: usize, law: i64) -> (Value, String) {
    let ok = weight as i64 == law;
    let text = format!(
        "{v}\nweight {weight}, weight law {law} [{}]",
        if ok { "ok" } else { "MISMATCH" }
    );
    let value = json!({
        "input": input,
        "image": v.to_string(),
        "weight": weight,
        "weight_law": law,
        "weight_law_holds": ok,
    });
    (value, text)
}

fn partition_output(p: &Partition, input: &str, law: i64) -> (Value, String) {
    let ok = p.weight() as i64 == law;
    let text = format!(
        "{p}\nweight {}, weight law {law} [{}]",
        p.weight(),
        if ok { "ok" } else { "MISMATCH" }
    );
    let value = json!({
        "input": input,
        "image": p.to_string(),
        "weight": p.weight(),
        "weight_law": law,
        "weight_law_holds": ok,
    });
    (value, text)
}

fn pair_output(pair: &PairScDd, input: &str, t: Option<usize>, law: i64) -> (Value, String) {
    let ok = pair.weight() as i64 == law;
    let text = format!(
        "lambda {}\nmu {}\nweight {}, weight law {law} [{}]",
        pair.lambda(),
        pair.mu(),
        pair.weight(),
        if ok { "ok" } else { "MISMATCH" }
    );
    let value = json!({
        "input": input,
        "t": t,
        "lambda": pair.lambda().to_string(),
        "mu": pair.mu().to_string(),
        "weight": pair.weight(),
        "weight_law": law,
        "weight_law_holds": ok,
    });
    (value, text)
}

/// Returns (structured, text, weight law holds).
fn run_bijection(which: &BijectionKind) -> Result<(Value, String, bool), UsageError> {
    let (value, text) = match which {
        BijectionKind::Gks(a) => {
            let p = parse_partition(&a.partition)?;
            let v = gks_phi(&p, a.t)?;
            vector_output(&v, &a.partition, p.weight(), gks_weight(&v.entries, a.t))
        }
        BijectionKind::GksInv(a) => {
            let v = parse_vector(&a.vector)?;
            let p = gks_phi_inv(&v, a.t)?;
            partition_output(&p, &a.vector, gks_weight(&v, a.t))
        }
        BijectionKind::Phi1(a) => {
            let p = parse_partition(&a.partition)?;
            let v = phi1(&p, a.t)?;
            vector_output(&v, &a.partition, p.weight(), sc_weight(&v.entries, a.t))
        }
        BijectionKind::Phi1Inv(a) => {
            let v = parse_vector(&a.vector)?;
            let p = phi1_inv(&v, a.t)?;
            partition_output(&p, &a.vector, sc_weight(&v, a.t))
        }
        BijectionKind::Phi2(a) => {
            let p = parse_partition(&a.partition)?;
            let v = phi2(&p, a.t)?;
            vector_output(&v, &a.partition, p.weight(), dd_weight(&v.entries, a.t))
        }
        BijectionKind::Phi2Inv(a) => {
            let v = parse_vector(&a.vector)?;
            let p = phi2_inv(&v, a.t)?;
            partition_output(&p, &a.vector, dd_weight(&v, a.t))
        }
        BijectionKind::Varphi { pair, t } => {
            let input = format!("{}; {}", pair.lambda, pair.mu);
            let pair = PairScDd::new(parse_partition(&pair.lambda)?, parse_partition(&pair.mu)?)?;
            let v = varphi(&pair, *t)?;
            let (mut value, mut text) =
                vector_output(&v, &input, pair.weight(), pair_weight(&v.entries, *t));
            let profile = delta_profile(&pair, *t);
            let m = *t as i64 + 1;
            let mut rows = Vec::new();
            text.push_str("\ni\tDelta_i\tsigma_i\tt+1+Delta_i\tsigma_i((2t+2)n_i+i)");
            for (k, (&d, s)) in profile.delta_i.iter().zip(&profile.sigma).enumerate() {
                let i = k as i64 + 1;
                let lhs = m + d;
                let rhs = s.to_i64() * (2 * m * v.entries[k] + i);
                text.push_str(&format!("\n{i}\t{d}\t{s}\t{lhs}\t{rhs}"));
                rows.push(json!({
                    "i": i,
                    "delta_i": d,
                    "sigma_i": s.to_i64(),
                    "t_plus_1_plus_delta_i": lhs,
                    "sigma_i_times_v_i": rhs,
                    "holds": lhs == rhs,
                }));
            }
            value["principal_hooks"] = json!(profile.delta);
            value["delta_table"] = Value::Array(rows);
            (value, text)
        }
        BijectionKind::VarphiInv(a) => {
            let v = parse_vector(&a.vector)?;
            let pair = varphi_inv(&v, a.t)?;
            pair_output(&pair, &a.vector, Some(a.t), pair_weight(&v, a.t))
        }
        BijectionKind::PairToDd(a) => {
            let pair = PairScDd::new(parse_partition(&a.lambda)?, parse_partition(&a.mu)?)?;
            let nu = pair_to_dd(&pair);
            let law = 2 * pair.weight() as i64;
            partition_output(&nu, &format!("{}; {}", a.lambda, a.mu), law)
        }
        BijectionKind::DdToPair { partition } => {
            let nu = parse_partition(partition)?;
            let pair = dd_to_pair(&nu)?;
            pair_output(&pair, partition, None, nu.weight() as i64 / 2)
        }
    };
    let holds = value["weight_law_holds"].as_bool().unwrap_or(true)
        && value["delta_table"]
            .as_array()
            .is_none_or(|rows| rows.iter().all(|r| r["holds"] == json!(true)));
    Ok((value, text, holds))
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as success.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn invocation() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }

    match &cli.command {
        Command::Verify { target } => {
            let format = cli.format.unwrap_or(Format::Json);
            let start = Instant::now();
            match run_verify(target, &cli) {
                Ok(mut report) => {
                    report.runtime_ms = if cli.no_timing {
                        0
                    } else {
                        start.elapsed().as_millis() as u64
                    };
                    emit(&format!("{}\n", render_report(&report, format)));
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(UsageError(msg)) => {
                    emit(&format!(
                        "{}\n",
                        render_report(&Report::error(invocation(), &msg), format)
                    ));
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Expand { expr } => match run_expand(expr, cli.order) {
            Ok(series) => {
                match cli.format.unwrap_or(Format::Text) {
                    Format::Text => emit(&series.to_text()),
                    Format::Json => emit(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&series_json(&series)).unwrap()
                    )),
                }
                ExitCode::SUCCESS
            }
            Err(UsageError(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Command::Bijection { which } => match run_bijection(which) {
            Ok((value, text, holds)) => {
                match cli.format.unwrap_or(Format::Text) {
                    Format::Text => emit(&format!("{text}\n")),
                    Format::Json => emit(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&value).unwrap()
                    )),
                }
                if holds {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(UsageError(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
    }
}
