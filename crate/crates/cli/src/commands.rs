//! Argument definitions and command execution. Commands render to strings
//! so they can be driven from tests as well as from the binary.

use std::fmt::Display;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use revring::bezout::{
    dh_build_check, factorization_equal, gcd_lcm, principal_generator, BezoutError, DHNorm,
    Factorize,
};
use revring::ideal::{
    classify_ideal, ideal_correspondence, ideal_quotient, principal, radical, FgIdeal, IdealError,
};
use revring::lab::{
    block_merge_poset, dense_set_build, dominating_f, parse_schedule, parse_schedules,
    priority_merge, zorn_greedy_chain, FnOrder, LabError, LinearRingElement, MonomialChain,
    ScheduleError, StageEnumeration,
};
use revring::pid_t::{
    normal_form, pi2_simulate, t_divides, t_principal_generator, t_quotient, Pi2Status, PidTError,
    TElement,
};
use revring::poly::factor::{factor_over_q, factor_over_z, FactorConfig};
use revring::poly::univariate::{divide_long, divide_matrix};
use revring::poly::{ExponentVector, PolyError};
use revring::ring::{EuclideanDomain, Integers, QPoly, RingError, RingId};
use revring::{Element, MultiPoly};

use crate::suites::{default_scale, run_suite, UnknownSuite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Bezout(#[from] BezoutError),
    #[error(transparent)]
    PidT(#[from] PidTError),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error(transparent)]
    UnknownSuite(#[from] UnknownSuite),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// What a command prints, and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn json(v: Value) -> Self {
        Self::ok(serde_json::to_string_pretty(&v).expect("json value"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "revring",
    version,
    about = "Exact commutative algebra and stage-based simulations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Over {
    Z,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Long,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChainShape {
    /// `I_k = (x_0, ..., x_{k/step})`
    Prefix,
    /// `I_k = (x_i x_{i+1} : i <= k/step)`
    Pairs,
    /// `I_k = (x_0 x_{i+1}^2 : i <= k/step)`
    Powers,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor a polynomial in x0 over Z or Q.
    Factor {
        poly: String,
        #[arg(long, value_enum, default_value = "q")]
        over: Over,
    },
    /// Gcd and lcm of two elements of Z or Q[x].
    Gcd {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Gcd of a generator list with coefficients d = sum a_i c_i.
    Bezout {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// Divide p by d in Q[x].
    Divide {
        #[arg(long, value_enum, default_value = "long")]
        method: Method,
        p: String,
        d: String,
    },
    /// The norm 1 + Ω on Z or Q[x]; with --check, the norm axioms on the given sample.
    Dhnorm {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long)]
        check: bool,
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Whether two factor lists agree up to order and units.
    FactorCompare {
        #[arg(long, default_value = "Q[x]")]
        ring: String,
        /// Semicolon-separated factors.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Ideal operations with JSON output.
    #[command(subcommand)]
    Ideal(IdealOp),
    /// The PID T of fractions with denominators in M.
    #[command(subcommand, name = "pid-t")]
    PidT(PidTOp),
    /// Stage-by-stage simulations; prints `stage <s>: <event>` lines.
    #[command(subcommand)]
    Lab(LabOp),
    /// Run a seeded acceptance suite; JSON report on stdout.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        scale: Option<u64>,
    },
}

#[derive(Debug, clap::Args)]
pub struct IdealArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub gens: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum IdealOp {
    Radical(IdealArgs),
    Classify(IdealArgs),
    Quotient {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        by: String,
    },
    /// Ideals of Z/n against the ideals dZ containing nZ.
    Correspond {
        #[arg(long)]
        ring: String,
        #[arg(long, num_args = 0.., allow_negative_numbers = true)]
        gens: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PidTOp {
    Gen {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    Divides {
        a: String,
        b: String,
    },
    NormalForm {
        a: String,
    },
    Pi2 {
        #[arg(long)]
        schedules: PathBuf,
        #[arg(long)]
        horizon: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LabOp {
    DenseSet {
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long)]
        horizon: u64,
        #[arg(long, default_value_t = 16)]
        prefix: usize,
    },
    PriorityMerge {
        #[arg(long, value_enum, default_value = "prefix")]
        shape: ChainShape,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long, default_value_t = 40)]
        stages: usize,
    },
    /// Greedy chain through the divisibility order on a staged carrier.
    Zorn {
        #[arg(long)]
        carrier: PathBuf,
        #[arg(long, default_value_t = 200)]
        steps: usize,
    },
    BlockMerge {
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long)]
        stages: u64,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
    },
    /// Domination table for x_{c_i} + x_{c_{i+1}} over the dense set built from K.
    Conidis {
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long)]
        horizon: u64,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

pub fn execute(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Factor { poly, over } => factor(&poly, over),
        Command::Gcd { ring, a, b } => match euclid_ring(&ring)? {
            Euclid::Z => gcd_cmd(&Integers, &ring, &parse_int(&a)?, &parse_int(&b)?),
            Euclid::Qx => gcd_cmd(&QPoly, &ring, &parse_qx(&a)?, &parse_qx(&b)?),
        },
        Command::Bezout { ring, gens } => match euclid_ring(&ring)? {
            Euclid::Z => bezout_cmd(&Integers, &ring, &parse_all(&gens, parse_int)?),
            Euclid::Qx => bezout_cmd(&QPoly, &ring, &parse_all(&gens, parse_qx)?),
        },
        Command::Divide { method, p, d } => divide(method, &parse_qx(&p)?, &parse_qx(&d)?),
        Command::Dhnorm {
            ring,
            check,
            elements,
        } => match euclid_ring(&ring)? {
            Euclid::Z => dhnorm_cmd(
                &DHNorm::new(Integers),
                &ring,
                &parse_all(&elements, parse_int)?,
                check,
            ),
            Euclid::Qx => dhnorm_cmd(
                &DHNorm::new(QPoly),
                &ring,
                &parse_all(&elements, parse_qx)?,
                check,
            ),
        },
        Command::FactorCompare { ring, left, right } => {
            let split = |s: &str| {
                s.split(';')
                    .map(|x| x.trim().to_string())
                    .filter(|x| !x.is_empty())
                    .collect::<Vec<_>>()
            };
            let (l, r) = (split(&left), split(&right));
            match euclid_ring(&ring)? {
                Euclid::Z => compare_cmd(
                    &Integers,
                    &parse_all(&l, parse_int)?,
                    &parse_all(&r, parse_int)?,
                ),
                Euclid::Qx => {
                    compare_cmd(&QPoly, &parse_all(&l, parse_qx)?, &parse_all(&r, parse_qx)?)
                }
            }
        }
        Command::Ideal(op) => ideal_cmd(op),
        Command::PidT(op) => pid_t_cmd(op),
        Command::Lab(op) => lab_cmd(op),
        Command::Suite { name, seed, scale } => {
            let scale = match scale {
                Some(s) => s,
                None => default_scale(&name).ok_or_else(|| UnknownSuite(name.clone()))?,
            };
            let report = run_suite(&name, seed, scale)?;
            Ok(Output {
                stdout: report.to_json(),
                stderr: report.summary(),
                code: if report.passed() { 0 } else { 1 },
            })
        }
    }
}

enum Euclid {
    Z,
    Qx,
}

fn euclid_ring(ring: &str) -> Result<Euclid, CliError> {
    match ring.parse::<RingId>()? {
        RingId::Integers => Ok(Euclid::Z),
        RingId::UnivariatePoly(_) => Ok(Euclid::Qx),
        other => Err(CliError::Usage(format!(
            "{other} is not one of the Euclidean rings Z, Q[x]"
        ))),
    }
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    match RingId::Integers.parse_element(s)? {
        Element::Int(n) => Ok(n),
        _ => unreachable!("integer ring parses integers"),
    }
}

fn parse_qx(s: &str) -> Result<MultiPoly, CliError> {
    let p: MultiPoly = s.parse()?;
    if !p.is_univariate() {
        return Err(PolyError::NotUnivariate.into());
    }
    Ok(p)
}

fn parse_all<T>(items: &[String], f: fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    items.iter().map(|s| f(s)).collect()
}

fn strings<T: Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn factor(text: &str, over: Over) -> Result<Output, CliError> {
    let p: MultiPoly = text.parse()?;
    let cfg = FactorConfig::from_env();
    let f = match over {
        Over::Z => factor_over_z(&p, &cfg)?,
        Over::Q => factor_over_q(&p, &cfg)?,
    };
    Ok(Output::json(json!({
        "command": "factor",
        "input": p.to_string(),
        "over": if over == Over::Z { "Z" } else { "Q" },
        "degree_bound": cfg.degree_bound,
        "unit": f.unit.to_string(),
        "factors": strings(&f.factors),
        "product_check": f.product() == p,
    })))
}

fn gcd_cmd<R: EuclideanDomain>(
    ring: &R,
    name: &str,
    a: &R::Elem,
    b: &R::Elem,
) -> Result<Output, CliError>
where
    R::Elem: Display,
{
    let (g, l) = gcd_lcm(ring, a, b);
    Ok(Output::json(json!({
        "command": "gcd",
        "ring": name,
        "inputs": [a.to_string(), b.to_string()],
        "gcd": g.to_string(),
        "lcm": l.to_string(),
    })))
}

fn bezout_cmd<R: EuclideanDomain>(
    ring: &R,
    name: &str,
    gens: &[R::Elem],
) -> Result<Output, CliError>
where
    R::Elem: Display,
{
    let cert = principal_generator(ring, gens)?;
    Ok(Output::json(json!({
        "command": "bezout",
        "ring": name,
        "generators": strings(gens),
        "d": cert.d.to_string(),
        "coefficients": strings(&cert.coefficients),
        "verified": cert.verify(ring, gens),
    })))
}

fn divide(method: Method, p: &MultiPoly, d: &MultiPoly) -> Result<Output, CliError> {
    let r = match method {
        Method::Long => divide_long(p, d)?,
        Method::Matrix => divide_matrix(p, d)?,
    };
    let check = &(d * &r.quotient) + &r.remainder == *p;
    Ok(Output::json(json!({
        "command": "divide",
        "method": if method == Method::Long { "long" } else { "matrix" },
        "inputs": [p.to_string(), d.to_string()],
        "quotient": r.quotient.to_string(),
        "remainder": r.remainder.to_string(),
        "verified": check,
    })))
}

fn dhnorm_cmd<R: Factorize>(
    norm: &DHNorm<R>,
    name: &str,
    elements: &[R::Elem],
    check: bool,
) -> Result<Output, CliError>
where
    R::Elem: Display,
{
    let norms = elements
        .iter()
        .map(|e| Ok(json!({"element": e.to_string(), "norm": norm.norm(e)?})))
        .collect::<Result<Vec<Value>, BezoutError>>()?;
    let mut out = json!({"command": "dhnorm", "ring": name, "norms": norms});
    if check {
        let report = dh_build_check(norm, elements)?;
        out["check"] = json!({
            "elements": report.elements,
            "pairs": report.pairs,
            "witnesses": report.witnesses,
            "units": strings(&report.units),
        });
    }
    Ok(Output::json(out))
}

fn compare_cmd<R: EuclideanDomain>(
    ring: &R,
    left: &[R::Elem],
    right: &[R::Elem],
) -> Result<Output, CliError> {
    let h = factorization_equal(ring, left, right);
    Ok(Output::json(json!({
        "command": "factor-compare",
        "equal": h.is_some(),
        "bijection": h,
    })))
}

// ---------------------------------------------------------------------------

fn build_ideal(args: &IdealArgs) -> Result<FgIdeal, CliError> {
    let ring: RingId = args.ring.parse()?;
    let gens = args
        .gens
        .iter()
        .map(|g| ring.parse_element(g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FgIdeal::new(ring, gens)?)
}

fn ideal_json(i: &FgIdeal) -> Value {
    json!({
        "ring": i.ring().to_string(),
        "generators": strings(i.generators()),
        "principal": principal(i).ok().flatten().map(|g| g.to_string()),
    })
}

fn pair(p: &Option<(Element, Element)>) -> Value {
    match p {
        Some((a, b)) => json!([a.to_string(), b.to_string()]),
        None => Value::Null,
    }
}

fn ideal_cmd(op: IdealOp) -> Result<Output, CliError> {
    Ok(Output::json(match op {
        IdealOp::Radical(args) => {
            let i = build_ideal(&args)?;
            json!({"command": "ideal radical", "input": ideal_json(&i), "radical": ideal_json(&radical(&i)?)})
        }
        IdealOp::Classify(args) => {
            let i = build_ideal(&args)?;
            let c = classify_ideal(&i)?;
            json!({
                "command": "ideal classify",
                "input": ideal_json(&i),
                "prime": c.prime,
                "primary": c.primary,
                "semiprime": c.semiprime,
                "primal": c.primal,
                "maximal": c.maximal,
                "adjoint": c.adjoint.as_deref().map(strings),
                "certificates": {
                    "not_prime": pair(&c.prime_witness),
                    "not_primary": pair(&c.primary_witness),
                },
            })
        }
        IdealOp::Quotient { ideal, by } => {
            let i = build_ideal(&ideal)?;
            let a = i.ring().parse_element(&by)?;
            json!({
                "command": "ideal quotient",
                "input": ideal_json(&i),
                "by": a.to_string(),
                "quotient": ideal_json(&ideal_quotient(&i, &a)?),
            })
        }
        IdealOp::Correspond { ring, gens } => {
            let n = match ring.parse::<RingId>()? {
                RingId::Modular(n) => n,
                other => {
                    return Err(CliError::Usage(format!(
                        "correspondence needs a ring Z/n, got {other}"
                    )))
                }
            };
            let selected: Option<u64> = if gens.is_empty() {
                None
            } else {
                let i = build_ideal(&IdealArgs { ring, gens })?;
                match principal(&i)? {
                    Some(Element::Mod(g)) => Some(if g == 0 { n } else { num_integer::gcd(g, n) }),
                    _ => None,
                }
            };
            let mut pairs = Vec::new();
            for p in ideal_correspondence(n)? {
                if selected.is_some_and(|d| d != p.d) {
                    continue;
                }
                let (up, down) = (classify_ideal(&p.upstairs)?, classify_ideal(&p.downstairs)?);
                let flags = |c: &revring::ideal::IdealClass| json!({"prime": c.prime, "primary": c.primary, "semiprime": c.semiprime, "maximal": c.maximal});
                pairs.push(json!({
                    "d": p.d,
                    "upstairs": p.upstairs.to_string(),
                    "downstairs": p.downstairs.to_string(),
                    "upstairs_flags": flags(&up),
                    "downstairs_flags": flags(&down),
                }));
            }
            json!({"command": "ideal correspond", "n": n, "pairs": pairs})
        }
    }))
}

fn parse_t(s: &str) -> Result<TElement, CliError> {
    Ok(s.parse()?)
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn pid_t_cmd(op: PidTOp) -> Result<Output, CliError> {
    Ok(Output::json(match op {
        PidTOp::Gen { gens } => {
            let gens = parse_all(&gens, parse_t)?;
            let cert = t_principal_generator(&gens)?;
            json!({
                "command": "pid-t gen",
                "generators": strings(&gens),
                "generator": cert.generator.to_string(),
                "alpha": cert.alpha.to_string(),
                "coefficients": strings(&cert.coefficients),
                "verified": cert.verify(&gens),
            })
        }
        PidTOp::Divides { a, b } => {
            let (a, b) = (parse_t(&a)?, parse_t(&b)?);
            json!({
                "command": "pid-t divides",
                "inputs": [a.to_string(), b.to_string()],
                "divides": t_divides(&a, &b),
                "quotient": t_quotient(&b, &a).map(|q| q.to_string()),
            })
        }
        PidTOp::NormalForm { a } => {
            let a = parse_t(&a)?;
            let nf = normal_form(&a)?;
            json!({
                "command": "pid-t normal-form",
                "input": a.to_string(),
                "beta": nf.beta.to_string(),
                "unit_numerator": nf.unit_num.to_string(),
                "unit_denominator": nf.unit_den.to_string(),
                "unit": nf.beta.is_one(),
            })
        }
        PidTOp::Pi2 { schedules, horizon } => {
            let named = parse_schedules(&read(&schedules)?)?;
            let w: Vec<StageEnumeration> = named.iter().map(|(_, s)| s.clone()).collect();
            let result = pi2_simulate(&w, horizon)?;
            let rows: Vec<Value> = named
                .iter()
                .zip(&result)
                .enumerate()
                .map(|(e, ((name, _), r))| {
                    let (status, split) = match r.status {
                        Pi2Status::Reducible { split_stage } => ("reducible", Some(split_stage)),
                        Pi2Status::IrreducibleAtHorizon => ("irreducible-at-horizon", None),
                    };
                    json!({"index": e, "name": name, "status": status, "split_stage": split, "localized": r.localized})
                })
                .collect();
            json!({"command": "pid-t pi2", "horizon": horizon, "indices": rows})
        }
    }))
}

// ---------------------------------------------------------------------------

fn lines(trace: &[String], summary: impl IntoIterator<Item = String>) -> Output {
    let mut out = String::new();
    for l in trace {
        out.push_str(l);
        out.push('\n');
    }
    for s in summary {
        out.push_str("# ");
        out.push_str(&s);
        out.push('\n');
    }
    Output::ok(out)
}

fn list<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn lab_cmd(op: LabOp) -> Result<Output, CliError> {
    match op {
        LabOp::DenseSet {
            schedule,
            horizon,
            prefix,
        } => {
            let k = parse_schedule(&read(&schedule)?)?;
            let d = dense_set_build(&k, horizon, prefix);
            let dominated = d.check_domination(&k, prefix);
            Ok(lines(
                d.trace.lines(),
                [
                    format!(
                        "A = {{{}}}",
                        list(&d.a.elements().into_iter().collect::<Vec<_>>())
                    ),
                    format!("complement prefix: {}", list(&d.complement_prefix)),
                    format!("stable indices: {}", d.stable),
                    format!("b_i >= mu_K(i) on stable indices: {}", dominated.is_ok()),
                ],
            ))
        }
        LabOp::PriorityMerge {
            shape,
            step,
            stages,
        } => {
            if step == 0 {
                return Err(CliError::Usage("--step must be positive".into()));
            }
            let chain = match shape {
                ChainShape::Prefix => MonomialChain::prefix_variables(move |k| k / step),
                ChainShape::Pairs => MonomialChain::from_fn(move |k| {
                    (0..=k / step)
                        .map(|i| ExponentVector::from_pairs([(i, 1), (i + 1, 1)]))
                        .collect()
                }),
                ChainShape::Powers => MonomialChain::from_fn(move |k| {
                    (0..=k / step)
                        .map(|i| ExponentVector::from_pairs([(0, 1), (i + 1, 2)]))
                        .collect()
                }),
            };
            let run = priority_merge(&chain, stages)?;
            let verified = run.verify(&chain);
            Ok(lines(
                run.trace.lines(),
                [
                    format!("markers: {}", list(&run.markers)),
                    format!("witnesses: {}", list(&run.witnesses)),
                    format!("settled: {}", run.settled_bound()),
                    format!("verified: {}", verified.is_ok()),
                ],
            ))
        }
        LabOp::Zorn { carrier, steps } => {
            let carrier = parse_schedule(&read(&carrier)?)?;
            let order = FnOrder(|a: u64, b: u64, _k: u64| a != b && a != 0 && b.is_multiple_of(a));
            let zc = zorn_greedy_chain(&carrier, &order, steps);
            let verified = zc.verify(&revring::lab::zorn::carrier_order(&carrier), &order);
            Ok(lines(
                zc.trace.lines(),
                [
                    format!("chain: {}", list(&zc.chain)),
                    format!("pairs examined: {}", zc.pairs_examined),
                    format!("verified: {}", verified.is_ok()),
                ],
            ))
        }
        LabOp::BlockMerge {
            schedule,
            stages,
            blocks,
        } => {
            let k = parse_schedule(&read(&schedule)?)?;
            let p = block_merge_poset(&k, stages);
            let shown: Vec<String> = (0..blocks)
                .map(|n| {
                    let r = p.block(n);
                    format!("B_{n} = [{}, {})", r.start, r.end)
                })
                .collect();
            let starts: Vec<u64> = (0..blocks).map(|n| p.block(n).start).collect();
            let checked = p.check_chain(&starts);
            Ok(lines(
                p.trace.lines(),
                [
                    format!("blocks: {}", shown.join(" ")),
                    format!("chain of block starts dominates mu_K: {}", checked.is_ok()),
                ],
            ))
        }
        LabOp::Conidis {
            schedule,
            horizon,
            limit,
        } => {
            let k = parse_schedule(&read(&schedule)?)?;
            let d = dense_set_build(&k, horizon, limit + 3);
            let c = &d.complement_prefix;
            let seq: Vec<LinearRingElement> = c
                .windows(2)
                .map(|w| {
                    LinearRingElement::var(w[0] as usize)
                        .add(&LinearRingElement::var(w[1] as usize))
                })
                .collect();
            let table = dominating_f(&seq, &d.a);
            let verified = table.verify(limit);
            let rows = table
                .f
                .iter()
                .zip(&table.complement)
                .enumerate()
                .take(limit + 1)
                .map(|(n, (f, c))| {
                    let f = f.map_or("-".to_string(), |v| v.to_string());
                    format!("f({n}) = {f}, c_{n} = {c}")
                });
            let mut summary: Vec<String> = vec![format!("sequence: {}", list(&seq))];
            summary.extend(rows);
            summary.push(format!("f dominates the complement: {}", verified.is_ok()));
            Ok(lines(d.trace.lines(), summary))
        }
    }
}
