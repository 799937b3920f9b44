//! The `gapdist` command line.
//!
//! Human-readable output by default; `--json` prints exactly one JSON document
//! on stdout. Exit status is 0 on success, 1 on domain errors (and on method
//! disagreement), 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cycunits::{
    dependent_moduli_up_to, feng_independent, subgroup_product, verify_relation, FactorForm,
};
use crate::equidist::{
    bruteforce_verdict, check_theorem, equidist_moduli, polynomial_verdict, EquidistVerdict,
};
use crate::error::Error;
use crate::fixtures;
use crate::modmath::subgroup_generated;
use crate::semigroup::{
    genus_geometric_formula, make_geometric_with_cap, make_semigroup_with_cap, GeometricParams,
    NumericalSemigroup,
};

/// Version of the JSON document layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "gapdist",
    version,
    about = "Numerical semigroup gaps, equidistribution and cyclotomic unit relations"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest Apéry table (smallest generator) to build.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = decimal)]
    pub cap_apery: u64,

    /// Largest genus for which gaps are listed or counted one by one.
    #[arg(long, global = true, default_value_t = 100_000_000, value_parser = decimal)]
    pub cap_genus: u64,

    /// Worker threads for `moduli` and `feng --upto`.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub jobs: u64,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaps, genus and Frobenius number of <gens>.
    Gaps {
        #[arg(long, value_delimiter = ',', required = true, value_parser = decimal)]
        gens: Vec<u64>,
        /// List at most this many gaps.
        #[arg(long, value_parser = decimal_usize)]
        limit: Option<usize>,
    },
    /// Apéry table of <gens> relative to a nonzero element.
    Apery {
        #[arg(long, value_delimiter = ',', required = true, value_parser = decimal)]
        gens: Vec<u64>,
        /// Defaults to the smallest generator.
        #[arg(long, value_parser = decimal)]
        rel: Option<u64>,
    },
    /// Genus of <a^k, ..., b^k> by formula and by counting.
    Genus {
        #[arg(long, value_parser = parse_geom)]
        geom: Geom,
    },
    /// Whether the gaps are equidistributed modulo m.
    Equidist(EquidistArgs),
    /// All moduli for which the gaps of <a^k, ..., b^k> are equidistributed.
    Moduli {
        #[arg(long, value_parser = parse_geom)]
        geom: Geom,
    },
    /// Feng's independence criterion for T'_m.
    Feng(FengArgs),
    /// Exact check of prod (1 - zeta_n^e) over --lhs against --rhs.
    VerifyRelation {
        #[arg(long, value_parser = decimal)]
        conductor: u64,
        /// Exponents; repeat one for multiplicity.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true,
            value_parser = signed_decimal
        )]
        lhs: Vec<i64>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true,
            value_parser = signed_decimal
        )]
        rhs: Vec<i64>,
    },
    /// Product of (1 - zeta_n^a) over the subgroup of U_m generated by --gens.
    SubgroupProduct {
        #[arg(short, long, value_parser = decimal)]
        m: u64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true,
            value_parser = signed_decimal
        )]
        gens: Vec<i64>,
        /// A divisor of m; defaults to m.
        #[arg(long, value_parser = decimal)]
        conductor: Option<u64>,
        #[arg(long, value_enum, default_value_t = Form::OneMinusZeta)]
        form: Form,
    },
    /// Reproduce every worked example and print a pass/fail table.
    PaperExamples,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("semigroup").required(true).args(["geom", "gens"]))]
pub struct EquidistArgs {
    #[arg(long, value_parser = parse_geom)]
    pub geom: Option<Geom>,
    /// Arbitrary generators; brute force only.
    #[arg(long, value_delimiter = ',', value_parser = decimal)]
    pub gens: Option<Vec<u64>>,
    #[arg(short, long, value_parser = decimal)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["m", "upto"]))]
pub struct FengArgs {
    #[arg(short, long, value_parser = decimal)]
    pub m: Option<u64>,
    #[arg(long, value_parser = decimal)]
    pub upto: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Poly,
    Theorem,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    OneMinusZeta,
    ZetaMinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Geom {
    pub a: u64,
    pub b: u64,
    pub k: u32,
}

/// Plain decimal digits only: no sign, no prefix, no separators.
fn decimal(t: &str) -> std::result::Result<u64, String> {
    if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
        return Err(format!("{t:?} is not a plain decimal integer"));
    }
    t.parse().map_err(|e| format!("{t:?}: {e}"))
}

fn decimal_usize(t: &str) -> std::result::Result<usize, String> {
    usize::try_from(decimal(t)?).map_err(|e| e.to_string())
}

/// [`decimal`] with an optional leading minus sign.
fn signed_decimal(t: &str) -> std::result::Result<i64, String> {
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let v = i64::try_from(decimal(digits)?).map_err(|_| format!("{t:?} is out of range"))?;
    Ok(if neg { -v } else { v })
}

fn parse_geom(s: &str) -> std::result::Result<Geom, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected a,b,k but got {s:?}"));
    }
    let k = decimal(parts[2])?;
    Ok(Geom {
        a: decimal(parts[0])?,
        b: decimal(parts[1])?,
        k: u32::try_from(k).map_err(|_| format!("k = {k} is too large"))?,
    })
}

/// A domain error tagged with the argument it came from.
#[derive(Debug)]
struct Failure {
    arg: &'static str,
    error: Error,
}

fn tag(arg: &'static str) -> impl Fn(Error) -> Failure {
    move |error| Failure { arg, error }
}

/// What a subcommand produced, before it is rendered.
struct Outcome {
    command: &'static str,
    inputs: Value,
    verdict: Option<bool>,
    certificate: Value,
    histogram: Value,
    result: Value,
    text: String,
    /// Exit 1 even though output was produced (method disagreement, failed fixtures).
    failed: Option<String>,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Outcome {
            command,
            inputs,
            verdict: None,
            certificate: Value::Null,
            histogram: Value::Null,
            result,
            text,
            failed: None,
        }
    }
}

/// Parses `argv` (program name first), runs the command, returns the exit status.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: argument --{}: {}", f.arg, f.error);
            return 1;
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let rendered = if cli.json {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": outcome.command,
            "inputs": outcome.inputs,
            "verdict": outcome.verdict,
            "certificate": outcome.certificate,
            "histogram": outcome.histogram,
            "result": outcome.result,
            "elapsed_ms": elapsed_ms,
        });
        let mut s = serde_json::to_string(&doc).expect("a Value always serializes");
        s.push('\n');
        s
    } else {
        outcome.text.clone()
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: argument --out: {msg}");
        return 1;
    }
    match outcome.failed {
        Some(msg) => {
            eprintln!("error: {msg}");
            1
        }
        None => 0,
    }
}

fn dispatch(cli: &Cli) -> std::result::Result<Outcome, Failure> {
    match &cli.command {
        Command::Gaps { gens, limit } => gaps(cli, gens, *limit),
        Command::Apery { gens, rel } => apery(cli, gens, *rel),
        Command::Genus { geom } => genus(cli, *geom),
        Command::Equidist(args) => equidist(cli, args),
        Command::Moduli { geom } => moduli(cli, *geom),
        Command::Feng(args) => feng(cli, args),
        Command::VerifyRelation {
            conductor,
            lhs,
            rhs,
        } => relation(*conductor, lhs, rhs),
        Command::SubgroupProduct {
            m,
            gens,
            conductor,
            form,
        } => product(*m, gens, *conductor, *form),
        Command::PaperExamples => paper_examples(),
    }
}

fn params(g: Geom) -> std::result::Result<GeometricParams, Failure> {
    GeometricParams::new(g.a, g.b, g.k).map_err(tag("geom"))
}

fn geom_json(g: Geom) -> Value {
    json!({ "a": g.a, "b": g.b, "k": g.k })
}

/// Big integers go out as numbers when they fit in a u64, as strings otherwise.
fn big_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn check_genus_cap(cli: &Cli, genus: u128, arg: &'static str) -> std::result::Result<(), Failure> {
    if genus > cli.cap_genus as u128 {
        return Err(Failure {
            arg,
            error: Error::CapExceeded {
                what: "genus (raise --cap-genus)",
                required: genus,
                cap: cli.cap_genus as u128,
            },
        });
    }
    Ok(())
}

fn gaps(cli: &Cli, gens: &[u64], limit: Option<usize>) -> std::result::Result<Outcome, Failure> {
    let s = make_semigroup_with_cap(gens, cli.cap_apery).map_err(tag("gens"))?;
    check_genus_cap(cli, s.genus() as u128, "gens")?;
    let all = s.gaps().into_vec();
    let frobenius = all.last().copied();
    let shown = &all[..limit.unwrap_or(all.len()).min(all.len())];
    let truncated = shown.len() < all.len();
    let mut text = format!(
        "generators  {:?}\ngenus       {}\n",
        s.generators(),
        all.len()
    );
    match frobenius {
        Some(f) => writeln!(text, "frobenius   {f}").unwrap(),
        None => writeln!(text, "frobenius   none (no gaps)").unwrap(),
    }
    writeln!(
        text,
        "gaps        {shown:?}{}",
        if truncated { " ..." } else { "" }
    )
    .unwrap();
    Ok(Outcome::new(
        "gaps",
        json!({ "gens": gens, "limit": limit }),
        json!({ "generators": s.generators(), "genus": all.len(), "frobenius": frobenius, "gaps": shown, "truncated": truncated }),
        text,
    ))
}

fn apery(cli: &Cli, gens: &[u64], rel: Option<u64>) -> std::result::Result<Outcome, Failure> {
    let s = make_semigroup_with_cap(gens, cli.cap_apery).map_err(tag("gens"))?;
    let t = rel.unwrap_or(s.multiplicity());
    if t > cli.cap_apery {
        return Err(Failure {
            arg: "rel",
            error: Error::CapExceeded {
                what: "Apéry table size (raise --cap-apery)",
                required: t as u128,
                cap: cli.cap_apery as u128,
            },
        });
    }
    let table = s.apery_relative_to(t, cli.cap_apery).map_err(tag("rel"))?;
    let mut text = format!(
        "Apéry table of {:?} relative to {t}\nresidue  element\n",
        s.generators()
    );
    for (i, w) in table.iter().enumerate() {
        writeln!(text, "{i:>7}  {w}").unwrap();
    }
    Ok(Outcome::new(
        "apery",
        json!({ "gens": gens, "rel": t }),
        json!({ "generators": s.generators(), "rel": t, "table": table }),
        text,
    ))
}

fn genus(cli: &Cli, g: Geom) -> std::result::Result<Outcome, Failure> {
    let p = params(g)?;
    let formula = genus_geometric_formula(&p);
    check_genus_cap(cli, u128::try_from(&formula).unwrap_or(u128::MAX), "geom")?;
    let s = make_geometric_with_cap(&p, cli.cap_apery).map_err(tag("geom"))?;
    let count = s.genus();
    if formula != BigUint::from(count) {
        return Err(Failure {
            arg: "geom",
            error: Error::InvalidParameter {
                name: "geom",
                reason: format!("formula {formula} disagrees with count {count}"),
            },
        });
    }
    let mut out = Outcome::new(
        "genus",
        json!({ "geom": geom_json(g) }),
        json!({ "generators": p.generators(), "formula": big_json(&formula), "count": count }),
        format!(
            "generators  {:?}\ngenus       {formula} (formula and count agree)\n",
            p.generators()
        ),
    );
    out.verdict = Some(true);
    Ok(out)
}

fn verdict_json(v: &EquidistVerdict) -> Value {
    json!({ "method": v.method.to_string(), "equidistributed": v.equidistributed, "certificate": v.certificate })
}

fn equidist(cli: &Cli, args: &EquidistArgs) -> std::result::Result<Outcome, Failure> {
    if args.m == 0 {
        return Err(Failure {
            arg: "m",
            error: Error::BadModulus {
                m: 0,
                reason: "must be positive",
            },
        });
    }
    let m = args.m;
    let (semigroup, geom, inputs): (NumericalSemigroup, Option<GeometricParams>, Value) = match (
        &args.geom, &args.gens,
    ) {
        (Some(g), _) => {
            let p = params(*g)?;
            let s = make_geometric_with_cap(&p, cli.cap_apery).map_err(tag("geom"))?;
            (
                s,
                Some(p),
                json!({ "geom": geom_json(*g), "m": m, "method": format!("{:?}", args.method).to_lowercase() }),
            )
        }
        (None, Some(gens)) => {
            if !matches!(args.method, MethodArg::Brute | MethodArg::All) {
                return Err(Failure {
                    arg: "method",
                    error: Error::InvalidParameter {
                        name: "method",
                        reason: "only brute force applies to --gens".into(),
                    },
                });
            }
            let s = make_semigroup_with_cap(gens, cli.cap_apery).map_err(tag("gens"))?;
            (s, None, json!({ "gens": gens, "m": m, "method": "brute" }))
        }
        (None, None) => unreachable!("clap requires one of --geom, --gens"),
    };
    let mut verdicts = Vec::new();
    let want = |x: MethodArg| args.method == x || args.method == MethodArg::All;
    if want(MethodArg::Brute) || geom.is_none() {
        verdicts.push(bruteforce_verdict(&semigroup, m));
    }
    if let Some(p) = &geom {
        if want(MethodArg::Poly) {
            verdicts.push(polynomial_verdict(p, m));
        }
        if want(MethodArg::Theorem) {
            verdicts.push(check_theorem(p, m));
        }
    }
    let agree = verdicts
        .windows(2)
        .all(|w| w[0].equidistributed == w[1].equidistributed);
    let hist = semigroup.gap_residue_histogram(m);
    let mut text = format!(
        "generators  {:?}\nmodulus     {m}\n",
        semigroup.generators()
    );
    for v in &verdicts {
        writeln!(
            text,
            "{:<8}    {}  {}",
            v.method.to_string(),
            v.equidistributed,
            serde_json::to_string(&v.certificate).unwrap()
        )
        .unwrap();
    }
    writeln!(text, "histogram   {:?}", hist.counts()).unwrap();
    let mut out = Outcome::new(
        "equidist",
        inputs,
        json!({ "agree": agree, "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>() }),
        text,
    );
    out.verdict = agree.then_some(verdicts[0].equidistributed);
    out.certificate =
        serde_json::to_value(&verdicts.last().expect("at least one method").certificate).unwrap();
    out.histogram = json!(hist.counts());
    if !agree {
        out.failed = Some(format!("methods disagree on m = {m}"));
    }
    Ok(out)
}

/// Order-preserving parallel filter over independent subproblems.
fn par_filter(items: Vec<u64>, jobs: u64, keep: impl Fn(u64) -> bool + Sync) -> Vec<u64> {
    if jobs <= 1 || items.len() < 2 {
        return items.into_iter().filter(|&x| keep(x)).collect();
    }
    let chunk = items.len().div_ceil(jobs as usize);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().copied().filter(|&x| keep(x)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn moduli(cli: &Cli, g: Geom) -> std::result::Result<Outcome, Failure> {
    let p = params(g)?;
    let list = if cli.jobs <= 1 {
        equidist_moduli(&p).map_err(tag("geom"))?
    } else {
        // Same candidates as `equidist_moduli`, decided in parallel.
        let candidates = equidist_moduli_candidates(&p).map_err(tag("geom"))?;
        par_filter(candidates, cli.jobs, |m| {
            check_theorem(&p, m).equidistributed
        })
    };
    Ok(Outcome::new(
        "moduli",
        json!({ "geom": geom_json(g) }),
        json!({ "genus": big_json(&genus_geometric_formula(&p)), "moduli": list }),
        format!(
            "moduli  {}\n",
            list.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    ))
}

fn equidist_moduli_candidates(p: &GeometricParams) -> crate::Result<Vec<u64>> {
    use crate::modmath::{factorize, gcd, FACTORIZE_CAP};
    let genus = genus_geometric_formula(p);
    let g = u64::try_from(&genus)
        .ok()
        .filter(|&g| g <= FACTORIZE_CAP)
        .ok_or_else(|| Error::CapExceeded {
            what: "genus to factor",
            required: u128::try_from(&genus).unwrap_or(u128::MAX),
            cap: FACTORIZE_CAP as u128,
        })?;
    Ok(factorize(g)
        .divisors()
        .into_iter()
        .filter(|&m| gcd(p.a(), m) == 1 && gcd(p.b(), m) == 1)
        .collect())
}

fn feng(cli: &Cli, args: &FengArgs) -> std::result::Result<Outcome, Failure> {
    if let Some(m) = args.m {
        let r = feng_independent(m).map_err(tag("m"))?;
        let mut text = format!(
            "m = {m}: T'_m is {}\n",
            if r.independent {
                "independent"
            } else {
                "dependent"
            }
        );
        for p in &r.primes {
            writeln!(
                text,
                "  p = {}^{}: U_{} generated by -1 and p: {}",
                p.prime, p.exponent, p.cofactor, p.generated
            )
            .unwrap();
        }
        let mut out = Outcome::new(
            "feng",
            json!({ "m": m }),
            serde_json::to_value(&r).unwrap(),
            text,
        );
        out.verdict = Some(r.independent);
        return Ok(out);
    }
    let n = args.upto.expect("clap requires -m or --upto");
    let list = if cli.jobs <= 1 {
        dependent_moduli_up_to(n)
    } else {
        let candidates: Vec<u64> = (3..=n).filter(|m| m % 4 != 2).collect();
        par_filter(candidates, cli.jobs, |m| {
            !feng_independent(m).expect("admissible modulus").independent
        })
    };
    Ok(Outcome::new(
        "feng",
        json!({ "upto": n }),
        json!({ "dependent": list }),
        format!(
            "dependent moduli up to {n}: {}\n",
            list.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    ))
}

fn with_multiplicity(exps: &[i64]) -> Vec<(i128, u64)> {
    exps.iter().map(|&e| (e as i128, 1)).collect()
}

fn relation(n: u64, lhs: &[i64], rhs: &[i64]) -> std::result::Result<Outcome, Failure> {
    if n < 2 {
        return Err(Failure {
            arg: "conductor",
            error: Error::BadModulus {
                m: n,
                reason: "must be at least 2",
            },
        });
    }
    for (arg, side) in [("lhs", lhs), ("rhs", rhs)] {
        if let Some(&e) = side.iter().find(|&&e| e.rem_euclid(n as i64) == 0) {
            return Err(Failure {
                arg,
                error: Error::InvalidParameter {
                    name: arg,
                    reason: format!("exponent {e} is 0 mod {n}, so 1 - zeta^e = 0"),
                },
            });
        }
    }
    let holds = verify_relation(&with_multiplicity(lhs), &with_multiplicity(rhs), n);
    let mut out = Outcome::new(
        "verify-relation",
        json!({ "conductor": n, "lhs": lhs, "rhs": rhs }),
        json!({ "holds": holds }),
        format!(
            "prod (1 - zeta_{n}^e), e in {lhs:?}\n  {} prod over {rhs:?}\n",
            if holds { "==" } else { "!=" }
        ),
    );
    out.verdict = Some(holds);
    Ok(out)
}

fn product(
    m: u64,
    gens: &[i64],
    conductor: Option<u64>,
    form: Form,
) -> std::result::Result<Outcome, Failure> {
    let n = conductor.unwrap_or(m);
    let g: Vec<i128> = gens.iter().map(|&x| x as i128).collect();
    let h = subgroup_generated(&g, m).map_err(tag("gens"))?;
    let f = match form {
        Form::OneMinusZeta => FactorForm::OneMinusZeta,
        Form::ZetaMinusOne => FactorForm::ZetaMinusOne,
    };
    let value = subgroup_product(m, &g, n, f).map_err(tag("conductor"))?;
    let is_one = value.is_one();
    let mut out = Outcome::new(
        "subgroup-product",
        json!({ "m": m, "gens": gens, "conductor": n, "form": format!("{form:?}") }),
        json!({ "subgroup": h.elements(), "order": h.len(), "product": value.to_string(), "is_one": is_one }),
        format!(
            "H = {:?} (order {})\nproduct in Z[zeta_{n}] = {value}\nequals 1: {is_one}\n",
            h.elements(),
            h.len()
        ),
    );
    out.verdict = Some(is_one);
    Ok(out)
}

fn paper_examples() -> std::result::Result<Outcome, Failure> {
    let rows = fixtures::run_all().map_err(tag("paper-examples"))?;
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for r in &rows {
        let status = match (r.passed, r.known_discrepancy) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known discrepancy)",
            (false, false) => "FAIL",
        };
        writeln!(text, "{:<width$}  {status}  {}", r.name, r.detail).unwrap();
    }
    let unexpected: Vec<&str> = rows
        .iter()
        .filter(|r| r.is_unexpected_failure())
        .map(|r| r.name)
        .collect();
    let mut out = Outcome::new(
        "paper-examples",
        json!({}),
        serde_json::to_value(&rows).unwrap(),
        text,
    );
    out.verdict = Some(unexpected.is_empty());
    if !unexpected.is_empty() {
        out.failed = Some(format!("fixtures failed: {}", unexpected.join(", ")));
    }
    Ok(out)
}
