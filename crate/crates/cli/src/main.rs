//! `phopf`: batch front end emitting one JSON document per invocation.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on invalid
//! input or a library error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pointed_hopf::catalog::{
    build_braided, build_family, cross_check_constraints, list_representatives, manifest, sweep_subbox, CaseGroup,
    FamilyId, Tag,
};
use pointed_hopf::charp::lemma_suite;
use pointed_hopf::cobar::{
    cobar_report, ext_nichols_check, hopf_subalgebra, hsmash_check, omega_tensor, truncated_polynomial, FiniteCoalgebra,
    DEFAULT_CAP,
};
use pointed_hopf::error::Error;
use pointed_hopf::par::{with_threads, Parallelism};
use pointed_hopf::report::{
    axiom_row, bosonization_row, canonical_json, nichols_report, report_all, ReportConfig, SCHEMA_VERSION,
};
use pointed_hopf::scalars::DEFAULT_ENUM_CAP;
use pointed_hopf::ydnichols::{jordan_module, trivial_module};

const ENUM_CAP_VAR: &str = "PHOPF_ENUM_CAP";

#[derive(Parser, Debug)]
#[command(name = "phopf", version, about = "Verify pointed Hopf algebras of dimension p^3 over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prime; a comma-separated list for `lemmas` and `report-all`.
    #[arg(long = "p", global = true, value_delimiter = ',', default_value = "3")]
    primes: Vec<u32>,
    /// `name=value` pairs; a bare name or an omitted name stays parametric.
    #[arg(long, global = true, value_delimiter = ',')]
    params: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Confluence, dimension, Hopf axioms and P(H) of a family.
    VerifyFamily { target: String },
    /// Derived confluence constraints against the printed locus.
    DeriveConstraints { target: String },
    /// Cobar cohomology: truncated, subalgebra, ext-nichols, hsmash or a family id.
    Cohomology { target: String },
    /// Nichols algebra of diagonal, jordan or a braided row.
    Nichols { target: String },
    /// Bosonization of a braided row against its graded partner.
    Bosonize { target: String },
    /// Characteristic-p lemmas, optionally filtered by name prefix.
    Lemmas { name: Option<String> },
    /// Catalog manifest, or the representatives of a case group.
    List { group: Option<String> },
    /// Every section, with one verdict per acceptance criterion.
    ReportAll,
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::VerifyFamily { .. } => "verify-family",
            Command::DeriveConstraints { .. } => "derive-constraints",
            Command::Cohomology { .. } => "cohomology",
            Command::Nichols { .. } => "nichols",
            Command::Bosonize { .. } => "bosonize",
            Command::Lemmas { .. } => "lemmas",
            Command::List { .. } => "list",
            Command::ReportAll => "report-all",
        }
    }
}

/// Why a command produced no result.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn kind(&self) -> String {
        match self {
            Failure::Usage(_) => "Usage".into(),
            Failure::Lib(e) => {
                let d = format!("{:?}", e);
                d.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
            }
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Outcome = Result<(bool, Value), Failure>;

struct Ctx {
    p: Vec<u32>,
    params: Vec<String>,
    par: Parallelism,
    enum_cap: u64,
}

impl Ctx {
    fn single_p(&self) -> Result<u32, Failure> {
        match self.p.as_slice() {
            [p] => Ok(*p),
            _ => Err(Failure::Usage(format!("this verb takes one prime, got {:?}", self.p))),
        }
    }

    /// Values keyed by name; bare names are listed as parametric.
    fn values(&self) -> Result<(BTreeMap<String, u32>, Vec<String>), Failure> {
        let mut vals = BTreeMap::new();
        let mut free = Vec::new();
        for kv in self.params.iter().filter(|s| !s.trim().is_empty()) {
            match kv.split_once('=') {
                Some((k, v)) => {
                    let v: i64 = v.trim().parse().map_err(|_| Failure::Usage(format!("bad value in {:?}", kv)))?;
                    vals.insert(k.trim().to_string(), v.rem_euclid(self.p[0] as i64) as u32);
                }
                None => free.push(kv.trim().to_string()),
            }
        }
        Ok((vals, free))
    }

    fn family(&self, target: &str) -> Result<FamilyId, Failure> {
        Ok(FamilyId::parse(target, self.single_p()?)?)
    }
}

fn verify_family(ctx: &Ctx, target: &str) -> Outcome {
    let id = ctx.family(target)?;
    let (vals, free) = ctx.values()?;
    let (names, _) = id.params();
    if let Some(k) = vals.keys().chain(&free).find(|k| !names.contains(k)) {
        return Err(Error::UnknownName(k.clone()).into());
    }
    if names.iter().all(|n| vals.contains_key(n)) {
        let row = axiom_row(&id, &vals)?;
        let h = build_family(&id, &vals)?;
        let mut v = serde_json::to_value(&row).expect("serializable");
        v["relations"] = json!(h.rs.rule_strings());
        v["pass"] = json!(row.holds());
        return Ok((row.holds(), v));
    }
    let fixed: Vec<Option<u32>> = names.iter().map(|n| vals.get(n).copied()).collect();
    let sweep = sweep_subbox(&id, &fixed, ctx.enum_cap, 1, ctx.par)?;
    let pass = sweep.passed();
    let mut v = serde_json::to_value(&sweep).expect("serializable");
    v["pass"] = json!(pass);
    Ok((pass, v))
}

fn derive_constraints(ctx: &Ctx, target: &str) -> Outcome {
    let id = ctx.family(target)?;
    let verdict = cross_check_constraints(&id, ctx.enum_cap, ctx.par)?;
    // Generic presentations carry no printed set; their locus is informational.
    let informational = matches!(id.tag, Tag::A2Gen | Tag::A3Gen | Tag::BGen);
    let constraint_free = verdict.printed.is_none() && verdict.derived_locus_size == verdict.full_space_size;
    let pass = informational || verdict.matches || constraint_free;
    let mut v = serde_json::to_value(&verdict).expect("serializable");
    v["informational"] = json!(informational);
    v["pass"] = json!(pass);
    Ok((pass, v))
}

fn eps_param(ctx: &Ctx) -> Result<u32, Failure> {
    let (vals, _) = ctx.values()?;
    let e = vals.get("eps").copied().unwrap_or(0);
    if e > 1 {
        return Err(Failure::Usage("eps must be 0 or 1".into()));
    }
    Ok(e)
}

fn cohomology(ctx: &Ctx, target: &str) -> Outcome {
    let p = ctx.single_p()?;
    match target {
        "truncated" => {
            let b = truncated_polynomial(p)?;
            let w = omega_tensor(&b, "r", None)?;
            let r = cobar_report("k[r]/(r^p)", &b, Some(&w), DEFAULT_CAP)?;
            let concentrated = r.graded.len() == 1 && r.graded.get(&format!("(2,{})", p)) == Some(&1);
            let pass = r.dims.h2 == 1 && concentrated && r.omega_cocycle == Some(true) && r.omega_coboundary == Some(false) && r.d_squared_zero;
            Ok((pass, json!({ "report": r, "pass": pass })))
        }
        "subalgebra" => {
            let eps = eps_param(ctx)?;
            let b = FiniteCoalgebra::from_hopf(&hopf_subalgebra(p, eps)?, None)?;
            let w = omega_tensor(&b, "x", Some(("g", eps)))?;
            let r = cobar_report("A", &b, Some(&w), DEFAULT_CAP)?;
            let pass = r.dims.h2 == 1 && r.d_squared_zero;
            Ok((pass, json!({ "eps": eps, "report": r, "pass": pass })))
        }
        "ext-nichols" => {
            let c = ext_nichols_check(p, eps_param(ctx)?)?;
            Ok((c.holds(), json!({ "check": c, "pass": c.holds() })))
        }
        "hsmash" => {
            let c = hsmash_check(p, eps_param(ctx)?, DEFAULT_CAP)?;
            Ok((c.holds(), json!({ "check": c, "pass": c.holds() })))
        }
        _ => {
            let id = ctx.family(target)?;
            let b = if id.tag.is_braided() {
                FiniteCoalgebra::from_braided(&build_braided(&id)?, None)?
            } else {
                let (vals, _) = ctx.values()?;
                FiniteCoalgebra::from_hopf(&build_family(&id, &vals)?, None)?
            };
            let r = cobar_report(&id.to_string(), &b, None, DEFAULT_CAP)?;
            let pass = r.d_squared_zero;
            Ok((pass, json!({ "report": r, "pass": pass })))
        }
    }
}

fn nichols(ctx: &Ctx, target: &str) -> Outcome {
    let p = ctx.single_p()?;
    let r = match target {
        "diagonal" => {
            let (v, g) = trivial_module(p);
            nichols_report("diagonal", &v, &g)?
        }
        "jordan" => {
            let (v, g) = jordan_module(p);
            nichols_report("jordan", &v, &g)?
        }
        _ => {
            let id = ctx.family(target)?;
            if !id.tag.is_braided() {
                return Err(Failure::Usage(format!("{} is not a braided row", id)));
            }
            let (v, g) = build_braided(&id)?.yd_module()?;
            nichols_report(&id.to_string(), &v, &g)?
        }
    };
    let pass = r.holds();
    let mut v = serde_json::to_value(&r).expect("serializable");
    v["pass"] = json!(pass);
    Ok((pass, v))
}

fn bosonize_row(ctx: &Ctx, target: &str) -> Outcome {
    let row = bosonization_row(&ctx.family(target)?)?;
    let pass = row.holds();
    let mut v = serde_json::to_value(&row).expect("serializable");
    v["pass"] = json!(pass);
    Ok((pass, v))
}

fn lemmas(ctx: &Ctx, name: Option<&str>) -> Outcome {
    let all = lemma_suite(&ctx.p, ctx.par)?;
    let picked: Vec<_> = all.into_iter().filter(|l| name.is_none_or(|n| l.lemma.starts_with(n))).collect();
    if picked.is_empty() {
        return Err(Error::UnknownName(name.unwrap_or_default().to_string()).into());
    }
    let pass = picked.iter().all(|l| l.pass);
    Ok((pass, json!({ "lemmas": picked, "pass": pass })))
}

fn list(ctx: &Ctx, group: Option<&str>) -> Outcome {
    let Some(group) = group else {
        return Ok((true, json!({ "catalog": manifest(&ctx.p) })));
    };
    let g: CaseGroup = group.parse()?;
    let p = ctx.single_p()?;
    if !g.admissible(p) {
        return Err(Error::Inadmissible(format!("{} at p={}", g, p)).into());
    }
    let cl = list_representatives(g, p)?;
    let pass = cl.counts() == g.stated_counts(p);
    Ok((pass, json!({ "classes": cl, "counts": cl.counts(), "stated": g.stated_counts(p), "pass": pass })))
}

fn run(cmd: &Command, ctx: &Ctx) -> Outcome {
    if let Some(&p) = ctx.p.iter().find(|&&p| ![2, 3, 5, 7].contains(&p)) {
        return Err(Error::Inadmissible(format!("p = {} is not one of 2, 3, 5, 7", p)).into());
    }
    match cmd {
        Command::VerifyFamily { target } => verify_family(ctx, target),
        Command::DeriveConstraints { target } => derive_constraints(ctx, target),
        Command::Cohomology { target } => cohomology(ctx, target),
        Command::Nichols { target } => nichols(ctx, target),
        Command::Bosonize { target } => bosonize_row(ctx, target),
        Command::Lemmas { name } => lemmas(ctx, name.as_deref()),
        Command::List { group } => list(ctx, group.as_deref()),
        Command::ReportAll => {
            let cfg = ReportConfig { enum_cap: ctx.enum_cap, ..ReportConfig::default() };
            let r = report_all(&ctx.p, &cfg, ctx.par)?;
            Ok((r.pass(), serde_json::to_value(&r).expect("serializable")))
        }
    }
}

fn emit(doc: &Value, output: Option<&PathBuf>) -> std::io::Result<()> {
    let text = canonical_json(doc) + "\n";
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn enum_cap() -> Result<u64, Failure> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("{} must be a positive integer", ENUM_CAP_VAR))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = json!({
                "schemaVersion": SCHEMA_VERSION,
                "pass": false,
                "error": { "kind": "Usage", "message": e.to_string().trim() },
            });
            let _ = emit(&doc, None);
            return ExitCode::from(2);
        }
    };
    let verb = cli.command.verb();
    let par = if cli.threads == 1 { Parallelism::Sequential } else { Parallelism::Parallel };
    let outcome = enum_cap().and_then(|cap| {
        let ctx = Ctx { p: cli.primes.clone(), params: cli.params.clone(), par, enum_cap: cap };
        with_threads(cli.threads, || run(&cli.command, &ctx))
    });
    let (code, doc) = match outcome {
        Ok((pass, result)) => (
            if pass { 0 } else { 1 },
            json!({ "schemaVersion": SCHEMA_VERSION, "command": verb, "pass": pass, "result": result }),
        ),
        Err(f) => (
            2,
            json!({
                "schemaVersion": SCHEMA_VERSION,
                "command": verb,
                "pass": false,
                "error": { "kind": f.kind(), "message": f.message() },
            }),
        ),
    };
    if let Err(e) = emit(&doc, cli.output.as_ref()) {
        eprintln!("phopf: cannot write report: {}", e);
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
