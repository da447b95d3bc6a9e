//! Command-line front end: `ord`, `verify`, `search`, `bezout`, `constants`.
//!
//! Reports are JSON with sorted keys. Exit codes: 0 ok, 1 parse, 2 domain or
//! hypothesis, 3 failed identity or bound, 4 resource.

pub mod scenario;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use multest_algebra::Ideal;
use serde_json::{json, Value};

use crate::calculus::identities::{builtin_instances, identity_suite, IdentityReport, SuiteInstance};
use crate::error::{Error, Result};
use crate::model::custom::load_custom_model;
use crate::model::{model_by_name, model_validate, GroupModel, LieSubalgebra};
use crate::order::{ord_direct, ord_via_ideals};
use crate::search::geometry::bezout_check;
use crate::search::{chain_search, constants, verify_bound};
use scenario::{parse_point, parse_poly, ScenarioFile};

#[derive(Parser, Debug)]
#[command(name = "multest", version, about = "Multiplicity-estimate calculus on compactified matrix groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every random choice (overrides the scenario's seed).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Gröbner reduction-step budget.
    #[arg(long = "budget-gb", global = true, value_name = "STEPS")]
    pub budget_gb: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timing in the report (breaks byte-identical reruns).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order of vanishing of a form at a group point along a subalgebra.
    Ord(OrdArgs),
    /// Model validation, identity suite and oracle agreement.
    Verify(VerifyArgs),
    /// Obstruction search for a scenario file.
    Search(SearchArgs),
    /// Bezout inequality for a zero-dimensional intersection with the closure.
    Bezout(BezoutArgs),
    /// Constants of a model.
    Constants(ModelArgs),
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// Built-in model (gm, gl2, borel2) or a custom model TOML file.
    #[arg(long, default_value = "gm")]
    pub model: String,
}

#[derive(Args, Debug)]
pub struct OrdArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Group parameters, comma separated; the identity when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long)]
    pub poly: String,
    /// Named subalgebra of the model.
    #[arg(long, default_value = "full")]
    pub sub: String,
    #[arg(long, default_value_t = 6)]
    pub tmax: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run the built-in instance set of this model.
    #[arg(long = "builtin-suite", conflicts_with = "scenario")]
    pub builtin_suite: Option<String>,
    /// Scenario file with a model and an `instances` list.
    #[arg(long)]
    pub scenario: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub scenario: PathBuf,
}

#[derive(Args, Debug)]
pub struct BezoutArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Generators of `J`; repeat for several.
    #[arg(long = "poly", required = true)]
    pub polys: Vec<String>,
    /// Degree `D` (defaults to the largest generator degree).
    #[arg(long)]
    pub degree: Option<u32>,
}

/// A finished command: the report and whether it counts as success.
pub struct Outcome {
    pub report: Value,
    pub failure: Option<Error>,
}

fn load_model(spec: &str) -> Result<GroupModel> {
    if spec.ends_with(".toml") || Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return load_custom_model(&text);
    }
    model_by_name(spec)
}

fn read_scenario(path: &Path) -> Result<ScenarioFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ScenarioFile::parse(&text)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn ord(args: &OrdArgs) -> Result<Outcome> {
    let model = load_model(&args.model.model)?;
    let sub = model.subalgebra(&args.sub)?;
    let g = match &args.point {
        Some(p) => parse_point(&model, p)?,
        None => model.identity().clone(),
    };
    let p = parse_poly(&model, &args.poly)?;
    let r = ord_direct(&model, &sub, &p, &g, args.tmax)?;
    let report = json!({
        "command": "ord",
        "model": model.name(),
        "point": g.to_string(),
        "poly": p.to_string_with(&model.names()),
        "subalgebra": args.sub,
        "tmax": args.tmax,
        "result": to_value(&r),
    });
    Ok(Outcome { report, failure: None })
}

fn identities_value(r: &IdentityReport) -> Value {
    Value::Array(
        r.outcomes
            .iter()
            .map(|o| json!({"identity": o.identity, "instance": o.instance, "status": o.status.to_string(), "detail": o.detail}))
            .collect(),
    )
}

/// `ord_direct(gh) > t` against both ideal-side predicates for every instance.
fn oracle_agreement(model: &GroupModel, sub: &LieSubalgebra, instances: &[SuiteInstance]) -> Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for inst in instances {
        let Some(p) = inst.i.generators().iter().find(|p| !model.ig().contains(p).unwrap_or(true)).cloned() else {
            continue;
        };
        let gh = model.mul(&inst.g, &inst.h);
        let direct = ord_direct(model, sub, &p, &gh, inst.t + 1)?;
        for t in 0..=inst.t {
            let pred = ord_via_ideals(model, sub, &p, &inst.g, &inst.h, t)?;
            checked += 1;
            let want = direct.exceeds(t);
            if Some(pred.left) != want || Some(pred.right) != want {
                bad.push(format!("{} t={t}", inst.label));
            }
        }
    }
    Ok((checked, bad))
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let (model, sub, instances) = match (&args.builtin_suite, &args.scenario) {
        (Some(name), None) => {
            let model = model_by_name(name)?;
            let (sub, inst) = builtin_instances(&model)?;
            (model, sub, inst)
        }
        (None, Some(path)) => {
            let file = read_scenario(path)?;
            let model = file.model()?;
            let sub = file.subalgebra(&model)?;
            let inst = file.instances(&model)?;
            (model, sub, inst)
        }
        _ => return Err(Error::Parse("verify needs --builtin-suite or --scenario".into())),
    };
    let validation = model_validate(&model)?;
    let suite = identity_suite(&model, &sub, &instances)?;
    let (checked, disagreements) = oracle_agreement(&model, &sub, &instances)?;
    let failures: Vec<String> =
        suite.failures().iter().map(|o| format!("{} on {}", o.identity, o.instance)).chain(disagreements.iter().map(|d| format!("oracle disagreement {d}"))).collect();
    let report = json!({
        "command": "verify",
        "model": model.name(),
        "validation": validation.checks.iter().map(|(c, d)| json!({"check": c, "detail": d})).collect::<Vec<_>>(),
        "identities": identities_value(&suite),
        "oracle": {"checked": checked, "disagreements": disagreements},
        "failures": failures,
        "passed": failures.is_empty(),
    });
    let failure = (!failures.is_empty()).then(|| Error::Validation { check: "identity".into(), detail: failures.join("; ") });
    Ok(Outcome { report, failure })
}

fn search(args: &SearchArgs, global: &Global) -> Result<Outcome> {
    let file = read_scenario(&args.scenario)?;
    let model = file.model()?;
    let sc = file.scenario(model, global.seed)?;
    let consts = constants(&sc.model);
    let report = chain_search(&sc)?;
    let verified = verify_bound(&report, &consts);
    let holds = report.conclusions.all();
    let out = json!({
        "command": "search",
        "inputs": {
            "model": sc.model.name(),
            "poly": sc.p.to_string_with(&sc.model.names()),
            "sigma1": sc.sigma1.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "s": sc.s, "t": sc.t, "d": sc.d, "d0": sc.d0,
            "theorem": sc.theorem.number(),
            "seed": sc.seed,
        },
        "constants": to_value(&consts),
        "report": to_value(&report),
        "verified": verified,
    });
    let failure = (!(verified && holds)).then(|| Error::Validation {
        check: "bound".into(),
        detail: format!("{} <= {} is {}, conclusions hold: {holds}", report.bound_lhs, report.bound_rhs, report.conclusions.bound),
    });
    Ok(Outcome { report: out, failure })
}

fn bezout(args: &BezoutArgs) -> Result<Outcome> {
    let model = load_model(&args.model.model)?;
    let polys = args.polys.iter().map(|p| parse_poly(&model, p)).collect::<Result<Vec<_>>>()?;
    let j = Ideal::new(model.nvars(), polys)?;
    let r = bezout_check(&model, &j, args.degree)?;
    let failure = (!r.holds).then(|| Error::Validation { check: "bezout".into(), detail: format!("{} > {}", r.lhs, r.rhs) });
    Ok(Outcome { report: json!({"command": "bezout", "model": model.name(), "result": to_value(&r)}), failure })
}

fn constants_cmd(args: &ModelArgs) -> Result<Outcome> {
    let model = load_model(&args.model)?;
    Ok(Outcome { report: json!({"command": "constants", "model": model.name(), "result": to_value(&constants(&model))}), failure: None })
}

/// Runs one parsed command and returns the outcome; does no I/O on success
/// beyond reading input files.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    if let Some(steps) = cli.global.budget_gb {
        multest_algebra::set_step_budget(steps);
    }
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Ord(a) => ord(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a, &cli.global),
        Command::Bezout(a) => bezout(a),
        Command::Constants(a) => constants_cmd(a),
    }?;
    if let Value::Object(map) = &mut out.report {
        map.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").into()));
        if cli.global.timing {
            map.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
        }
    }
    Ok(out)
}

pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Entry point of the binary.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = render(&out.report);
            match &cli.global.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            match out.failure {
                Some(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
