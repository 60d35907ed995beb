//! Command-line front end. Every command prints one JSON report.

use crate::algebra::{build_adjoint_operation, build_algebra, build_parabolic, Kind, LieSuperalgebra, ParabolicDecomposition, Weight};
use crate::bgg::{bgg_verdict, bggtaut_shape, reproduce, ReproduceOptions, ResolutionShape, SCENARIOS};
use crate::chains::{is_zero, Complex, Side};
use crate::error::{Error, Result};
use crate::homology::{analyze, homology_reports, HomologyReport, LDecomposition, LeviIrreps, PredicateReport};
use crate::modules::{build_irrep, compose, DEFAULT_MAX_DEPTH};
use crate::scalar::{fmt_q, parse_q, Q};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

pub const SCHEMA: &str = "superbgg/1";

/// Parses `a1,..,ar|b1,..,bs` into exact coordinates. When one side is empty
/// the bar may be left out.
pub fn parse_weight(text: &str, r: usize, s: usize) -> Result<Weight> {
    let (left, right, right_at) = match text.find('|') {
        Some(i) => (&text[..i], &text[i + 1..], i + 1),
        None if r == 0 => ("", text, 0),
        None if s == 0 => (text, "", text.len()),
        None => {
            let got = if text.trim().is_empty() { 0 } else { text.split(',').count() };
            return Err(Error::LengthMismatch { expected: format!("{r}|{s}"), got: got.to_string() });
        }
    };
    let left = parse_block(left, 0)?;
    let right = parse_block(right, right_at)?;
    if left.len() != r || right.len() != s {
        return Err(Error::LengthMismatch { expected: format!("{r}|{s}"), got: format!("{}|{}", left.len(), right.len()) });
    }
    Ok(left.into_iter().chain(right).collect())
}

fn parse_block(text: &str, offset: usize) -> Result<Vec<Q>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for token in text.split(',') {
        let q = parse_q(token).ok_or_else(|| Error::ParseError { pos, msg: format!("not a rational number: {:?}", token.trim()) })?;
        out.push(q);
        pos += token.len() + 1;
    }
    Ok(out)
}

pub fn weight_json(w: &[Q]) -> Value {
    Value::Array(w.iter().map(|x| Value::String(fmt_q(x))).collect())
}

fn weight_list_json(ws: &[(Weight, usize)]) -> Value {
    ws.iter().map(|(w, m)| json!({ "weight": weight_json(w), "multiplicity": m })).collect()
}

fn weight_map_json(ws: &BTreeMap<Weight, usize>) -> Value {
    ws.iter().map(|(w, m)| json!({ "weight": weight_json(w), "multiplicity": m })).collect()
}

fn decomposition_json(d: &LDecomposition) -> Value {
    let entries: Vec<Value> = d
        .entries
        .iter()
        .map(|e| {
            json!({
                "highest_weight": weight_json(&e.highest_weight),
                "multiplicity": e.hw_vector_count,
                "irrep_dimension": e.irrep_dimension,
                "generated_dimension": e.generated_dimension,
            })
        })
        .collect();
    json!({ "entries": entries, "completely_reducible": d.completely_reducible, "dimension": d.total_dimension })
}

fn predicates_json(p: &PredicateReport) -> Value {
    json!({ "statements": p.statements, "consistent": p.consistent })
}

fn shape_json(s: &ResolutionShape) -> Value {
    json!({
        "degrees": s.degrees.iter().map(|d| weight_list_json(d)).collect::<Vec<_>>(),
        "truncated": s.truncated,
        "terminates_at": s.terminates_at,
    })
}

fn report_json(r: &HomologyReport) -> Value {
    json!({
        "degree": r.degree,
        "dim_ker_boundary": r.dim_ker_boundary,
        "dim_im_boundary_above": r.dim_im_boundary_above,
        "homology_dimension": r.homology_dimension,
        "homology_weights": weight_map_json(&r.homology_weights),
        "homology_decomposition": decomposition_json(&r.homology_decomposition),
        "ker_quabla_dimension": r.ker_quabla_dimension,
        "ker_quabla_decomposition": decomposition_json(&r.ker_quabla_decomposition),
        "generalized_zero_dimension": r.generalized_zero_dimension,
        "predicates": predicates_json(&r.predicates),
    })
}

#[derive(Parser, Debug)]
#[command(name = "superbgg", version, about = "Exact Kostant homology and BGG-resolution checks for gl(m|n) and osp(m|2n)")]
pub struct Cli {
    /// Worker threads for block-parallel linear algebra.
    #[arg(long, global = true, env = "SUPERBGG_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Algebra structure and consistency checks.
    Alg {
        #[command(subcommand)]
        action: AlgAction,
    },
    /// Irreducible highest-weight modules.
    Rep {
        #[command(subcommand)]
        action: RepAction,
    },
    /// Kostant homology, quabla and predicate table.
    Homology(ScenarioArgs),
    /// BGG-existence verdict.
    Bgg {
        #[command(subcommand)]
        action: BggAction,
    },
    /// Run a named scenario.
    Reproduce(ReproduceArgs),
}

#[derive(Subcommand, Debug)]
pub enum AlgAction {
    Info(AlgArgs),
}

#[derive(Subcommand, Debug)]
pub enum RepAction {
    Build(ScenarioArgs),
}

#[derive(Subcommand, Debug)]
pub enum BggAction {
    Check(ScenarioArgs),
}

#[derive(Args, Debug, Clone)]
pub struct AlgArgs {
    /// `gl` or `osp`.
    #[arg(long)]
    pub alg: String,
    /// gl(m|n), or osp(m|2n).
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Normalization of the invariant form.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub c: String,
}

#[derive(Args, Debug, Clone)]
pub struct ScenarioArgs {
    #[command(flatten)]
    pub alg: AlgArgs,
    /// Simple roots to drop from the Levi factor.
    #[arg(long, value_delimiter = ',', conflicts_with = "levi")]
    pub parabolic_drop: Option<Vec<usize>>,
    /// Simple roots spanning the Levi factor (default: none, the Borel).
    #[arg(long, value_delimiter = ',')]
    pub levi: Option<Vec<usize>>,
    /// Highest weight `a1,..,ar|b1,..,bs`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    /// Adjoint operation type (1 or 2) on type-I algebras.
    #[arg(long, default_value_t = 1)]
    pub star_type: u8,
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    pub max_depth: usize,
}

#[derive(Args, Debug, Clone)]
pub struct ReproduceArgs {
    /// One of the registered scenario names.
    pub name: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub kmax: Option<usize>,
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Errors caused by the request rather than by a failed computation.
pub fn is_input_error(e: &Error) -> bool {
    !matches!(e, Error::NotCompletelyReducible(_) | Error::TruncationTooSmall { .. } | Error::Internal(_))
}

fn algebra(a: &AlgArgs) -> Result<LieSuperalgebra> {
    let kind: Kind = a.alg.parse()?;
    let c = parse_q(&a.c).ok_or_else(|| Error::ParseError { pos: 0, msg: format!("not a rational number: {:?}", a.c) })?;
    build_algebra(kind, a.m, a.n, c)
}

fn levi_of(g: &LieSuperalgebra, s: &ScenarioArgs) -> Result<Vec<usize>> {
    let count = g.simple_roots.len();
    let check = |v: &[usize]| match v.iter().find(|&&i| i >= count) {
        Some(i) => Err(Error::InvalidIndex(format!("simple root {i} of {count}"))),
        None => Ok(()),
    };
    match (&s.levi, &s.parabolic_drop) {
        (Some(l), _) => {
            check(l)?;
            Ok(l.clone())
        }
        (None, Some(d)) => {
            check(d)?;
            Ok((0..count).filter(|i| !d.contains(i)).collect())
        }
        (None, None) => Ok(Vec::new()),
    }
}

fn echo(s: &ScenarioArgs, g: &LieSuperalgebra, levi: &[usize], lambda: &[Q]) -> Value {
    json!({
        "alg": s.alg.alg,
        "m": s.alg.m,
        "n": s.alg.n,
        "c": fmt_q(&g.c),
        "levi": levi,
        "weight": weight_json(lambda),
        "kmax": s.kmax,
        "star_type": s.star_type,
    })
}

struct Outcome {
    report: Value,
    ok: bool,
}

fn alg_info(a: &AlgArgs) -> Result<Outcome> {
    let g = algebra(a)?;
    let (even, odd) = g.sdim();
    let checks = json!({
        "jacobi": g.check_jacobi(),
        "form_invariant": g.check_form_invariance(),
        "form_supersymmetric": g.check_form_supersymmetric(),
        "root_vectors": g.check_root_vectors(),
    });
    let ok = checks.as_object().is_some_and(|m| m.values().all(|v| v == &Value::Bool(true)));
    Ok(Outcome {
        report: json!({
            "command": "alg info",
            "input": { "alg": a.alg, "m": a.m, "n": a.n, "c": fmt_q(&g.c) },
            "dimension": { "even": even, "odd": odd },
            "rank": { "r": g.r, "s": g.s },
            "simple_roots": g.simple_roots.iter().map(|w| weight_json(w)).collect::<Vec<_>>(),
            "positive_roots": g.positive.len(),
            "rho": weight_json(&g.rho),
            "checks": checks,
        }),
        ok,
    })
}

struct Setup {
    g: LieSuperalgebra,
    p: ParabolicDecomposition,
    levi: Vec<usize>,
    lambda: Weight,
}

fn setup(s: &ScenarioArgs) -> Result<Setup> {
    let g = algebra(&s.alg)?;
    let lambda = parse_weight(&s.weight, g.r, g.s)?;
    let levi = levi_of(&g, s)?;
    let p = build_parabolic(&g, &levi)?;
    Ok(Setup { g, p, levi, lambda })
}

fn rep_build(s: &ScenarioArgs) -> Result<Outcome> {
    let Setup { g, levi, lambda, .. } = setup(s)?;
    let op = build_adjoint_operation(&g, s.star_type)?;
    let module = build_irrep(&g, &lambda, &op, s.max_depth)?;
    let (even, odd) = module.sdim();
    let weights: BTreeMap<Weight, usize> = module.blocks.iter().map(|(w, v)| (w.clone(), v.len())).collect();
    let checks = json!({
        "bracket": module.check_bracket(&g),
        "weights": module.check_weights(&g),
        "contravariant": module.check_contravariance(&g, &op),
    });
    let ok = checks.as_object().is_some_and(|m| m.values().all(|v| v == &Value::Bool(true)));
    Ok(Outcome {
        report: json!({
            "command": "rep build",
            "input": echo(s, &g, &levi, &lambda),
            "dimension": { "even": even, "odd": odd },
            "weights": weight_map_json(&weights),
            "star": module.is_star(&op),
            "checks": checks,
        }),
        ok,
    })
}

fn homology(s: &ScenarioArgs) -> Result<Outcome> {
    let Setup { g, p, levi, lambda } = setup(s)?;
    let op = build_adjoint_operation(&g, s.star_type)?;
    let module = build_irrep(&g, &lambda, &op, s.max_depth)?;
    let top = s.kmax + 1;
    let cx = Complex::build(&g, &p, &module, Side::Opposite, top)?;
    let nil = Complex::build(&g, &p, &module, Side::Nilradical, top)?;

    let squares_vanish = |c: &Complex| {
        (1..top).all(|k| is_zero(&compose(&c.boundary[k], &c.boundary[k + 1])) && is_zero(&compose(&c.coboundary[k], &c.coboundary[k - 1])))
    };
    let nilpotency = json!({ "opposite": squares_vanish(&cx), "nilradical": squares_vanish(&nil) });
    let quabla_agree: Vec<bool> = (0..top).map(|k| cx.quabla_direct(k) == cx.quabla_casimir(k)).collect();

    let an = analyze(&cx);
    let mut irreps = LeviIrreps::new(&g, &p, &op, s.max_depth);
    let reports = homology_reports(&cx, &an, &mut irreps)?;
    let consistent = reports.iter().all(|r| r.predicates.consistent);
    let ok = nilpotency["opposite"] == true && nilpotency["nilradical"] == true && quabla_agree.iter().all(|&b| b) && consistent;
    Ok(Outcome {
        report: json!({
            "command": "homology",
            "input": echo(s, &g, &levi, &lambda),
            "chain_dimensions": cx.spaces.iter().map(|sp| sp.dim()).collect::<Vec<_>>(),
            "nilpotency": nilpotency,
            "quabla_cross_check": quabla_agree,
            "predicates_consistent": consistent,
            "degrees": reports.iter().map(report_json).collect::<Vec<_>>(),
        }),
        ok,
    })
}

fn bgg_check(s: &ScenarioArgs) -> Result<Outcome> {
    let Setup { g, p, levi, lambda } = setup(s)?;
    let op = build_adjoint_operation(&g, s.star_type)?;
    let module = build_irrep(&g, &lambda, &op, s.max_depth)?;
    let v = bgg_verdict(&g, &p, &module, &op, s.kmax, s.max_depth)?;

    // Natural osp-module on the parabolic dropping the first simple root: compare
    // with the closed form.
    let mut natural = vec![crate::scalar::zero(); g.rank()];
    natural[0] = crate::scalar::one();
    let maximal: Vec<usize> = (1..g.simple_roots.len()).collect();
    let closed_form = if g.kind == Kind::Osp && levi == maximal && lambda == natural {
        bggtaut_shape(g.m, g.n, s.kmax).ok().map(|sh| sh.degrees == v.shape.degrees)
    } else {
        None
    };
    let consistent = v.reports.iter().all(|r| r.predicates.consistent);
    Ok(Outcome {
        report: json!({
            "command": "bgg check",
            "input": echo(s, &g, &levi, &lambda),
            "verdict": {
                "status": v.status,
                "basis_of_decision": v.basis,
                "witness": v.witness,
            },
            "shape": shape_json(&v.shape),
            "closed_form_match": closed_form,
            "predicates_consistent": consistent,
            "degrees": v.reports.iter().map(report_json).collect::<Vec<_>>(),
        }),
        ok: consistent && closed_form != Some(false),
    })
}

fn run_reproduce(a: &ReproduceArgs) -> Result<Outcome> {
    if !SCENARIOS.contains(&a.name.as_str()) {
        return Err(Error::UnknownScenario(a.name.clone()));
    }
    let lambda = match &a.lambda {
        None => None,
        Some(text) => {
            let (r, s) = match a.name.as_str() {
                "osp12-counterexample" => (0, 1),
                "kac-gl21" => (2, 1),
                "forlapl-ker1" => (a.m.unwrap_or(4) / 2, a.n.unwrap_or(3)),
                other => return Err(Error::PreconditionViolated(format!("scenario {other} takes no --lambda"))),
            };
            Some(parse_weight(text, r, s)?)
        }
    };
    let opts = ReproduceOptions { lambda, m: a.m, n: a.n, k_max: a.kmax };
    let r = reproduce(&a.name, &opts)?;
    let ok = r.pass;
    Ok(Outcome {
        report: json!({
            "command": "reproduce",
            "input": { "name": a.name, "lambda": opts.lambda.as_deref().map(weight_json), "m": a.m, "n": a.n, "kmax": a.kmax },
            "pass": r.pass,
            "checks": r.checks,
        }),
        ok,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Alg { action: AlgAction::Info(a) } => alg_info(a),
        Command::Rep { action: RepAction::Build(s) } => rep_build(s),
        Command::Homology(s) => homology(s),
        Command::Bgg { action: BggAction::Check(s) } => bgg_check(s),
        Command::Reproduce(a) => run_reproduce(a),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r,
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let started = Instant::now();
    let outcome = match cli.workers {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Internal(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    let (mut report, code) = match outcome {
        Ok(o) => {
            let code = if o.ok { EXIT_OK } else { EXIT_CHECK_FAILED };
            (o.report, code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = if is_input_error(&e) { EXIT_INPUT } else { EXIT_CHECK_FAILED };
            (json!({ "error": { "kind": e.kind(), "message": e.to_string() } }), code)
        }
    };
    if let Value::Object(map) = &mut report {
        map.insert("schema".into(), Value::String(SCHEMA.into()));
        map.insert("exit_code".into(), json!(code));
        map.insert("wall_time_ms".into(), json!(started.elapsed().as_millis() as u64));
    }
    let text = serde_json::to_string_pretty(&report).unwrap_or_default();
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: cannot write report: {e}");
        return EXIT_INPUT;
    }
    code
}
