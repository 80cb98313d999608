//! Command-line front end.
//!
//! [`run_with`] parses arguments, runs one subcommand and returns the process
//! exit code, writing documents to `out` and diagnostics to `err`:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (axiom violations included) |
//! | 1 | I/O and other failures |
//! | 2 | malformed input file or command line |
//! | 3 | too many candidates for exact search |
//! | 4 | unknown or unsupported rule, axiom or model |
//! | 5 | unknown candidate or malformed axis |
//! | 6 | generator parameter out of domain |

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::axioms::{self, AxiomId, AxiomInstance, Witness};
use crate::axis::Axis;
use crate::costs::{ballot_cost, profile_cost, CostRule};
use crate::error::Error;
use crate::format::{format_weight, parse_profile, write_approval, write_ranking, ProfileDocument};
use crate::ilp::export_ilp;
use crate::linearity::{coapproval_partition, consistent_axes_with};
use crate::metrics::avg_distance_to_truth;
use crate::profile::{Candidates, Weight, WeightedProfile};
use crate::ranking::{ranking_cost, ranking_profile_cost, solve_ranking, RankingProfile, RankingRule};
use crate::solver::{solve, solve_decomposed, SolveOptions, SolveResult};
use crate::synthetic::{generate, NoiseModel, NoiseModelConfig};

#[derive(Debug, Parser)]
#[command(name = "axis-rules", version, about = "Exact axis rules for approval and ranking profiles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find every optimal axis of a profile.
    Solve(SolveArgs),
    /// Cost of one axis, with a per-ballot breakdown.
    Cost(CostArgs),
    /// Sample a synthetic profile around a hidden axis.
    Gen(GenArgs),
    /// Distance of each rule's output to the hidden axis over many samples.
    Experiment(ExperimentArgs),
    /// Check axioms on fixed or random instances.
    Axioms(AxiomArgs),
    /// Decide whether some axis makes every ballot an interval.
    CheckLinear(CheckLinearArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// vd, mf, bc, ms, ft, genus, vd-rank or ft-rank.
    #[arg(long)]
    rule: String,
    #[arg(long)]
    input: PathBuf,
    /// Also report every optimal axis' cost under each rule.
    #[arg(long)]
    all_optimal: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Plain enumeration, without pair pruning or early abort.
    #[arg(long)]
    no_prune: bool,
    /// Solve co-approval classes separately (bc, ms and ft only).
    #[arg(long)]
    decompose: bool,
    /// Also write the integer program (vd and bc only) to this path.
    #[arg(long, value_name = "PATH")]
    export_ilp: Option<PathBuf>,
    /// Largest candidate count to enumerate.
    #[arg(long, default_value_t = 12)]
    bound: usize,
}

#[derive(Debug, Args)]
struct CostArgs {
    #[arg(long)]
    rule: String,
    #[arg(long)]
    input: PathBuf,
    /// Candidate names left to right, comma separated.
    #[arg(long)]
    axis: String,
}

#[derive(Debug, Args)]
struct ModelParams {
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    phi: Option<f64>,
    #[arg(long)]
    sigma: Option<f64>,
    /// Approval radius of the noisy model.
    #[arg(long = "r")]
    radius: Option<f64>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// maverick, flips, omissions, swaps or noisy.
    #[arg(long)]
    model: String,
    #[command(flatten)]
    params: ModelParams,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Profile path; the hidden axis goes to `<out>.truth`.
    #[arg(long)]
    out: PathBuf,
    /// Noisy model only: also write voters' rankings to `<out>.rankings`.
    #[arg(long)]
    rankings: bool,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// Semicolon-separated models, e.g. `noisy:sigma=0.1,r=0.4;maverick:p=0.1`.
    #[arg(long)]
    models: String,
    /// Comma-separated rules.
    #[arg(long, default_value = "vd,mf,bc,ms,ft")]
    rules: String,
    #[arg(long)]
    replicates: usize,
    #[arg(long, default_value_t = 7)]
    m: usize,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// CSV path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["fixtures", "random"]))]
struct AxiomArgs {
    /// An axiom name, or `all`.
    #[arg(long)]
    axiom: String,
    /// A rule name, or `all`.
    #[arg(long)]
    rule: String,
    /// Check the built-in instances.
    #[arg(long)]
    fixtures: bool,
    /// Check this many random instances.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CheckLinearArgs {
    #[arg(long)]
    input: PathBuf,
    /// List every consistent axis.
    #[arg(long)]
    axes: bool,
    #[arg(long, default_value_t = 12)]
    bound: usize,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::SizeLimit { .. } | Error::TooManyCandidates { .. } => 3,
            Error::RuleUnsupported { .. } => 4,
            Error::UnknownCandidate(_)
            | Error::InvalidAxis(_)
            | Error::CandidateMismatch(_)
            | Error::AxisSizeMismatch { .. } => 5,
            Error::ParameterDomain(_) => 6,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::new(1, format!("{}: {e}", path.display()))
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Cost(a) => cmd_cost(&a, out),
        Command::Gen(a) => cmd_gen(&a),
        Command::Experiment(a) => cmd_experiment(&a, out),
        Command::Axioms(a) => cmd_axioms(&a, out),
        Command::CheckLinear(a) => cmd_check_linear(&a, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let (stdout, stderr) = (io::stdout(), io::stderr());
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn read_profile(path: &Path) -> std::result::Result<ProfileDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_profile(&text).map_err(|e| match e {
        Error::Parse { line, message } => Failure::new(2, format!("{}:{line}: {message}", path.display())),
        other => other.into(),
    })
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn emit(out: &mut dyn Write, doc: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(doc).expect("values serialize");
    writeln!(out, "{text}").map_err(|e| Failure::new(1, e.to_string()))
}

/// Either kind of rule, resolved from its name.
#[derive(Debug, Clone, Copy)]
enum AnyRule {
    Approval(CostRule),
    Ranking(RankingRule),
}

impl AnyRule {
    fn name(self) -> &'static str {
        match self {
            AnyRule::Approval(r) => r.name(),
            AnyRule::Ranking(r) => r.name(),
        }
    }
}

fn parse_rule(name: &str) -> std::result::Result<AnyRule, Failure> {
    name.parse::<CostRule>()
        .map(AnyRule::Approval)
        .or_else(|_| name.parse::<RankingRule>().map(AnyRule::Ranking))
        .map_err(|_| Failure::new(4, format!("unknown rule `{name}`")))
}

fn mismatch(rule: AnyRule) -> Failure {
    let wants = match rule {
        AnyRule::Approval(_) => "approval ballots",
        AnyRule::Ranking(_) => "ranking ballots",
    };
    Failure::new(4, format!("rule {} needs a profile of {wants}", rule.name()))
}

/// Integers as JSON numbers, other weights as exact strings.
fn weight_json(w: Weight) -> Value {
    if w.is_integer() {
        json!(w.to_integer())
    } else {
        json!(format_weight(w))
    }
}

/// Names of `axis` read in whichever direction is lexicographically smaller.
fn oriented_names(c: &Candidates, axis: &Axis) -> Vec<String> {
    let forward = c.axis_names(axis);
    let backward: Vec<String> = forward.iter().rev().cloned().collect();
    forward.min(backward)
}

fn axis_json(c: &Candidates, axis: &Axis) -> Value {
    json!(oriented_names(c, axis))
}

/// Optimal axes in output orientation, sorted by their names.
fn sorted_axes(c: &Candidates, axes: &[Axis]) -> Vec<Axis> {
    let mut axes = axes.to_vec();
    axes.sort_by_cached_key(|a| oriented_names(c, a));
    axes
}

fn profile_json(p: &WeightedProfile) -> Value {
    let c = p.candidates();
    let entries: Vec<Value> = p
        .entries()
        .iter()
        .map(|&(b, w)| json!({ "ballot": b.members().map(|i| c.name(i)).collect::<Vec<_>>(), "weight": weight_json(w) }))
        .collect();
    json!({ "candidates": c.names(), "entries": entries })
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Outcome {
    let rule = parse_rule(&a.rule)?;
    let doc = read_profile(&a.input)?;
    let options = SolveOptions {
        enumeration_bound: a.bound,
        use_pair_pruning: !a.no_prune,
        use_early_abort: !a.no_prune,
        use_decomposition: false,
        warm_start: None,
        thread_count: a.threads.max(1),
    };
    let started = Instant::now();
    let (result, per_axis) = match (rule, &doc) {
        (AnyRule::Approval(r), ProfileDocument::Approval(p)) => {
            if let Some(path) = &a.export_ilp {
                write_file(path, &export_ilp(p, r)?)?;
            }
            let result = if a.decompose {
                solve_decomposed(p, r, &options)?
            } else {
                solve(p, r, &options)?
            };
            let result = SolveResult {
                optimal_axes: sorted_axes(p.candidates(), &result.optimal_axes),
                ..result
            };
            let per_axis = a.all_optimal.then(|| approval_costs(p, &result));
            (result, per_axis)
        }
        (AnyRule::Ranking(r), ProfileDocument::Ranking(p)) => {
            if a.export_ilp.is_some() {
                return Err(Failure::new(4, format!("rule {} has no ILP export", r.name())));
            }
            if a.decompose {
                return Err(Failure::new(4, format!("rule {} does not decompose", r.name())));
            }
            let result = solve_ranking(p, r, &options)?;
            let result = SolveResult {
                optimal_axes: sorted_axes(p.candidates(), &result.optimal_axes),
                ..result
            };
            let per_axis = a.all_optimal.then(|| ranking_costs(p, &result));
            (result, per_axis)
        }
        _ => return Err(mismatch(rule)),
    };
    let wall_time_ms = started.elapsed().as_secs_f64() * 1000.0;
    let c = doc.candidates();
    let mut body = json!({
        "rule": rule.name(),
        "optimal_cost": weight_json(result.optimal_cost),
        "optimal_axes": result.optimal_axes.iter().map(|x| axis_json(c, x)).collect::<Vec<_>>(),
        "axes_examined": result.axes_examined,
        "axes_pruned": result.axes_pruned,
        "wall_time_ms": wall_time_ms,
    });
    if let Some(costs) = per_axis {
        body["per_axis_costs"] = Value::Array(costs?);
    }
    emit(out, &body)
}

fn approval_costs(p: &WeightedProfile, r: &SolveResult) -> std::result::Result<Vec<Value>, Failure> {
    r.optimal_axes
        .iter()
        .map(|axis| {
            let mut costs = serde_json::Map::new();
            for rule in CostRule::ALL {
                costs.insert(rule.name().into(), weight_json(profile_cost(rule, p, axis)?));
            }
            Ok(json!({ "axis": axis_json(p.candidates(), axis), "costs": costs }))
        })
        .collect()
}

fn ranking_costs(p: &RankingProfile, r: &SolveResult) -> std::result::Result<Vec<Value>, Failure> {
    r.optimal_axes
        .iter()
        .map(|axis| {
            let mut costs = serde_json::Map::new();
            for rule in RankingRule::ALL {
                costs.insert(rule.name().into(), weight_json(ranking_profile_cost(rule, p, axis)?));
            }
            Ok(json!({ "axis": axis_json(p.candidates(), axis), "costs": costs }))
        })
        .collect()
}

fn cmd_cost(a: &CostArgs, out: &mut dyn Write) -> Outcome {
    let rule = parse_rule(&a.rule)?;
    let doc = read_profile(&a.input)?;
    let c = doc.candidates();
    let axis = c.parse_axis(&a.axis)?;
    let mut entries = Vec::new();
    let total = match (rule, &doc) {
        (AnyRule::Approval(r), ProfileDocument::Approval(p)) => {
            for &(b, w) in p.entries() {
                let cost = ballot_cost(r, b, &axis)?;
                entries.push(json!({
                    "ballot": b.members().map(|i| c.name(i)).collect::<Vec<_>>(),
                    "weight": weight_json(w),
                    "cost": cost,
                    "weighted_cost": weight_json(w * Weight::from_integer(cost)),
                }));
            }
            profile_cost(r, p, &axis)?
        }
        (AnyRule::Ranking(r), ProfileDocument::Ranking(p)) => {
            for (ranking, w) in p.entries() {
                let cost = ranking_cost(r, ranking, &axis)?;
                entries.push(json!({
                    "ranking": ranking.order().iter().map(|&i| c.name(i)).collect::<Vec<_>>(),
                    "weight": weight_json(*w),
                    "cost": cost,
                    "weighted_cost": weight_json(*w * Weight::from_integer(cost)),
                }));
            }
            ranking_profile_cost(r, p, &axis)?
        }
        _ => return Err(mismatch(rule)),
    };
    emit(
        out,
        &json!({
            "rule": rule.name(),
            "axis": c.axis_names(&axis),
            "total_cost": weight_json(total),
            "entries": entries,
        }),
    )
}

fn noise_model(name: &str, params: &BTreeMap<String, f64>) -> std::result::Result<NoiseModel, Failure> {
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| Failure::new(6, format!("model {name} needs --{key}")))
    };
    let allowed: &[&str] = match name {
        "maverick" | "flips" | "omissions" => &["p"],
        "swaps" => &["phi"],
        "noisy" => &["sigma", "r"],
        _ => return Err(Failure::new(4, format!("unknown model `{name}`"))),
    };
    if let Some(extra) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Failure::new(6, format!("model {name} takes no parameter `{extra}`")));
    }
    Ok(match name {
        "maverick" => NoiseModel::Maverick { p: get("p")? },
        "flips" => NoiseModel::Flips { p: get("p")? },
        "omissions" => NoiseModel::Omissions { p: get("p")? },
        "swaps" => NoiseModel::Swaps { phi: get("phi")? },
        _ => NoiseModel::Noisy {
            sigma: get("sigma")?,
            radius: get("r")?,
        },
    })
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn cmd_gen(a: &GenArgs) -> Outcome {
    let ModelParams { p, phi, sigma, radius } = a.params;
    let params: BTreeMap<String, f64> = [("p", p), ("phi", phi), ("sigma", sigma), ("r", radius)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect();
    let model = noise_model(&a.model, &params)?;
    if a.rankings && !matches!(model, NoiseModel::Noisy { .. }) {
        return Err(Failure::new(6, "--rankings needs the noisy model"));
    }
    let sample = generate(&NoiseModelConfig {
        model,
        m: a.m,
        n: a.n,
        seed: a.seed,
    })?;
    let c = sample.profile.candidates();
    write_file(&a.out, &write_approval(&sample.profile))?;
    write_file(&sidecar(&a.out, ".truth"), &format!("{}\n", c.axis_names(&sample.axis).join(",")))?;
    if a.rankings {
        let rankings = sample.rankings.as_ref().expect("the noisy model ranks");
        write_file(&sidecar(&a.out, ".rankings"), &write_ranking(rankings))?;
    }
    Ok(())
}

fn parse_models(spec: &str) -> std::result::Result<Vec<NoiseModel>, Failure> {
    let mut models = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, rest) = item.split_once(':').unwrap_or((item, ""));
        let mut params = BTreeMap::new();
        for kv in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Failure::new(2, format!("expected key=value in `{kv}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Failure::new(2, format!("`{}` is not a number", v.trim())))?;
            params.insert(k.trim().to_string(), v);
        }
        models.push(noise_model(name.trim(), &params)?);
    }
    if models.is_empty() {
        return Err(Failure::new(2, "no models given"));
    }
    Ok(models)
}

fn cmd_experiment(a: &ExperimentArgs, out: &mut dyn Write) -> Outcome {
    let models = parse_models(&a.models)?;
    let rules = a
        .rules
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rule)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for (model, rule) in models.iter().flat_map(|m| rules.iter().map(move |r| (m, r))) {
        if matches!(rule, AnyRule::Ranking(_)) && !matches!(model, NoiseModel::Noisy { .. }) {
            return Err(Failure::new(4, format!("rule {} needs the noisy model", rule.name())));
        }
    }
    let options = SolveOptions::default().with_threads(a.threads.max(1));
    let mut csv = String::from("model,params,rule,replicate,distance\n");
    for (k, &model) in models.iter().enumerate() {
        for rep in 0..a.replicates {
            let seed = a.seed.wrapping_add((k as u64) << 32).wrapping_add(rep as u64);
            let sample = generate(&NoiseModelConfig {
                model,
                m: a.m,
                n: a.n,
                seed,
            })?;
            for &rule in &rules {
                let result = match rule {
                    AnyRule::Approval(r) => solve(&sample.profile, r, &options)?,
                    AnyRule::Ranking(r) => {
                        solve_ranking(sample.rankings.as_ref().expect("noisy samples rank"), r, &options)?
                    }
                };
                let d = avg_distance_to_truth(&result, &sample.axis)?;
                csv.push_str(&format!("{},{},{},{rep},{d}\n", model.name(), model.params(), rule.name()));
            }
        }
    }
    match &a.out {
        Some(path) => write_file(path, &csv),
        None => out.write_all(csv.as_bytes()).map_err(|e| Failure::new(1, e.to_string())),
    }
}

fn witness_json(w: &Witness) -> Value {
    let p = w.instance.profile();
    let c = p.candidates();
    let names = |ids: &mut dyn Iterator<Item = usize>| ids.map(|i| c.name(i).to_string()).collect::<Vec<_>>();
    let mut instance = json!({ "profile": profile_json(p) });
    match &w.instance {
        AxiomInstance::Stability { ballot, .. } => instance["ballot"] = json!(names(&mut ballot.members())),
        AxiomInstance::BallotMonotonicity { entry, .. } => instance["entry"] = json!(entry),
        AxiomInstance::CloneProximity { clones, .. } | AxiomInstance::CloneResistance { clones, .. } => {
            instance["clones"] = json!(names(&mut [clones.0, clones.1].into_iter()))
        }
        AxiomInstance::Heredity { subset, .. } => instance["subset"] = json!(names(&mut subset.iter().copied())),
        _ => {}
    }
    json!({
        "detail": w.detail,
        "axes": w.axes.iter().map(|a| json!({ "role": a.role, "axis": a.names })).collect::<Vec<_>>(),
        "instance": instance,
    })
}

fn cmd_axioms(a: &AxiomArgs, out: &mut dyn Write) -> Outcome {
    let axioms: Vec<AxiomId> = if a.axiom == "all" {
        AxiomId::ALL.to_vec()
    } else {
        vec![a.axiom.parse().map_err(|_| Failure::new(4, format!("unknown axiom `{}`", a.axiom)))?]
    };
    let rules: Vec<CostRule> = if a.rule == "all" {
        CostRule::ALL.to_vec()
    } else {
        match parse_rule(&a.rule)? {
            AnyRule::Approval(r) => vec![r],
            AnyRule::Ranking(r) => return Err(Failure::new(4, format!("axioms are defined for approval rules, not {}", r.name()))),
        }
    };
    let mut reports = Vec::new();
    for &axiom in &axioms {
        for &rule in &rules {
            let (checked, witness) = match a.random {
                None => {
                    let fixtures = axioms::fixtures(axiom);
                    let mut witness = None;
                    for f in &fixtures {
                        if let Some(w) = axioms::check_instance(axiom, rule, f)?.witness {
                            witness = Some(w);
                            break;
                        }
                    }
                    (fixtures.len(), witness)
                }
                Some(n) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
                    (n, axioms::random_counterexample(axiom, rule, n, &mut rng)?)
                }
            };
            reports.push(json!({
                "axiom": axiom.name(),
                "rule": rule.name(),
                "mode": if a.random.is_some() { "random" } else { "fixtures" },
                "instances": checked,
                "holds": witness.is_none(),
                "witness": witness.as_ref().map(witness_json),
            }));
        }
    }
    emit(out, &json!({ "seed": a.seed, "reports": reports }))
}

fn cmd_check_linear(a: &CheckLinearArgs, out: &mut dyn Write) -> Outcome {
    let ProfileDocument::Approval(p) = read_profile(&a.input)? else {
        return Err(Failure::new(4, "check-linear needs approval ballots"));
    };
    let c = p.candidates();
    let options = SolveOptions {
        enumeration_bound: a.bound,
        ..SolveOptions::default()
    };
    let axes = consistent_axes_with(&p, &options)?;
    let classes: Vec<Vec<&str>> = coapproval_partition(&p)
        .classes()
        .iter()
        .map(|cls| cls.iter().map(|&i| c.name(i)).collect())
        .collect();
    let mut body = json!({
        "linear": !axes.is_empty(),
        "consistent_axis_count": axes.len(),
        "classes": classes,
    });
    if a.axes {
        body["consistent_axes"] = json!(sorted_axes(c, &axes).iter().map(|x| axis_json(c, x)).collect::<Vec<_>>());
    }
    emit(out, &body)
}
