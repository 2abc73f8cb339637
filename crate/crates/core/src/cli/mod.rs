//! Command-line front end. Every command writes one report to stdout; all
//! configuration and input errors exit with status 2.

mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algorithms::{
    bv_experiment, dj_experiment, grover_round_experiment, shor15_experiment_with, shor_factor15_with,
    simon_deterministic, simon_solve, simon_subroutine_experiment, AlgorithmError, DjValue, SimonKind,
};
use crate::engine::{bitstring, exact_distribution, parse_bitstring, sample, Distribution, EngineError, Experiment};
use crate::kernel::{Prep, RandomSource};
use crate::oracles::{
    bv_oracle, dj3_catalog, dj_decision_oracle, dj_promise_oracle, grover_oracle, majority_oracle, simon_oracle,
    MajorityVariant, MultiplierConstruction, OracleError, OracleSpec, SimonVariant,
};
use crate::protocols::{
    bb84_exact_qber, bb84_run, ghz_computational_distribution, ghz_conditional_entropy, singlet_pauli_correlations,
    superdense_experiment, teleport_experiment, GhzConstruction,
};
use crate::refsim::ideal_distribution;
use crate::stats::{entropy, sso, Probabilities, RealDistribution};

pub use report::{parse_distribution, sig12, Metrics, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Parser, Debug)]
#[command(name = "qsl", version, about = "Quantum Simulation Logic: bit-pair simulation of quantum circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Execute an algorithm and report its outcome distribution.
    Run(RunArgs),
    /// Protocol demonstrations.
    Demo(DemoArgs),
    /// Oracle catalogs.
    Catalog {
        #[command(subcommand)]
        which: CatalogKind,
    },
    /// Squared statistical overlap of two distribution files.
    Sso {
        #[arg(long)]
        observed: String,
        #[arg(long)]
        ideal: String,
    },
    /// Shannon entropy (bits) of a distribution file.
    Entropy {
        #[arg(long)]
        file: String,
    },
    /// Order finding and factoring of 15.
    Shor15(ShorArgs),
}

#[derive(Subcommand, Debug)]
pub enum CatalogKind {
    /// All 72 constant and balanced three-bit functions with their circuits' costs.
    Dj3,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Bv,
    Dj,
    DjDecision,
    Dj3,
    Majority,
    Grover,
    Simon,
    Shor15,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sample,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimonVariantArg {
    Zero,
    Xor,
    Deterministic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionArg {
    Swap,
    Synthesized,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    /// Trial count for sample mode (default 100000).
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, env = "QSL_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub algorithm: Algorithm,
    /// Query width.
    #[arg(long)]
    pub n: Option<usize>,
    /// Hidden string (MSB first), for bv and simon.
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long)]
    pub b0: Option<u8>,
    #[arg(long)]
    pub b1: Option<u8>,
    /// Simon: 1 for two-to-one, 0 for one-to-one.
    #[arg(long)]
    pub b: Option<u8>,
    /// DJ decision offset.
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub xstar: Option<String>,
    /// Function string f(7)...f(0) for dj3.
    #[arg(long)]
    pub function: Option<String>,
    /// Majority layout A, B, C or D.
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long, value_enum, default_value = "zero")]
    pub simon_variant: SimonVariantArg,
    /// identity, reverse, random, or an explicit list such as 3,0,2,1.
    #[arg(long, default_value = "identity")]
    pub perm: String,
    #[arg(long, value_enum, default_value = "swap")]
    pub construction: ConstructionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ShorArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long, value_enum, default_value = "swap")]
    pub construction: ConstructionArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoKind {
    Bb84,
    Teleport,
    Superdense,
    Ghz,
    Singlet,
}

#[derive(Args, Debug)]
pub struct DemoArgs {
    #[arg(value_enum)]
    pub which: DemoKind,
    /// BB84 round count.
    #[arg(long, default_value_t = 100_000)]
    pub rounds: u64,
    /// BB84: add an intercept-resend eavesdropper.
    #[arg(long)]
    pub eve: bool,
    #[arg(long, env = "QSL_SEED", default_value_t = 0)]
    pub seed: u64,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `argv` (program name first) and execute.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => CommandOutput { code: 0, stdout, stderr: String::new() },
        Err(e) => CommandOutput { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn execute(cmd: &Command) -> Result<String, CliError> {
    match cmd {
        Command::Run(args) => run(args),
        Command::Demo(args) => demo(args),
        Command::Catalog { which: CatalogKind::Dj3 } => catalog_dj3(),
        Command::Sso { observed, ideal } => {
            let (p, q) = (read_distribution(observed)?, read_distribution(ideal)?);
            let v = sso(&p, &q).map_err(|e| CliError::Config(e.to_string()))?;
            Ok(report::to_pretty(&json!({ "metric": "sso", "value": sig12(v) })))
        }
        Command::Entropy { file } => {
            let p = read_distribution(file)?;
            Ok(report::to_pretty(&json!({ "metric": "entropy", "value": sig12(entropy(&p)) })))
        }
        Command::Shor15(args) => {
            let run_args = RunArgs {
                algorithm: Algorithm::Shor15,
                n: None,
                s: None,
                b0: None,
                b1: None,
                b: None,
                a: Some(args.a),
                xstar: None,
                function: None,
                variant: None,
                simon_variant: SimonVariantArg::Zero,
                perm: "identity".into(),
                construction: args.construction,
                common: args.common.clone(),
            };
            run(&run_args)
        }
    }
}

fn read_distribution(path: &str) -> Result<RealDistribution, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{path}: {e}")))?;
    parse_distribution(&text)
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| config(format!("--{flag} is required for this algorithm")))
}

fn flag_bit(v: Option<u8>, flag: &str, default: bool) -> Result<bool, CliError> {
    match v {
        None => Ok(default),
        Some(0) => Ok(false),
        Some(1) => Ok(true),
        Some(x) => Err(config(format!("--{flag} must be 0 or 1, got {x}"))),
    }
}

fn bits_arg(s: &str, flag: &str) -> Result<(u64, usize), CliError> {
    parse_bitstring(s).ok_or_else(|| config(format!("--{flag} must be a non-empty bit string, got {s:?}")))
}

fn width_from(n: Option<usize>, len: usize, flag: &str) -> Result<usize, CliError> {
    match n {
        Some(n) if n != len => Err(config(format!("--n {n} disagrees with the {len}-bit --{flag}"))),
        _ => Ok(len),
    }
}

/// Named permutation generators or an explicit comma-separated list.
pub fn parse_perm(spec: &str, n: usize, seed: u64) -> Result<Vec<usize>, CliError> {
    if n > 20 {
        return Err(config(format!("n = {n} is too wide for a permutation table")));
    }
    let size = 1usize << n;
    match spec {
        "identity" => Ok((0..size).collect()),
        "reverse" => Ok((0..size).rev().collect()),
        "random" => {
            let mut p: Vec<usize> = (0..size).collect();
            p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            Ok(p)
        }
        list => {
            let p: Vec<usize> = list
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| config(format!("--perm {list:?} is not a generator name or a number list")))?;
            if p.len() != size {
                return Err(config(format!("--perm has {} entries, expected {size}", p.len())));
            }
            Ok(p)
        }
    }
}

fn perm_value(spec: &str, perm: &[usize]) -> Value {
    match spec {
        "identity" | "reverse" | "random" => Value::from(spec),
        _ => Value::from(perm.to_vec()),
    }
}

/// Marginal of a real distribution under `f`.
fn map_real(d: &RealDistribution, bits: usize, f: impl Fn(u64) -> u64) -> RealDistribution {
    let mut out = BTreeMap::new();
    for (k, p) in d.probability_map() {
        *out.entry(f(k)).or_insert(0.0) += p;
    }
    RealDistribution::new(bits, out)
}

/// Run an experiment in the configured mode and report the distribution of
/// `project(outcome)`.
struct Evaluated {
    dist: Distribution,
    sso: Option<f64>,
}

fn evaluate(
    e: &Experiment,
    common: &Common,
    bits: usize,
    project: impl Fn(u64) -> u64 + Copy,
) -> Result<Evaluated, CliError> {
    let raw = match common.mode {
        Mode::Exact => {
            if common.trials.is_some() {
                return Err(config("--trials is only meaningful with --mode sample"));
            }
            exact_distribution(e)?
        }
        Mode::Sample => {
            let trials = common.trials.unwrap_or(100_000);
            if trials == 0 {
                return Err(config("--trials must be at least 1"));
            }
            sample(e, trials, common.seed)?
        }
    };
    let dist = raw.map(bits, project);
    let sso = ideal_distribution(e).ok().and_then(|ideal| sso(&dist, &map_real(&ideal, bits, project)).ok());
    Ok(Evaluated { dist, sso })
}

fn most_likely(d: &Distribution) -> u64 {
    d.counts().iter().max_by_key(|(k, c)| (**c, std::cmp::Reverse(**k))).map(|(k, _)| *k).unwrap_or(0)
}

fn dj_verdict(d_constant: f64, decision: bool) -> String {
    let value = if d_constant >= 0.5 { DjValue::Constant } else { DjValue::Balanced };
    let label = if decision { value.decision_label().to_string() } else { value.to_string() };
    if d_constant == 1.0 || d_constant == 0.0 {
        label
    } else {
        format!("{label} (P(constant) = {})", sig12(d_constant))
    }
}

fn run(args: &RunArgs) -> Result<String, CliError> {
    let common = &args.common;
    let mut params = Map::new();
    let (e, bits, project, oracle_queries, verdict): (Experiment, usize, fn(u64) -> u64, usize, VerdictRule);
    let oracle: Option<OracleSpec>;
    match args.algorithm {
        Algorithm::Bv => {
            let (s, len) = bits_arg(&need(&args.s, "s")?, "s")?;
            let n = width_from(args.n, len, "s")?;
            params.insert("n".into(), n.into());
            params.insert("s".into(), bitstring(s, n).into());
            let o = bv_oracle(n, s)?;
            e = bv_experiment(&o)?;
            (bits, project, oracle_queries, verdict) = (n, identity_map, 1, VerdictRule::Readout("s"));
            oracle = Some(o);
        }
        Algorithm::Dj | Algorithm::DjDecision | Algorithm::Dj3 | Algorithm::Majority => {
            let o = match args.algorithm {
                Algorithm::Dj => {
                    let n = need(&args.n, "n")?;
                    let (b0, b1) = (flag_bit(args.b0, "b0", false)?, flag_bit(args.b1, "b1", false)?);
                    let perm = parse_perm(&args.perm, n, common.seed)?;
                    params.insert("n".into(), n.into());
                    params.insert("b0".into(), (b0 as u8).into());
                    params.insert("b1".into(), (b1 as u8).into());
                    params.insert("perm".into(), perm_value(&args.perm, &perm));
                    dj_promise_oracle(n, b0, b1, &perm)?
                }
                Algorithm::DjDecision => {
                    let n = need(&args.n, "n")?;
                    let a = need(&args.a, "a")?;
                    let perm = parse_perm(&args.perm, n, common.seed)?;
                    params.insert("n".into(), n.into());
                    params.insert("a".into(), a.into());
                    params.insert("perm".into(), perm_value(&args.perm, &perm));
                    dj_decision_oracle(n, a, &perm)?
                }
                Algorithm::Dj3 => {
                    let f = need(&args.function, "function")?;
                    params.insert("function".into(), f.clone().into());
                    dj3_catalog()
                        .into_iter()
                        .find(|c| c.function_string() == f)
                        .map(|c| c.oracle)
                        .ok_or_else(|| config(format!("{f:?} is not a constant or balanced 3-bit function string")))?
                }
                _ => {
                    let v = match need(&args.variant, "variant")?.as_str() {
                        "A" | "a" => MajorityVariant::A,
                        "B" | "b" => MajorityVariant::B,
                        "C" | "c" => MajorityVariant::C,
                        "D" | "d" => MajorityVariant::D,
                        other => return Err(config(format!("--variant must be A, B, C or D, got {other:?}"))),
                    };
                    params.insert("variant".into(), format!("{v:?}").into());
                    majority_oracle(v)?
                }
            };
            e = dj_experiment(&o)?;
            let decision = args.algorithm == Algorithm::DjDecision;
            (bits, project, oracle_queries, verdict) = (1, low_bit, 1, VerdictRule::Dj { decision });
            oracle = Some(o);
        }
        Algorithm::Grover => {
            let (x, len) = bits_arg(&need(&args.xstar, "xstar")?, "xstar")?;
            let n = width_from(args.n, len, "xstar")?;
            params.insert("n".into(), n.into());
            params.insert("xstar".into(), bitstring(x, n).into());
            let o = grover_oracle(n, x)?;
            e = grover_round_experiment(&o)?;
            (bits, project, oracle_queries, verdict) = (n, identity_map, 1, VerdictRule::Grover(x));
            oracle = Some(o);
        }
        Algorithm::Simon => {
            let (s, len) = bits_arg(&need(&args.s, "s")?, "s")?;
            let n = width_from(args.n, len, "s")?;
            let b = flag_bit(args.b, "b", true)?;
            let perm = parse_perm(&args.perm, n, common.seed)?;
            let variant = match args.simon_variant {
                SimonVariantArg::Zero => SimonVariant::ZeroTarget,
                SimonVariantArg::Xor => SimonVariant::XorTarget,
                SimonVariantArg::Deterministic => SimonVariant::Deterministic,
            };
            params.insert("n".into(), n.into());
            params.insert("s".into(), bitstring(s, n).into());
            params.insert("b".into(), (b as u8).into());
            params.insert("variant".into(), serde_json::to_value(variant).expect("serializable"));
            params.insert("perm".into(), perm_value(&args.perm, &perm));
            let o = simon_oracle(n, s, b, &perm, variant)?;
            e = simon_subroutine_experiment(&o)?;
            (bits, project, oracle_queries, verdict) = (n, identity_map, 0, VerdictRule::Simon);
            oracle = Some(o);
        }
        Algorithm::Shor15 => {
            let a = need(&args.a, "a")?;
            let construction = match args.construction {
                ConstructionArg::Swap => MultiplierConstruction::SwapNetwork,
                ConstructionArg::Synthesized => MultiplierConstruction::Synthesized,
            };
            params.insert("a".into(), a.into());
            params.insert("construction".into(), format!("{construction:?}").into());
            e = shor15_experiment_with(a, construction)?;
            (bits, project, oracle_queries, verdict) = (3, identity_map, 0, VerdictRule::Shor(a, construction));
            oracle = None;
        }
    }
    let ev = evaluate(&e, common, bits, project)?;
    let (verdict, queries) = verdict.apply(&ev.dist, oracle.as_ref(), common.seed, oracle_queries)?;
    if common.format == Format::Csv {
        return Ok(report::csv(&ev.dist));
    }
    let exact = common.mode == Mode::Exact;
    let r = Report {
        algorithm: args.algorithm.to_possible_value().expect("named").get_name().to_string(),
        params,
        mode: if exact { "exact" } else { "sample" }.into(),
        seed: common.seed,
        queries,
        distribution: report::distribution_json(&ev.dist),
        distribution_rational: exact.then(|| report::rational_json(&ev.dist)),
        verdict: Some(verdict),
        metrics: Some(Metrics { sso: ev.sso.map(sig12), entropy: Some(sig12(entropy(&ev.dist))) }),
    };
    Ok(report::to_pretty(&r))
}

fn identity_map(o: u64) -> u64 {
    o
}

fn low_bit(o: u64) -> u64 {
    o & 1
}

enum VerdictRule {
    Readout(&'static str),
    Dj { decision: bool },
    Grover(u64),
    Simon,
    Shor(u64, MultiplierConstruction),
}

impl VerdictRule {
    /// Verdict text and the oracle-query count behind it.
    fn apply(
        &self,
        d: &Distribution,
        oracle: Option<&OracleSpec>,
        seed: u64,
        queries: usize,
    ) -> Result<(String, usize), CliError> {
        Ok(match self {
            VerdictRule::Readout(name) => {
                let v = d.point_mass().unwrap_or_else(|| most_likely(d));
                (format!("{name} = {}", bitstring(v, d.outcome_bits())), queries)
            }
            VerdictRule::Dj { decision } => (dj_verdict(d.prob(1), *decision), queries),
            VerdictRule::Grover(x) => (
                format!("x* = {} with probability {} per round", bitstring(*x, d.outcome_bits()), sig12(d.prob(*x))),
                queries,
            ),
            VerdictRule::Simon => {
                let o = oracle.expect("simon runs carry an oracle");
                let res = if matches!(o.family, crate::oracles::Family::Simon { variant: SimonVariant::Deterministic, .. })
                {
                    simon_deterministic(o)?
                } else {
                    simon_solve(o, &mut RandomSource::new(seed, 0), 64 * o.n())?
                };
                let text = match res.kind {
                    SimonKind::TwoToOne(s) => format!("two-to-one, s = {}", bitstring(s, o.n())),
                    SimonKind::OneToOne => "one-to-one".to_string(),
                };
                (text, res.queries)
            }
            VerdictRule::Shor(a, construction) => {
                let out = shor_factor15_with(*a, seed, *construction)?;
                let text = match (out.r, out.factors) {
                    (Some(r), Some((p, q))) => format!("r = {r}, 15 = {p} x {q}"),
                    _ => format!("no factors after {} samples", out.samples.len()),
                };
                (text, out.samples.len())
            }
        })
    }
}

fn demo(args: &DemoArgs) -> Result<String, CliError> {
    let results: Value = match args.which {
        DemoKind::Bb84 => {
            if args.rounds == 0 {
                return Err(config("--rounds must be at least 1"));
            }
            let t = bb84_run(args.rounds, args.eve, args.seed)?;
            let exact = bb84_exact_qber(args.eve)?;
            json!({
                "eve": args.eve,
                "rounds": t.rounds,
                "sifted": t.sifted,
                "errors": t.errors,
                "qber": sig12(t.qber()),
                "qber_exact": format!("{}/{}", exact.numer(), exact.denom()),
            })
        }
        DemoKind::Teleport => {
            let inputs = [
                ("Z0", Prep::z(false)),
                ("Z1", Prep::z(true)),
                ("X0", Prep::x(false)),
                ("X1", Prep::x(true)),
                ("Y0", Prep::y(false)),
                ("Y1", Prep::y(true)),
                ("mixed", Prep::mixed()),
            ];
            let mut rows = Map::new();
            for (name, prep) in inputs {
                let e = teleport_experiment(prep);
                let k = prep.random_bits();
                let mut faithful = true;
                let mut branches = 0u64;
                for a in 0u64..1 << (k + 4) {
                    let draws: Vec<bool> = (0..k + 4).map(|j| (a >> j) & 1 == 1).collect();
                    let (_, state) = crate::engine::run_with_draws(&e, &draws)?;
                    faithful &= state.register.systems[2] == prep.realize(&draws[..k]);
                    branches += 1;
                }
                rows.insert(name.into(), json!({ "branches": branches, "output_equals_input": faithful }));
            }
            Value::Object(rows)
        }
        DemoKind::Superdense => {
            let mut rows = Map::new();
            for m in 0..4u64 {
                let d = exact_distribution(&superdense_experiment(m >> 1 == 1, m & 1 == 1))?;
                rows.insert(bitstring(m, 2), Value::Object(report::distribution_json(&d)));
            }
            Value::Object(rows)
        }
        DemoKind::Ghz => {
            let mut rows = Map::new();
            for c in [GhzConstruction::Toffoli, GhzConstruction::Cnot] {
                let d = ghz_computational_distribution(c)?;
                rows.insert(
                    serde_json::to_value(c).expect("serializable").as_str().unwrap_or_default().to_string(),
                    json!({
                        "computational": Value::Object(report::distribution_json(&d)),
                        "conditional_entropy_bits": sig12(ghz_conditional_entropy(c)?),
                    }),
                );
            }
            Value::Object(rows)
        }
        DemoKind::Singlet => {
            let mut rows = Map::new();
            for (basis, c) in singlet_pauli_correlations()? {
                rows.insert(format!("{basis:?}"), Value::from(c.to_string()));
            }
            Value::Object(rows)
        }
    };
    let which = args.which.to_possible_value().expect("named").get_name().to_string();
    Ok(report::to_pretty(&json!({ "demo": which, "seed": args.seed, "results": results })))
}

fn catalog_dj3() -> Result<String, CliError> {
    let mut rows = Vec::new();
    for entry in dj3_catalog() {
        let d = crate::algorithms::dj_verdict_distribution(&entry.oracle)?;
        let class = if entry.is_constant() { "constant" } else { "balanced" };
        let verdict = match d.point_mass() {
            Some(1) => "constant",
            Some(_) => "balanced",
            None => "mixed",
        };
        rows.push(json!({
            "function": entry.function_string(),
            "toffolis": entry.toffolis,
            "cnots": entry.cnots,
            "class": class,
            "verdict": verdict,
            "correct": class == verdict,
            "queries": 1,
        }));
    }
    Ok(report::to_pretty(&json!({ "catalog": "dj3", "entries": rows })))
}
