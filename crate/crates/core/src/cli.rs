//! The `tapelab` command line: one subcommand per experiment, each
//! producing an ordered report in text or JSON.
//!
//! Exit codes: 0 success, 1 refuted/falsified, 2 inconclusive, 3 input
//! error.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::enumerate::{
    enumerator_from_acceptor, load_enumerator, load_machine, numbering_universe, translate_via_enumerators,
    triangular_schedule, Acceptor, SpecError, Translation, Universe,
};
use crate::lambda::{certify_flag, demo_halting, parse_term, LambdaCert, LambdaError};
use crate::machine::{EmptyOracle, Runner, RunResult};
use crate::oracle::{
    approx_from_certificates, empty_jump_chain, jump_oracles, parse_certificates, write_certificates, JumpApprox,
};
use crate::relations::{endorep_strength_check, function_by_name, load_suite, refute_binary_comparator, Refutation, RelationReport};
use crate::repr::{by_name, check_witness_on, rep_numbering, rep_words, Element, WitnessVerdict};
use crate::tape::{parse_tape, Alphabet};

#[derive(Parser, Debug)]
#[command(name = "tapelab", version, about = "Fuel-bounded computability experiments")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Step budget for every simulation.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub fuel: u64,
    /// Element / tape / sample bound, depending on the command.
    #[arg(long, global = true, default_value_t = 100)]
    pub bound: u64,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UniverseKind {
    /// Every tape, by tape number.
    Numbering,
    /// One-block words `w$` over {0,1}, shortest first.
    Words,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a machine file on a tape literal.
    Run { machine: PathBuf, tape: String },
    /// Refute a claimed comparator for two-sided binary pairs.
    RefuteEq {
        candidate: PathBuf,
        #[arg(long, default_value_t = 5)]
        n: u64,
    },
    /// Translate between representations by running two enumerators in
    /// lockstep.
    Translate {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Enumerator spec for the source representation.
        #[arg(long)]
        ex: PathBuf,
        /// Enumerator spec for the target representation.
        #[arg(long)]
        ey: PathBuf,
        input: String,
        /// Enumerator applications per side (defaults to --bound).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Certified approximation of the n-th jump of the empty set.
    Jump {
        #[arg(long)]
        level: usize,
        /// Also write the certificate table here.
        #[arg(long)]
        write: Option<PathBuf>,
        /// Replay a certificate table instead of computing one.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Strength report for two representations over a benchmark suite.
    Relations {
        suite: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Also run the endorepresentation comparison.
        #[arg(long)]
        endo: bool,
    },
    /// Dovetail an acceptor into an enumeration.
    Enumerate {
        acceptor: PathBuf,
        #[arg(long, default_value_t = 50)]
        rounds: u64,
        #[arg(long, value_enum, default_value_t = UniverseKind::Numbering)]
        universe: UniverseKind,
    },
    /// The λ halting-flag demo on two term files.
    LambdaDemo { l: PathBuf, i: PathBuf },
    /// Check a witness machine on randomly drawn elements.
    Check {
        machine: PathBuf,
        #[arg(long)]
        function: String,
        #[arg(long)]
        from: String,
        /// Target representation (defaults to --from).
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    Refuted = 1,
    Inconclusive = 2,
    InputError = 3,
}

/// Ordered key/value report; the text and JSON forms carry the same keys.
#[derive(Clone, Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn put(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), v.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut m = Map::new();
                for (k, v) in &self.fields {
                    m.insert(k.clone(), v.clone());
                }
                // serde_json keeps keys sorted, so the output is stable
                serde_json::to_string_pretty(&Value::Object(m)).unwrap() + "\n"
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    match v {
                        Value::Array(items) => {
                            out.push_str(&format!("{k}:\n"));
                            for it in items {
                                out.push_str(&format!("  {}\n", scalar(it)));
                            }
                        }
                        _ => out.push_str(&format!("{k}: {}\n", scalar(v))),
                    }
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Tape(#[from] crate::tape::TapeError),
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error("{0}")]
    Other(String),
}

fn unknown_rep(name: &str) -> InputError {
    InputError::Other(format!(
        "unknown representation {name:?}; known: {}",
        crate::repr::REGISTRY.join(", ")
    ))
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code with what belongs on stdout and stderr.
pub fn run_cli<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Outcome::InputError as i32 } else { 0 };
            return if e.use_stderr() {
                (code, String::new(), e.to_string())
            } else {
                (code, e.to_string(), String::new())
            };
        }
    };
    if cli.fuel == 0 || cli.bound == 0 {
        return (Outcome::InputError as i32, String::new(), "--fuel and --bound must be at least 1\n".into());
    }
    let mut report = Report::default();
    report
        .put("command", command_name(&cli.command))
        .put("fuel", cli.fuel)
        .put("bound", cli.bound)
        .put("seed", cli.seed);
    match execute(&cli, &mut report) {
        Ok(outcome) => {
            report.put("outcome", outcome_name(outcome));
            (outcome as i32, report.render(cli.format), String::new())
        }
        Err(e) => (Outcome::InputError as i32, String::new(), format!("error: {e}\n")),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Run { .. } => "run",
        Command::RefuteEq { .. } => "refute-eq",
        Command::Translate { .. } => "translate",
        Command::Jump { .. } => "jump",
        Command::Relations { .. } => "relations",
        Command::Enumerate { .. } => "enumerate",
        Command::LambdaDemo { .. } => "lambda-demo",
        Command::Check { .. } => "check",
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Success => "success",
        Outcome::Refuted => "refuted",
        Outcome::Inconclusive => "inconclusive",
        Outcome::InputError => "input-error",
    }
}

fn execute(cli: &Cli, r: &mut Report) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Run { machine, tape } => cmd_run(machine, tape, cli.fuel, r),
        Command::RefuteEq { candidate, n } => cmd_refute_eq(candidate, *n, cli.fuel, r),
        Command::Translate {
            from,
            to,
            ex,
            ey,
            input,
            budget,
        } => cmd_translate(from, to, ex, ey, input, budget.unwrap_or(cli.bound as usize), r),
        Command::Jump { level, write, check } => cmd_jump(*level, cli.fuel, cli.bound as usize, write, check, r),
        Command::Relations { suite, x, y, endo } => cmd_relations(suite, x, y, *endo, cli, r),
        Command::Enumerate {
            acceptor,
            rounds,
            universe,
        } => cmd_enumerate(acceptor, *rounds, *universe, cli.bound as usize, r),
        Command::LambdaDemo { l, i } => cmd_lambda_demo(l, i, cli.fuel, r),
        Command::Check {
            machine,
            function,
            from,
            to,
            samples,
        } => cmd_check(machine, function, from, to.as_deref().unwrap_or(from), *samples, cli, r),
    }
}

fn result_name(res: &RunResult) -> &'static str {
    match res {
        RunResult::Halted { .. } => "halted",
        RunResult::Exhausted { .. } => "exhausted",
        RunResult::OracleUnknown { .. } => "oracle-unknown",
    }
}

fn cmd_run(path: &Path, tape: &str, fuel: u64, r: &mut Report) -> Result<Outcome, InputError> {
    let m = load_machine(path)?;
    let t = parse_tape(tape, m.alphabet())?;
    let mut runner = Runner::new(&m, &t);
    let res = runner.run_to(fuel, &EmptyOracle);
    r.put("machine", path.display().to_string())
        .put("input", t.to_string())
        .put("result", result_name(&res))
        .put("steps", runner.steps())
        .put("excursion", runner.excursion())
        .put("tape", runner.tape().to_string());
    Ok(if res.is_halted() {
        Outcome::Success
    } else {
        Outcome::Inconclusive
    })
}

fn cmd_refute_eq(path: &Path, n: u64, fuel: u64, r: &mut Report) -> Result<Outcome, InputError> {
    let m = load_machine(path)?;
    if m.alphabet() != &Alphabet::binary() {
        return Err(InputError::Other("the candidate must work over the alphabet 01".into()));
    }
    r.put("candidate", path.display().to_string()).put("n", n);
    match refute_binary_comparator(&m, n, fuel) {
        Refutation::Transcript(t) => {
            let replay = t.replay(&m, fuel);
            r.put("s_n", t.s_n)
                .put("m", t.m.to_string())
                .put("run_nn", result_name(&t.run_nn))
                .put("run_nn_tape", t.run_nn.halted_tape().map(|t| t.to_string()))
                .put("run_mn", result_name(&t.run_mn))
                .put("run_mn_tape", t.run_mn.halted_tape().map(|t| t.to_string()))
                .put("excursion", t.excursion)
                .put("window", format!("[{}, {}]", t.window.0, t.window.1))
                .put("wrong_answer", t.wrong_answer())
                .put("replay", replay.as_ref().map_or_else(|e| e.clone(), |_| "ok".into()));
            Ok(Outcome::Success)
        }
        Refutation::NotApplicable { run_nn, .. } => {
            r.put("transcript", "not applicable: no ν answer on (n, n) within the fuel")
                .put("run_nn", result_name(&run_nn));
            Ok(Outcome::Inconclusive)
        }
    }
}

fn cmd_translate(
    from: &str,
    to: &str,
    ex: &Path,
    ey: &Path,
    input: &str,
    budget: usize,
    r: &mut Report,
) -> Result<Outcome, InputError> {
    let rx = by_name(from, &[]).ok_or_else(|| unknown_rep(from))?;
    let ry = by_name(to, &[]).ok_or_else(|| unknown_rep(to))?;
    let ex = load_enumerator(ex)?;
    let ey = load_enumerator(ey)?;
    let t = parse_tape(input, rx.alphabet())?;
    r.put("from", from).put("to", to).put("input", t.to_string()).put("budget", budget);
    match translate_via_enumerators(&rx, &ry, &ex, &ey, &t, budget) {
        Ok(Translation::Translated { output, index }) => {
            r.put("index", index).put("output", output.to_string());
            Ok(Outcome::Success)
        }
        Ok(Translation::Inconclusive { applications }) => {
            r.put("applications", applications).put("output", Value::Null);
            Ok(Outcome::Inconclusive)
        }
        Err(e) => {
            r.put("error", e.to_string());
            Ok(Outcome::Refuted)
        }
    }
}

fn approx_fields(a: &JumpApprox, r: &mut Report) {
    let list = |v: Vec<u64>| Value::from(v);
    r.put("members_count", a.members().len())
        .put("non_members_count", a.non_members().len())
        .put("unknown_count", a.unknown().len())
        .put("members", list(a.members()))
        .put("unknown", list(a.unknown()));
}

fn cmd_jump(
    level: usize,
    fuel: u64,
    bound: usize,
    write: &Option<PathBuf>,
    check: &Option<PathBuf>,
    r: &mut Report,
) -> Result<Outcome, InputError> {
    if level > 2 {
        return Err(InputError::Other("levels above 2 are not supported".into()));
    }
    r.put("level", level).put("representation", "numbering");
    let oracles = jump_oracles(level, fuel);
    let base = if level == 0 { None } else { Some(oracles[level - 1].clone()) };
    if let Some(path) = check {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let lines = parse_certificates(&text).map_err(|e| InputError::Other(format!("{}: {e}", path.display())))?;
        let rx = rep_numbering(&Alphabet::binary());
        let a = approx_from_certificates(&lines, &rx, level, fuel)
            .ok_or_else(|| InputError::Other("element outside the representation".into()))?;
        let ok = match &base {
            Some(b) => a.replay(b),
            None => a.replay(&crate::oracle::Oracle::empty()),
        };
        r.put("certificates", path.display().to_string()).put("lines", lines.len());
        approx_fields(&a, r);
        r.put("replay", if ok { "ok" } else { "failed" });
        return Ok(if ok { Outcome::Success } else { Outcome::Refuted });
    }
    let chain = empty_jump_chain(level, fuel, bound);
    let a = &chain[level];
    let ok = match &base {
        Some(b) => a.replay(b),
        None => true,
    };
    approx_fields(a, r);
    r.put("replay", if ok { "ok" } else { "failed" });
    if let Some(path) = write {
        std::fs::write(path, write_certificates(a)).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        r.put("written", path.display().to_string());
    }
    Ok(if ok { Outcome::Success } else { Outcome::Refuted })
}

fn relation_fields(prefix: &str, rep: &RelationReport, r: &mut Report) {
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|row| json!({"benchmark": row.name, "x": row.x.to_string(), "y": row.y.to_string()}))
        .collect();
    r.put(&format!("{prefix}x"), rep.x.clone())
        .put(&format!("{prefix}y"), rep.y.clone())
        .put(&format!("{prefix}benchmarks"), rows)
        .put(&format!("{prefix}direction_xy"), rep.direction_xy.to_string())
        .put(&format!("{prefix}direction_yx"), rep.direction_yx.to_string())
        .put(&format!("{prefix}verdict"), rep.verdict.to_string());
}

fn cmd_relations(suite: &Path, x: &str, y: &str, endo: bool, cli: &Cli, r: &mut Report) -> Result<Outcome, InputError> {
    let chain: Vec<_> = jump_oracles(2, cli.fuel).into_iter().skip(1).collect();
    let rx = by_name(x, &chain).ok_or_else(|| unknown_rep(x))?;
    let ry = by_name(y, &chain).ok_or_else(|| unknown_rep(y))?;
    let benchmarks = load_suite(suite, &chain)?;
    let samples = cli.bound as usize;
    r.put("suite", suite.display().to_string()).put("samples", samples);
    let e = endorep_strength_check(&rx, &ry, &benchmarks, samples, cli.fuel);
    relation_fields("", &e.direct, r);
    if endo {
        relation_fields("endo_", &e.endo, r);
        r.put("endo_matches", e.matches);
    }
    Ok(Outcome::Success)
}

fn cmd_enumerate(
    path: &Path,
    rounds: u64,
    universe: UniverseKind,
    max: usize,
    r: &mut Report,
) -> Result<Outcome, InputError> {
    let a = Acceptor::new(load_machine(path)?);
    let u: Universe = match universe {
        UniverseKind::Numbering => numbering_universe(&a),
        UniverseKind::Words => {
            if a.machine.alphabet() != &Alphabet::sigma4() {
                return Err(InputError::Other("the words universe needs a machine over _01$".into()));
            }
            let w = rep_words();
            Arc::new(move |k| w.encode(&Element::Nat(k)).expect("total"))
        }
    };
    let mut d = enumerator_from_acceptor(&a, triangular_schedule(), u);
    let out = d.run(rounds, max);
    r.put("acceptor", path.display().to_string())
        .put("rounds", d.round())
        .put(
            "universe",
            match universe {
                UniverseKind::Numbering => "numbering",
                UniverseKind::Words => "words",
            },
        )
        .put("emitted_count", out.len())
        .put(
            "emitted",
            out.iter()
                .map(|e| format!("round {} #{} {} ({} steps)", e.round, e.index, e.tape, e.steps))
                .collect::<Vec<_>>(),
        );
    Ok(Outcome::Success)
}

fn read_term(path: &Path) -> Result<crate::lambda::Term, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(parse_term(&body)?)
}

fn cmd_lambda_demo(l: &Path, i: &Path, fuel: u64, r: &mut Report) -> Result<Outcome, InputError> {
    let (lt, it) = (read_term(l)?, read_term(i)?);
    r.put("L", lt.to_string()).put("I", it.to_string());
    let flag = match certify_flag(&lt, &it, fuel) {
        Ok(f) => f,
        Err(e @ LambdaError::UnknownFlag(_)) => {
            r.put("flag", e.to_string());
            return Ok(Outcome::Inconclusive);
        }
        Err(e) => return Err(e.into()),
    };
    let cert = match &flag.certificate {
        LambdaCert::Normalizes { steps, .. } => format!("L I normalizes in {steps} steps"),
        LambdaCert::Diverges { first, again } => {
            format!("L I diverges: the term after {again} steps repeats the one after {first}")
        }
    };
    let demo = demo_halting(&lt, &it, &flag)?;
    r.put("h", flag.term.to_string())
        .put("certificate", cert)
        .put("transcript", demo.transcript().lines().map(String::from).collect::<Vec<_>>())
        .put("beta_steps", demo.beta_steps)
        .put("chain_contractions", demo.chain_contractions)
        .put("L_I_untouched", demo.untouched)
        .put("result", format!("h = {}", demo.result));
    Ok(Outcome::Success)
}

fn cmd_check(
    path: &Path,
    fname: &str,
    from: &str,
    to: &str,
    samples: usize,
    cli: &Cli,
    r: &mut Report,
) -> Result<Outcome, InputError> {
    let chain: Vec<_> = jump_oracles(2, cli.fuel).into_iter().skip(1).collect();
    let m = load_machine(path)?;
    let f = function_by_name(fname, &chain).ok_or_else(|| InputError::Other(format!("unknown function {fname:?}")))?;
    let ra = by_name(from, &chain).ok_or_else(|| unknown_rep(from))?;
    let rb = by_name(to, &chain).ok_or_else(|| unknown_rep(to))?;
    let universe = ra.domain.take(cli.bound as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut picks = sample(&mut rng, universe.len(), samples.min(universe.len())).into_vec();
    picks.sort_unstable();
    let chosen: Vec<Element> = picks.iter().map(|&k| universe[k].clone()).collect();
    r.put("machine", path.display().to_string())
        .put("function", fname)
        .put("from", from)
        .put("to", to)
        .put("sampled", chosen.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    let v = check_witness_on(&m, &f, &ra, &rb, chosen, cli.fuel, &EmptyOracle);
    r.put("verdict", v.to_string());
    Ok(match v {
        WitnessVerdict::Verified { .. } => Outcome::Success,
        WitnessVerdict::Refuted { .. } => Outcome::Refuted,
        WitnessVerdict::Inconclusive { .. } => Outcome::Inconclusive,
    })
}
