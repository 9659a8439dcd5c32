//! Transformability and computational strength as evidence: witness
//! checks, benchmark-based strength reports, the endorepresentation
//! reduction, and the refuter for claimed comparators on the two-sided
//! binary pair representation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Deserialize;

use crate::enumerate::{load_machine, SpecError};
use crate::machine::{Conventions, EmptyOracle, Machine, RunResult, Runner};
use crate::oracle::Oracle;
use crate::repr::{
    certified_flag, check_witness, function, nat_function, AbstractDomain, AbstractFn, DomainKind, Element,
    Representation, WitnessVerdict,
};
use crate::tape::Tape;

pub use crate::machine::head_excursion;

/// `ρy = f ∘ ρx` on the first `samples` elements.
pub fn verify_transformable(
    rx: &Representation,
    ry: &Representation,
    witness: &Machine,
    samples: usize,
    fuel: u64,
) -> WitnessVerdict {
    check_witness(witness, &function(|x| Some(x.clone())), rx, ry, samples, fuel)
}

#[derive(Clone)]
pub enum Codomain {
    /// The function lands in the same set and is read in the same
    /// representation as its argument.
    Same,
    Fixed(Representation),
}

/// One abstract function with the machines claimed to compute it, keyed by
/// representation name.
#[derive(Clone)]
pub struct Benchmark {
    pub name: String,
    pub function: AbstractFn,
    pub codomain: Codomain,
    pub witnesses: BTreeMap<String, Machine>,
}

impl Benchmark {
    pub fn new(name: &str, function: AbstractFn, codomain: Codomain) -> Self {
        Benchmark {
            name: name.to_string(),
            function,
            codomain,
            witnesses: BTreeMap::new(),
        }
    }

    pub fn with_witness(mut self, rep: &str, m: Machine) -> Self {
        self.witnesses.insert(rep.to_string(), m);
        self
    }

    /// Adds a witness only if it checks out on `rep`.
    pub fn register(&mut self, rep: &Representation, m: Machine, samples: usize, fuel: u64) -> WitnessVerdict {
        let v = self.check(rep, &m, samples, fuel);
        if v.is_verified() {
            self.witnesses.insert(rep.name().to_string(), m);
        }
        v
    }

    pub fn check(&self, rep: &Representation, m: &Machine, samples: usize, fuel: u64) -> WitnessVerdict {
        let out = match &self.codomain {
            Codomain::Same => rep,
            Codomain::Fixed(r) => r,
        };
        check_witness(m, &self.function, rep, out, samples, fuel)
    }

    /// The verdict for this benchmark's witness on `rep`, if any.
    pub fn status(&self, rep: &Representation, samples: usize, fuel: u64) -> WitnessStatus {
        match self.witnesses.get(rep.name()) {
            None => WitnessStatus::Missing,
            Some(m) => match self.check(rep, m, samples, fuel) {
                WitnessVerdict::Verified { samples, .. } => WitnessStatus::Verified { samples },
                other => WitnessStatus::Failed(other.to_string()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Verified { samples: usize },
    /// A witness was supplied but did not check out (refuted or
    /// inconclusive); it counts as no witness.
    Failed(String),
    Missing,
}

impl WitnessStatus {
    pub fn verified(&self) -> bool {
        matches!(self, WitnessStatus::Verified { .. })
    }
}

impl fmt::Display for WitnessStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessStatus::Verified { samples } => write!(f, "verified ({samples} samples)"),
            WitnessStatus::Failed(why) => write!(f, "failed: {why}"),
            WitnessStatus::Missing => f.write_str("no witness"),
        }
    }
}

/// Evidence that one side computes everything the other does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    VerifiedOnSamples,
    /// This benchmark is computed on the other side but not on this one.
    Refuted(String),
    NoWitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    EquivalentEvidence,
    StrongerEvidence(Side),
    IncomparableEvidence,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EquivalentEvidence => f.write_str("EquivalentEvidence"),
            Verdict::StrongerEvidence(Side::X) => f.write_str("StrongerEvidence(x)"),
            Verdict::StrongerEvidence(Side::Y) => f.write_str("StrongerEvidence(y)"),
            Verdict::IncomparableEvidence => f.write_str("IncomparableEvidence"),
            Verdict::Unknown => f.write_str("Unknown"),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::VerifiedOnSamples => f.write_str("verified on samples"),
            Direction::Refuted(b) => write!(f, "refuted by {b}"),
            Direction::NoWitness => f.write_str("no witness"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchmarkRow {
    pub name: String,
    pub x: WitnessStatus,
    pub y: WitnessStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub x: String,
    pub y: String,
    pub rows: Vec<BenchmarkRow>,
    /// Does `x` compute everything `y` does?
    pub direction_xy: Direction,
    pub direction_yx: Direction,
    pub verdict: Verdict,
}

fn direction(rows: &[BenchmarkRow], this: impl Fn(&BenchmarkRow) -> bool, other: impl Fn(&BenchmarkRow) -> bool) -> Direction {
    let mut any = false;
    for r in rows {
        if other(r) {
            any = true;
            if !this(r) {
                return Direction::Refuted(r.name.clone());
            }
        }
    }
    if any {
        Direction::VerifiedOnSamples
    } else {
        Direction::NoWitness
    }
}

pub fn verdict_of(xy: &Direction, yx: &Direction) -> Verdict {
    use Direction::*;
    match (xy, yx) {
        (VerifiedOnSamples, VerifiedOnSamples) => Verdict::EquivalentEvidence,
        (VerifiedOnSamples, Refuted(_)) => Verdict::StrongerEvidence(Side::X),
        (Refuted(_), VerifiedOnSamples) => Verdict::StrongerEvidence(Side::Y),
        (Refuted(_), Refuted(_)) => Verdict::IncomparableEvidence,
        _ => Verdict::Unknown,
    }
}

/// Which benchmarks each side computes, and what that says about `≤s`.
pub fn strength_report(
    rx: &Representation,
    ry: &Representation,
    benchmarks: &[Benchmark],
    samples: usize,
    fuel: u64,
) -> RelationReport {
    let rows: Vec<BenchmarkRow> = benchmarks
        .iter()
        .map(|b| BenchmarkRow {
            name: b.name.clone(),
            x: b.status(rx, samples, fuel),
            y: b.status(ry, samples, fuel),
        })
        .collect();
    let direction_xy = direction(&rows, |r| r.x.verified(), |r| r.y.verified());
    let direction_yx = direction(&rows, |r| r.y.verified(), |r| r.x.verified());
    let verdict = verdict_of(&direction_xy, &direction_yx);
    RelationReport {
        x: rx.name().to_string(),
        y: ry.name().to_string(),
        rows,
        direction_xy,
        direction_yx,
        verdict,
    }
}

/// `ρx ∘ ρy⁻¹` as a representation of `ρy`'s image.
pub fn endorepresentation(rx: &Representation, ry: &Representation) -> Representation {
    let (rx1, ry1, rx2, ry2) = (rx.clone(), ry.clone(), rx.clone(), ry.clone());
    Representation::new(
        &format!("{}∘{}⁻¹", rx.name(), ry.name()),
        AbstractDomain {
            kind: DomainKind::Image(Box::new(ry.clone())),
        },
        rx.alphabet(),
        move |e| {
            let a = image_element(&ry1, e)?;
            rx1.encode(&a)
        },
        move |t| Some(Element::Tape(ry2.encode(&rx2.decode(t)?).ok()?)),
    )
}

/// The image of `ry` represented by itself.
pub fn image_identity(ry: &Representation) -> Representation {
    let (r1, r2) = (ry.clone(), ry.clone());
    Representation::new(
        &format!("image({})", ry.name()),
        AbstractDomain {
            kind: DomainKind::Image(Box::new(ry.clone())),
        },
        ry.alphabet(),
        move |e| {
            image_element(&r1, e)?;
            match e {
                Element::Tape(t) => Ok(t.clone()),
                _ => unreachable!(),
            }
        },
        move |t| r2.decode(t).map(|_| Element::Tape(t.clone())),
    )
}

fn image_element(ry: &Representation, e: &Element) -> Result<Element, crate::repr::ReprError> {
    let not_in = || crate::repr::ReprError::NotInDomain {
        element: e.to_string(),
        repr: format!("image({})", ry.name()),
    };
    match e {
        Element::Tape(t) => ry.decode(t).ok_or_else(not_in),
        _ => Err(not_in()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndorepReport {
    pub direct: RelationReport,
    pub endo: RelationReport,
    pub matches: bool,
}

/// Compares `ρx` with `ρy` directly, and the endorepresentation `ρx∘ρy⁻¹`
/// with the identity on `ρy`'s image, over the induced benchmarks: the
/// x-witness of each benchmark serves the endorepresentation side and the
/// y-witness the identity side.
pub fn endorep_strength_check(
    rx: &Representation,
    ry: &Representation,
    benchmarks: &[Benchmark],
    samples: usize,
    fuel: u64,
) -> EndorepReport {
    let direct = strength_report(rx, ry, benchmarks, samples, fuel);
    let endo = endorepresentation(rx, ry);
    let ident = image_identity(ry);
    let induced: Vec<Benchmark> = benchmarks
        .iter()
        .map(|b| {
            let (f, ry1) = (b.function.clone(), ry.clone());
            let same = matches!(b.codomain, Codomain::Same);
            let g = function(move |e| {
                let y = f(&image_element(&ry1, e).ok()?)?;
                if same {
                    Some(Element::Tape(ry1.encode(&y).ok()?))
                } else {
                    Some(y)
                }
            });
            let mut ib = Benchmark::new(&b.name, g, b.codomain.clone());
            if let Some(m) = b.witnesses.get(rx.name()) {
                ib.witnesses.insert(endo.name().to_string(), m.clone());
            }
            if let Some(m) = b.witnesses.get(ry.name()) {
                ib.witnesses.insert(ident.name().to_string(), m.clone());
            }
            ib
        })
        .collect();
    let endo_report = strength_report(&endo, &ident, &induced, samples, fuel);
    let matches = endo_report.verdict == direct.verdict;
    EndorepReport {
        direct,
        endo: endo_report,
        matches,
    }
}

/// The abstract functions a benchmark file may name. `flag` reads level-1
/// certificates from `chain`.
pub fn function_by_name(name: &str, chain: &[Arc<Oracle>]) -> Option<AbstractFn> {
    Some(match name {
        "identity" => function(|x| Some(x.clone())),
        "successor" => nat_function(|n| n.checked_add(1)),
        "add-two" => nat_function(|n| n.checked_add(2)),
        "predecessor" => nat_function(|n| n.checked_sub(1)),
        "zero" => nat_function(|_| Some(0)),
        "double" => nat_function(|n| n.checked_mul(2)),
        "flag" => {
            let o = chain.first()?.clone();
            nat_function(move |n| certified_flag(&o, n).ok().map(u64::from))
        }
        _ => return None,
    })
}

#[derive(Deserialize)]
struct SuiteFile {
    benchmark: Vec<BenchmarkSpec>,
}

#[derive(Deserialize)]
struct BenchmarkSpec {
    name: String,
    function: String,
    #[serde(default = "same")]
    codomain: String,
    #[serde(default)]
    witnesses: BTreeMap<String, String>,
}

fn same() -> String {
    "same".into()
}

/// Reads a benchmark suite (TOML, `[[benchmark]]` tables with `name`,
/// `function`, `codomain` and a `witnesses` table of machine paths
/// relative to the suite file).
pub fn load_suite(path: &Path, chain: &[Arc<Oracle>]) -> Result<Vec<Benchmark>, SpecError> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io { path: p.clone(), source })?;
    let suite: SuiteFile = toml::from_str(&text).map_err(|e| SpecError::Toml {
        path: p.clone(),
        message: e.to_string(),
    })?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let invalid = |message: String| SpecError::Toml { path: p.clone(), message };
    suite
        .benchmark
        .into_iter()
        .map(|s| {
            let f = function_by_name(&s.function, chain)
                .ok_or_else(|| invalid(format!("unknown function {:?}", s.function)))?;
            let codomain = if s.codomain == "same" {
                Codomain::Same
            } else {
                Codomain::Fixed(
                    crate::repr::by_name(&s.codomain, chain)
                        .ok_or_else(|| invalid(format!("unknown representation {:?}", s.codomain)))?,
                )
            };
            let mut b = Benchmark::new(&s.name, f, codomain);
            for (rep, file) in s.witnesses {
                b.witnesses.insert(rep, load_machine(&dir.join(file))?);
            }
            Ok(b)
        })
        .collect()
}

/// The counterexample a refutation exhibits: the candidate says "equal" on
/// `(n, n)` after `s_n` steps, and on `(m, n)` with `m = n + 2^{s_n}` it
/// cannot have seen the difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationTranscript {
    pub n: u64,
    pub s_n: u64,
    pub m: BigUint,
    pub run_nn: RunResult,
    pub run_mn: RunResult,
    /// Head excursion of the `(n, n)` run.
    pub excursion: u64,
    /// Cells visited by the `(n, n)` run.
    pub window: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    Transcript(RefutationTranscript),
    /// The candidate did not say "equal" on `(n, n)` within the fuel.
    NotApplicable { n: u64, run_nn: RunResult },
}

/// Does the run end with the answer `ν` as far as the visited cells go?
/// A machine that halts after `s` steps cannot have cleared more of its
/// input than it visited, so only the window is compared.
fn says_yes(run: &RunResult, window: (i64, i64)) -> bool {
    let Some(t) = run.halted_tape() else { return false };
    let yes = Conventions::for_alphabet(t.alphabet()).yes_tape;
    (window.0..=window.1).all(|p| t.get(p) == yes.get(p)) && t.head() == yes.head()
}

fn run_tracked(m: &Machine, t: &Tape, fuel: u64) -> (RunResult, u64, (i64, i64)) {
    let mut r = Runner::new(m, t);
    let res = r.run_to(fuel, &EmptyOracle);
    (res, r.excursion(), r.visited())
}

pub fn refute_binary_comparator(candidate: &Machine, start_n: u64, fuel: u64) -> Refutation {
    let n = BigUint::from(start_n);
    let t_nn = crate::repr::binary_pair_tape(&n, &n);
    let (run_nn, excursion, window) = run_tracked(candidate, &t_nn, fuel);
    let s_n = match &run_nn {
        RunResult::Halted { steps, .. } if says_yes(&run_nn, window) => *steps,
        _ => {
            return Refutation::NotApplicable {
                n: start_n,
                run_nn,
            }
        }
    };
    let m = &n + (BigUint::from(1u32) << s_n);
    let t_mn = crate::repr::binary_pair_tape(&m, &n);
    let (run_mn, _, _) = run_tracked(candidate, &t_mn, fuel);
    Refutation::Transcript(RefutationTranscript {
        n: start_n,
        s_n,
        m,
        run_nn,
        run_mn,
        excursion,
        window,
    })
}

impl RefutationTranscript {
    /// Everything the transcript claims, re-derived from scratch.
    pub fn replay(&self, candidate: &Machine, fuel: u64) -> Result<(), String> {
        let n = BigUint::from(self.n);
        let modulus = BigUint::from(1u32) << self.s_n;
        if self.m == n {
            return Err("m equals n".into());
        }
        if &self.m % &modulus != &n % &modulus {
            return Err("m and n differ modulo 2^s_n".into());
        }
        let t_nn = crate::repr::binary_pair_tape(&n, &n);
        let t_mn = crate::repr::binary_pair_tape(&self.m, &n);
        if let Some(r) = t_nn.first_disagreement_radius(&t_mn) {
            if r < self.s_n {
                return Err(format!("inputs differ at radius {r} < s_n"));
            }
        }
        let (nn, exc, window) = run_tracked(candidate, &t_nn, fuel);
        if nn != self.run_nn || exc != self.excursion || window != self.window {
            return Err("run on (n, n) does not reproduce".into());
        }
        if exc > self.s_n {
            return Err("head excursion exceeds s_n".into());
        }
        let (mn, _, _) = run_tracked(candidate, &t_mn, fuel);
        if mn != self.run_mn {
            return Err("run on (m, n) does not reproduce".into());
        }
        if mn.steps() != Some(self.s_n) || !says_yes(&mn, self.window) {
            return Err("the candidate does not answer ν on (m, n)".into());
        }
        Ok(())
    }

    /// The candidate claims `m = n`: true iff the run on `(m, n)` answered
    /// "equal".
    pub fn wrong_answer(&self) -> bool {
        says_yes(&self.run_mn, self.window)
    }
}
