//! Computational enumerability in both forms — acceptors (halt exactly on
//! members) and enumerators (iterate a machine from a start tape) — and the
//! bounded constructive conversions between them, inversion of injective
//! machines by enumeration, and lockstep translation between
//! representations.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::machine::{parse_machine, run, Conventions, EmptyOracle, FileError, Machine, RunResult, Runner};
use crate::pairing::combinators::machine_eq;
use crate::pairing::pair_mach;
use crate::repr::Representation;
use crate::tape::{parse_tape, tape_of_index, Tape, TapeError};

/// `f` together with `τ₀`: the set enumerated is `{fⁱ(τ₀)}`.
#[derive(Clone, Debug)]
pub struct Enumerator {
    pub machine: Machine,
    pub start: Tape,
    pub fuel_per_step: u64,
}

impl Enumerator {
    pub fn new(machine: Machine, start: Tape, fuel_per_step: u64) -> Self {
        Enumerator {
            machine,
            start,
            fuel_per_step,
        }
    }

    /// Applies the machine once; `None` if it does not halt within the
    /// per-step fuel.
    pub fn step(&self, t: &Tape) -> Option<(Tape, u64)> {
        match run(&self.machine, t, self.fuel_per_step) {
            RunResult::Halted { tape, steps, .. } => Some((tape, steps)),
            _ => None,
        }
    }

    pub fn iter(&self) -> EnumIter<'_> {
        EnumIter {
            e: self,
            next: Some(self.start.clone()),
            stalled: false,
        }
    }

    /// The first `n` elements, fewer if a step stalls.
    pub fn prefix(&self, n: usize) -> Vec<Tape> {
        self.iter().take(n).collect()
    }

    /// Checks the first `n` elements are pairwise distinct; on failure
    /// returns the indices `(i, j)` of the first repeat.
    pub fn check_distinct(&self, n: usize) -> Result<usize, (usize, usize)> {
        let mut seen = HashMap::new();
        let mut count = 0;
        for (j, t) in self.iter().take(n).enumerate() {
            if let Some(&i) = seen.get(&t) {
                return Err((i, j));
            }
            seen.insert(t, j);
            count += 1;
        }
        Ok(count)
    }
}

pub struct EnumIter<'a> {
    e: &'a Enumerator,
    next: Option<Tape>,
    stalled: bool,
}

impl EnumIter<'_> {
    /// Did the last step fail to halt within the per-step fuel?
    pub fn stalled(&self) -> bool {
        self.stalled
    }
}

impl Iterator for EnumIter<'_> {
    type Item = Tape;

    fn next(&mut self) -> Option<Tape> {
        let cur = self.next.take()?;
        match self.e.step(&cur) {
            Some((t, _)) => self.next = Some(t),
            None => self.stalled = true,
        }
        Some(cur)
    }
}

/// A machine that halts with `accept_tape` exactly on members.
#[derive(Clone, Debug)]
pub struct Acceptor {
    pub machine: Machine,
    pub accept_tape: Tape,
}

impl Acceptor {
    /// Accepting means halting with `ν`.
    pub fn new(machine: Machine) -> Self {
        let accept_tape = Conventions::for_alphabet(machine.alphabet()).yes_tape;
        Acceptor { machine, accept_tape }
    }

    pub fn accepts(&self, t: &Tape, fuel: u64) -> Option<bool> {
        match run(&self.machine, t, fuel) {
            RunResult::Halted { tape, .. } => Some(tape == self.accept_tape),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acceptance {
    /// The input is `fⁱ(τ₀)`.
    Accepted(usize),
    /// The enumeration came back to an earlier tape, so the (finite) set
    /// has been seen in full without meeting the input.
    NotFound { period_start: usize, elements: usize },
    Inconclusive(Stop),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stop {
    IterationBound(usize),
    /// The enumerator did not halt within its per-step fuel at this index.
    Stalled(usize),
    /// The input cannot be fed to `machine_eq` (pure-TM mode only).
    NotPairable,
}

/// Accepts by scanning the enumeration and comparing tapes directly.
pub fn acceptor_from_enumerator(e: &Enumerator, input: &Tape, max_iterations: usize) -> Acceptance {
    scan(e, max_iterations, |t| t == input)
}

/// The same, but each comparison is made by running `machine_eq` on
/// `⟨input, fⁱ(τ₀)⟩`.
pub fn acceptor_from_enumerator_tm(e: &Enumerator, input: &Tape, max_iterations: usize) -> Acceptance {
    let eq = machine_eq();
    let conv = Conventions::sigma4();
    let mut unpairable = false;
    let r = scan(e, max_iterations, |t| {
        let Ok(p) = pair_mach(input, t) else {
            unpairable = true;
            return false;
        };
        run(&eq, &p, 1_000_000).halted_tape().and_then(|o| conv.classify(o)) == Some(true)
    });
    if unpairable {
        Acceptance::Inconclusive(Stop::NotPairable)
    } else {
        r
    }
}

fn scan(e: &Enumerator, max_iterations: usize, mut hit: impl FnMut(&Tape) -> bool) -> Acceptance {
    let mut seen: HashMap<Tape, usize> = HashMap::new();
    let mut cur = e.start.clone();
    for i in 0..max_iterations {
        if let Some(&j) = seen.get(&cur) {
            return Acceptance::NotFound {
                period_start: j,
                elements: i,
            };
        }
        if hit(&cur) {
            return Acceptance::Accepted(i);
        }
        let Some((next, _)) = e.step(&cur) else {
            return Acceptance::Inconclusive(Stop::Stalled(i));
        };
        seen.insert(cur, i);
        cur = next;
    }
    Acceptance::Inconclusive(Stop::IterationBound(max_iterations))
}

/// Round `r ↦ (tape_bound, fuel)`.
pub type Schedule = Arc<dyn Fn(u64) -> (u64, u64) + Send + Sync>;
/// Candidate number `k ↦` tape.
pub type Universe = Arc<dyn Fn(u64) -> Tape + Send + Sync>;

/// Round `r` scans tapes numbered `< r` for `r` steps.
pub fn triangular_schedule() -> Schedule {
    Arc::new(|r| (r, r))
}

/// The tape numbering over the acceptor's alphabet.
pub fn numbering_universe(a: &Acceptor) -> Universe {
    let al = a.machine.alphabet().clone();
    Arc::new(move |k| tape_of_index(k, &al))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Emission {
    pub round: u64,
    pub index: u64,
    pub tape: Tape,
    pub steps: u64,
}

enum Slot<'a> {
    Live(Runner<'a>),
    Done,
}

/// The dovetailed enumeration of an acceptor's set: one persistent run per
/// candidate tape, each advanced to the round's fuel.
pub struct Dovetail<'a> {
    acceptor: &'a Acceptor,
    schedule: Schedule,
    universe: Universe,
    round: u64,
    slots: Vec<Slot<'a>>,
    emitted: HashSet<Tape>,
}

impl<'a> Dovetail<'a> {
    pub fn round(&self) -> u64 {
        self.round
    }

    /// Runs the next round and returns what it accepted, in candidate
    /// order.
    pub fn next_round(&mut self) -> Vec<Emission> {
        self.round += 1;
        let (bound, fuel) = (self.schedule)(self.round);
        while (self.slots.len() as u64) < bound {
            let t = (self.universe)(self.slots.len() as u64);
            self.slots.push(Slot::Live(Runner::new(&self.acceptor.machine, &t)));
        }
        let mut out = Vec::new();
        for (k, slot) in self.slots.iter_mut().enumerate().take(bound as usize) {
            let Slot::Live(r) = slot else { continue };
            if let RunResult::Halted { tape, steps, .. } = r.run_to(fuel, &EmptyOracle) {
                *slot = Slot::Done;
                if tape == self.acceptor.accept_tape {
                    let t = (self.universe)(k as u64);
                    if self.emitted.insert(t.clone()) {
                        out.push(Emission {
                            round: self.round,
                            index: k as u64,
                            tape: t,
                            steps,
                        });
                    }
                }
            }
        }
        out
    }

    /// Runs rounds until `max_rounds` have passed or `max_emissions` have
    /// been produced in total.
    pub fn run(&mut self, max_rounds: u64, max_emissions: usize) -> Vec<Emission> {
        let mut out = Vec::new();
        while self.round < max_rounds && out.len() < max_emissions {
            out.extend(self.next_round());
        }
        out.truncate(max_emissions);
        out
    }
}

pub fn enumerator_from_acceptor(a: &Acceptor, schedule: Schedule, universe: Universe) -> Dovetail<'_> {
    Dovetail {
        acceptor: a,
        schedule,
        universe,
        round: 0,
        slots: Vec::new(),
        emitted: HashSet::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion {
    FoundPreimage { preimage: Tape, index: usize, steps: u64 },
    NonInjectiveEvidence { first: Tape, second: Tape },
    Inconclusive { spent: u64 },
}

/// Searches `dom`'s enumeration for an `x` with `f(x) = target`.
///
/// Round `r` draws the `r`-th domain element and advances every live run of
/// `f` by one step; `budget` caps the total number of simulated steps
/// (enumerator and `f` alike). After a hit at round `R` after `s` steps of
/// `f`, the search continues for `R + s` more rounds looking for a second
/// preimage.
pub fn invert_via_enumeration(f: &Machine, dom: &Enumerator, target: &Tape, budget: u64) -> Inversion {
    let mut spent = 0u64;
    let mut runs: Vec<(usize, Tape, Runner<'_>)> = Vec::new();
    let mut next_dom = Some(dom.start.clone());
    let mut emitted = 0usize;
    let mut found: Option<(Tape, usize, u64)> = None;
    let mut deadline = u64::MAX;
    let mut round = 0u64;
    while round < deadline {
        if let Some(x) = next_dom.take() {
            match dom.step(&x) {
                Some((y, s)) => {
                    spent += s.max(1);
                    next_dom = Some(y);
                }
                None => spent += dom.fuel_per_step,
            }
            if f.alphabet() == x.alphabet() {
                runs.push((emitted, x.clone(), Runner::new(f, &x)));
            }
            emitted += 1;
        }
        let mut i = 0;
        while i < runs.len() {
            if spent >= budget {
                return match found {
                    Some((preimage, index, steps)) => Inversion::FoundPreimage { preimage, index, steps },
                    None => Inversion::Inconclusive { spent },
                };
            }
            let (k, x, r) = &mut runs[i];
            r.step(&EmptyOracle);
            spent += 1;
            if r.is_halted() {
                if r.tape() == *target {
                    let x = x.clone();
                    match &found {
                        None => {
                            deadline = round + round + r.steps();
                            found = Some((x, *k, r.steps()));
                        }
                        Some((first, _, _)) if *first != x => {
                            return Inversion::NonInjectiveEvidence {
                                first: first.clone(),
                                second: x,
                            };
                        }
                        _ => {}
                    }
                }
                runs.remove(i);
                continue;
            }
            i += 1;
        }
        if runs.is_empty() && next_dom.is_none() {
            break;
        }
        round += 1;
    }
    match found {
        Some((preimage, index, steps)) => Inversion::FoundPreimage { preimage, index, steps },
        None => Inversion::Inconclusive { spent },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translation {
    Translated { output: Tape, index: usize },
    Inconclusive { applications: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TranslateError {
    #[error("enumerators disagree at index {index}: {x} and {y} decode to different elements")]
    Misaligned { index: usize, x: Tape, y: Tape },
}

/// `ρy ∘ ρx⁻¹` by running both enumerators in lockstep: when the x-side
/// reaches `input` at index `i`, the y-side tape at `i` is the answer.
/// `budget` caps the enumerator applications per side. Alignment is checked
/// along the way by decoding both sides.
pub fn translate_via_enumerators(
    rx: &Representation,
    ry: &Representation,
    ex: &Enumerator,
    ey: &Enumerator,
    input: &Tape,
    budget: usize,
) -> Result<Translation, TranslateError> {
    let (mut x, mut y) = (ex.start.clone(), ey.start.clone());
    for i in 0..=budget {
        if rx.decode(&x) != ry.decode(&y) {
            return Err(TranslateError::Misaligned { index: i, x, y });
        }
        if x == *input {
            return Ok(Translation::Translated { output: y, index: i });
        }
        if i == budget {
            break;
        }
        match (ex.step(&x), ey.step(&y)) {
            (Some((a, _)), Some((b, _))) => {
                x = a;
                y = b;
            }
            _ => return Ok(Translation::Inconclusive { applications: i }),
        }
    }
    Ok(Translation::Inconclusive { applications: budget })
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Toml { path: String, message: String },
    #[error("{path}: {source}")]
    Machine { path: String, source: FileError },
    #[error("start tape: {0}")]
    Tape(#[from] TapeError),
}

#[derive(Deserialize)]
struct EnumeratorSpec {
    machine: String,
    start: String,
    fuel_per_step: u64,
}

fn read(path: &Path) -> Result<String, SpecError> {
    std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_machine(path: &Path) -> Result<Machine, SpecError> {
    parse_machine(&read(path)?).map_err(|source| SpecError::Machine {
        path: path.display().to_string(),
        source,
    })
}

/// Reads an enumerator spec: a TOML table with `machine` (path relative to
/// the spec file), `start` (tape literal) and `fuel_per_step`.
pub fn load_enumerator(path: &Path) -> Result<Enumerator, SpecError> {
    let spec: EnumeratorSpec = toml::from_str(&read(path)?).map_err(|e| SpecError::Toml {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let machine = load_machine(&dir.join(&spec.machine))?;
    let start = parse_tape(&spec.start, machine.alphabet())?;
    Ok(Enumerator::new(machine, start, spec.fuel_per_step))
}
