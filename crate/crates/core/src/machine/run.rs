//! Fuel-bounded operational semantics.
//!
//! One step applies one quintuple. A state/symbol pair without a quintuple
//! costs one step and halts in the implicit reject state. An oracle query
//! costs one step: the whole tape (re-centred on the head) is submitted and
//! the machine moves to the yes or no port.

use serde::{Deserialize, Serialize};

use super::{Machine, StateId};
use crate::tape::{Symbol, Tape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

/// Anything that can answer membership queries about tapes.
pub trait QueryOracle {
    fn ask(&self, query: &Tape) -> Answer;
}

/// The oracle for the empty set; plain [`run`] uses it.
#[derive(Clone, Copy, Debug, Default)]
pub struct EmptyOracle;

impl QueryOracle for EmptyOracle {
    fn ask(&self, _: &Tape) -> Answer {
        Answer::No
    }
}

impl<F: Fn(&Tape) -> Answer> QueryOracle for F {
    fn ask(&self, query: &Tape) -> Answer {
        self(query)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunResult {
    /// `state` is `None` when the run stopped in the implicit reject state.
    Halted {
        tape: Tape,
        steps: u64,
        state: Option<StateId>,
    },
    Exhausted {
        fuel: u64,
    },
    OracleUnknown {
        query: Tape,
        step: u64,
    },
}

impl RunResult {
    pub fn halted_tape(&self) -> Option<&Tape> {
        match self {
            RunResult::Halted { tape, .. } => Some(tape),
            _ => None,
        }
    }

    pub fn steps(&self) -> Option<u64> {
        match self {
            RunResult::Halted { steps, .. } => Some(*steps),
            _ => None,
        }
    }

    pub fn is_halted(&self) -> bool {
        matches!(self, RunResult::Halted { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Running,
    Halted,
    OracleUnknown(Tape),
}

/// A machine configuration that can be advanced one step at a time.
#[derive(Clone)]
pub struct Runner<'m> {
    machine: &'m Machine,
    cells: Vec<Symbol>,
    offset: i64,
    head: i64,
    start_head: i64,
    state: Option<StateId>,
    steps: u64,
    excursion: u64,
    leftmost: i64,
    rightmost: i64,
}

impl<'m> Runner<'m> {
    /// Panics if the tape is over a different alphabet.
    pub fn new(machine: &'m Machine, input: &Tape) -> Self {
        assert_eq!(
            machine.alphabet(),
            input.alphabet(),
            "machine and tape alphabets differ"
        );
        let head = input.head();
        let (lo, hi) = match input.support() {
            Some((a, b)) => (a.min(head), b.max(head)),
            None => (head, head),
        };
        let (offset, cells) = input.window_covering(lo, hi);
        Runner {
            machine,
            cells,
            offset,
            head,
            start_head: head,
            state: Some(machine.start()),
            steps: 0,
            excursion: 0,
            leftmost: head,
            rightmost: head,
        }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    /// `None` once halted in the implicit reject state.
    pub fn state(&self) -> Option<StateId> {
        self.state
    }

    pub fn excursion(&self) -> u64 {
        self.excursion
    }

    /// Leftmost and rightmost cells the head has visited.
    pub fn visited(&self) -> (i64, i64) {
        (self.leftmost, self.rightmost)
    }

    pub fn is_halted(&self) -> bool {
        match self.state {
            None => true,
            Some(s) => self.machine.is_halt(s),
        }
    }

    fn read(&self) -> Symbol {
        self.cells[(self.head - self.offset) as usize]
    }

    fn ensure_head(&mut self) {
        let blank = self.machine.alphabet().blank();
        let idx = self.head - self.offset;
        if idx < 0 {
            let grow = (self.cells.len()).max(8);
            let mut v = vec![blank; grow];
            v.extend_from_slice(&self.cells);
            self.cells = v;
            self.offset -= grow as i64;
        } else if idx as usize >= self.cells.len() {
            let grow = (self.cells.len()).max(8);
            self.cells.extend(std::iter::repeat_n(blank, grow));
        }
    }

    pub fn step(&mut self, oracle: &dyn QueryOracle) -> StepOutcome {
        let Some(s) = self.state else {
            return StepOutcome::Halted;
        };
        if self.machine.is_halt(s) {
            return StepOutcome::Halted;
        }
        if let Some(p) = self.machine.oracle() {
            if p.query == s {
                let q = self.tape().recentered();
                match oracle.ask(&q) {
                    Answer::Yes => self.state = Some(p.yes),
                    Answer::No => self.state = Some(p.no),
                    Answer::Unknown => return StepOutcome::OracleUnknown(q),
                }
                self.steps += 1;
                return self.status();
            }
        }
        let sym = self.read();
        self.steps += 1;
        match self.machine.quintuple(s, sym) {
            None => {
                self.state = None;
                StepOutcome::Halted
            }
            Some(q) => {
                let idx = (self.head - self.offset) as usize;
                self.cells[idx] = q.write;
                self.head += q.mv.delta();
                self.ensure_head();
                self.excursion = self.excursion.max(self.head.abs_diff(self.start_head));
                self.leftmost = self.leftmost.min(self.head);
                self.rightmost = self.rightmost.max(self.head);
                self.state = Some(q.next);
                self.status()
            }
        }
    }

    fn status(&self) -> StepOutcome {
        if self.is_halted() {
            StepOutcome::Halted
        } else {
            StepOutcome::Running
        }
    }

    pub fn tape(&self) -> Tape {
        Tape::from_window(self.machine.alphabet(), self.offset, self.cells.clone(), self.head)
    }

    /// Runs until halt, fuel exhaustion or an unanswered query.
    pub fn run_to(&mut self, fuel: u64, oracle: &dyn QueryOracle) -> RunResult {
        loop {
            if self.is_halted() {
                return self.result();
            }
            if self.steps >= fuel {
                return RunResult::Exhausted { fuel };
            }
            if let StepOutcome::OracleUnknown(query) = self.step(oracle) {
                return RunResult::OracleUnknown {
                    query,
                    step: self.steps,
                };
            }
        }
    }

    fn result(&self) -> RunResult {
        RunResult::Halted {
            tape: self.tape(),
            steps: self.steps,
            state: self.state,
        }
    }

    fn same_config(&self, snap: &Snapshot) -> bool {
        self.state == snap.state && self.head == snap.head && self.tape() == snap.tape
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            state: self.state,
            head: self.head,
            tape: self.tape(),
            step: self.steps,
        }
    }
}

struct Snapshot {
    state: Option<StateId>,
    head: i64,
    tape: Tape,
    step: u64,
}

/// Like [`run`] but reports an alphabet mismatch instead of panicking.
pub fn try_run(m: &Machine, input: &Tape, fuel: u64) -> Result<RunResult, super::MachineError> {
    if m.alphabet() != input.alphabet() {
        return Err(super::MachineError::AlphabetMismatch(
            m.alphabet().symbols_string(),
            input.alphabet().symbols_string(),
        ));
    }
    Ok(run(m, input, fuel))
}

/// Panics if the tape and machine alphabets differ; see [`try_run`].
pub fn run(m: &Machine, input: &Tape, fuel: u64) -> RunResult {
    run_with_oracle(m, &EmptyOracle, input, fuel)
}

pub fn run_with_oracle(m: &Machine, oracle: &dyn QueryOracle, input: &Tape, fuel: u64) -> RunResult {
    Runner::new(m, input).run_to(fuel, oracle)
}

/// Runs and also reports the maximal head distance from the start cell.
pub fn run_traced(m: &Machine, input: &Tape, fuel: u64) -> (RunResult, u64) {
    let mut r = Runner::new(m, input);
    let res = r.run_to(fuel, &EmptyOracle);
    (res, r.excursion())
}

pub fn head_excursion(m: &Machine, input: &Tape, fuel: u64) -> u64 {
    run_traced(m, input, fuel).1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonHaltProof {
    /// No halting transition is reachable in the state graph.
    Unreachable,
    /// The full configuration at step `again` equals the one at `first`.
    Revisit { first: u64, again: u64 },
}

/// Outcome of a run with divergence detection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Halted { tape: Tape, steps: u64 },
    Diverges(NonHaltProof),
    Exhausted,
    OracleUnknown { query: Tape, step: u64 },
}

/// Static part of the non-halt detector: is any halting transition
/// reachable from the start state?
pub fn halting_unreachable(m: &Machine) -> bool {
    !m.bfs_order().into_iter().any(|s| m.can_halt_directly(s))
}

/// Runs with both non-halt detectors: the state-graph check, then Brent
/// cycle detection on full configurations within `fuel` steps.
pub fn detect_non_halting(m: &Machine, oracle: &dyn QueryOracle, input: &Tape, fuel: u64) -> Detection {
    if halting_unreachable(m) {
        return Detection::Diverges(NonHaltProof::Unreachable);
    }
    let mut r = Runner::new(m, input);
    let mut snap = r.snapshot();
    let mut power = 1u64;
    loop {
        if r.is_halted() {
            return Detection::Halted {
                tape: r.tape(),
                steps: r.steps(),
            };
        }
        if r.steps() >= fuel {
            return Detection::Exhausted;
        }
        if let StepOutcome::OracleUnknown(query) = r.step(oracle) {
            return Detection::OracleUnknown {
                query,
                step: r.steps(),
            };
        }
        if !r.is_halted() && r.same_config(&snap) {
            return Detection::Diverges(NonHaltProof::Revisit {
                first: snap.step,
                again: r.steps(),
            });
        }
        if r.steps() - snap.step == power {
            snap = r.snapshot();
            power *= 2;
        }
    }
}

/// Re-checks a non-halting proof from scratch.
pub fn replay_non_halt(m: &Machine, oracle: &dyn QueryOracle, input: &Tape, proof: &NonHaltProof) -> bool {
    match proof {
        NonHaltProof::Unreachable => halting_unreachable(m),
        NonHaltProof::Revisit { first, again } => {
            if first >= again {
                return false;
            }
            let mut r = Runner::new(m, input);
            if !matches!(r.run_to(*first, oracle), RunResult::Exhausted { .. }) {
                return false;
            }
            let snap = r.snapshot();
            match r.run_to(*again, oracle) {
                RunResult::Exhausted { .. } => r.same_config(&snap),
                _ => false,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OriginVerdict {
    Verified { samples: usize },
    Refuted { sample: Tape, head: i64 },
    Inconclusive { sample: Tape },
}

/// Sampled audit of the origin convention: every halting run must end with
/// the head back on the starting cell.
pub fn check_origin_convention(m: &Machine, samples: &[Tape], fuel: u64) -> OriginVerdict {
    let mut inconclusive = None;
    for t in samples {
        match run(m, t, fuel) {
            RunResult::Halted { tape, .. } => {
                if tape.head() != t.head() {
                    return OriginVerdict::Refuted {
                        sample: t.clone(),
                        head: tape.head() - t.head(),
                    };
                }
            }
            _ => {
                inconclusive.get_or_insert_with(|| t.clone());
            }
        }
    }
    match inconclusive {
        Some(sample) => OriginVerdict::Inconclusive { sample },
        None => OriginVerdict::Verified {
            samples: samples.len(),
        },
    }
}
