//! Quintuple machines.
//!
//! A [`Machine`] stores a dense transition table indexed by
//! `(state, symbol)`. A missing entry means "halt in the implicit reject
//! state"; see [`run`](run::run).

mod compose;
mod file;
mod numbering;
mod run;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tape::{Alphabet, Symbol, Tape};

pub use compose::{compose, compose_all};
pub use file::{parse_machine, write_machine, FileError};
pub use numbering::{
    decode_bits, decode_machine, decode_machine_over, encode_bits, encode_machine, fallback_machine,
    halting_table, k_approx, number_of_bits, bits_of_number, simulate_indexed,
};
pub use run::{
    check_origin_convention, detect_non_halting, halting_unreachable, head_excursion, replay_non_halt, run,
    run_traced, run_with_oracle, try_run, Answer, Detection, EmptyOracle, NonHaltProof, OriginVerdict,
    QueryOracle, RunResult, Runner, StepOutcome,
};

pub type StateId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    L,
    R,
    S,
}

impl Move {
    pub fn delta(self) -> i64 {
        match self {
            Move::L => -1,
            Move::R => 1,
            Move::S => 0,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Move::L => 'L',
            Move::R => 'R',
            Move::S => 'S',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quintuple {
    pub write: Symbol,
    pub mv: Move,
    pub next: StateId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OraclePorts {
    pub query: StateId,
    pub yes: StateId,
    pub no: StateId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MachineError {
    #[error("alphabets differ: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("start state was not declared")]
    MissingStart,
    #[error("state {0} is a halt state and cannot have quintuples")]
    RuleOnHaltState(String),
    #[error("state {0} is the oracle query state and cannot have quintuples")]
    RuleOnQueryState(String),
    #[error("conflicting quintuples for ({0}, {1:?})")]
    ConflictingRule(String, char),
    #[error("symbol {0:?} is not in the machine alphabet")]
    UnknownSymbol(char),
    #[error("oracle query state {0} cannot be a halt state")]
    QueryIsHalt(String),
    #[error("both machines have oracle ports; composition would need two oracles")]
    TwoOracles,
}

/// A deterministic single-tape machine, optionally with oracle ports.
///
/// Equality compares structure (alphabet, start, halting set, table,
/// ports) and ignores state names.
#[derive(Clone)]
pub struct Machine {
    alphabet: Alphabet,
    names: Vec<String>,
    start: StateId,
    halting: Vec<bool>,
    table: Vec<Option<Quintuple>>,
    oracle: Option<OraclePorts>,
}

impl PartialEq for Machine {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.start == other.start
            && self.halting == other.halting
            && self.table == other.table
            && self.oracle == other.oracle
    }
}

impl Eq for Machine {}

impl std::hash::Hash for Machine {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.alphabet.hash(h);
        self.start.hash(h);
        self.halting.hash(h);
        self.table.hash(h);
        self.oracle.hash(h);
    }
}

impl fmt::Debug for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Machine({} states, {} quintuples{})",
            self.num_states(),
            self.num_quintuples(),
            if self.oracle.is_some() { ", oracle" } else { "" }
        )
    }
}

impl Machine {
    /// Low-level constructor; `table` is indexed by `state * |Σ| + symbol`.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        names: Vec<String>,
        start: StateId,
        halting: Vec<bool>,
        table: Vec<Option<Quintuple>>,
        oracle: Option<OraclePorts>,
    ) -> Machine {
        let n = halting.len();
        debug_assert_eq!(names.len(), n);
        debug_assert_eq!(table.len(), n * alphabet.len());
        debug_assert!(start < n);
        Machine {
            alphabet,
            names,
            start,
            halting,
            table,
            oracle,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.halting.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_halt(&self, s: StateId) -> bool {
        self.halting[s]
    }

    pub fn halt_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states()).filter(|&s| self.halting[s])
    }

    pub fn oracle(&self) -> Option<OraclePorts> {
        self.oracle
    }

    pub fn is_query(&self, s: StateId) -> bool {
        self.oracle.is_some_and(|p| p.query == s)
    }

    pub fn quintuple(&self, s: StateId, sym: Symbol) -> Option<Quintuple> {
        self.table[s * self.alphabet.len() + sym as usize]
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn num_quintuples(&self) -> usize {
        self.table.iter().filter(|q| q.is_some()).count()
    }

    /// All defined quintuples as `(state, read, quintuple)`.
    pub fn rules(&self) -> impl Iterator<Item = (StateId, Symbol, Quintuple)> + '_ {
        let a = self.alphabet.len();
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(i, q)| q.map(|q| (i / a, (i % a) as Symbol, q)))
    }

    /// Successor states in the state graph. A state that is missing a
    /// quintuple can halt (implicitly), which [`Machine::can_halt_directly`]
    /// reports separately.
    pub fn successors(&self, s: StateId) -> Vec<StateId> {
        if let Some(p) = self.oracle {
            if p.query == s {
                return vec![p.yes, p.no];
            }
        }
        if self.halting[s] {
            return Vec::new();
        }
        (0..self.alphabet.len())
            .filter_map(|sym| self.quintuple(s, sym as Symbol).map(|q| q.next))
            .collect()
    }

    pub fn can_halt_directly(&self, s: StateId) -> bool {
        if self.halting[s] {
            return true;
        }
        if self.is_query(s) {
            return false;
        }
        (0..self.alphabet.len()).any(|sym| self.quintuple(s, sym as Symbol).is_none())
    }

    /// States reachable from the start in breadth-first order; successors
    /// are visited by read symbol, query states visit yes before no.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for t in self.successors(s) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Renumbers states in BFS order from the start state, drops unreachable
    /// states and guarantees at least one halt state (appending a fresh,
    /// unreachable one when none is reachable). Idempotent.
    pub fn canonicalize(&self) -> Machine {
        let order = self.bfs_order();
        let mut new_id = vec![usize::MAX; self.num_states()];
        for (i, &s) in order.iter().enumerate() {
            new_id[s] = i;
        }
        let mut n = order.len();
        let has_halt = order.iter().any(|&s| self.halting[s]);
        if !has_halt {
            n += 1;
        }
        let a = self.alphabet.len();
        let mut halting = vec![false; n];
        let mut table = vec![None; n * a];
        let mut names: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
        for (i, &s) in order.iter().enumerate() {
            halting[i] = self.halting[s];
            names[i] = self.names[s].clone();
            for sym in 0..a {
                if let Some(q) = self.quintuple(s, sym as Symbol) {
                    table[i * a + sym] = Some(Quintuple {
                        next: new_id[q.next],
                        ..q
                    });
                }
            }
        }
        if !has_halt {
            halting[n - 1] = true;
            names[n - 1] = fresh_name(&names[..n - 1], "halt");
        }
        let oracle = self.oracle.and_then(|p| {
            if new_id[p.query] == usize::MAX {
                None
            } else {
                Some(OraclePorts {
                    query: new_id[p.query],
                    yes: new_id[p.yes],
                    no: new_id[p.no],
                })
            }
        });
        Machine::from_parts(self.alphabet.clone(), names, 0, halting, table, oracle)
    }

    /// Re-expresses the machine over a larger alphabet that contains every
    /// symbol of this one (by character). New symbols get no quintuples.
    pub fn widen(&self, target: &Alphabet) -> Option<Machine> {
        let map: Vec<Symbol> = self
            .alphabet
            .symbols()
            .iter()
            .map(|&c| target.symbol(c))
            .collect::<Option<_>>()?;
        if map[self.alphabet.blank() as usize] != target.blank() {
            return None;
        }
        let n = self.num_states();
        let b = target.len();
        let mut table = vec![None; n * b];
        for (s, sym, q) in self.rules() {
            table[s * b + map[sym as usize] as usize] = Some(Quintuple {
                write: map[q.write as usize],
                ..q
            });
        }
        Some(Machine::from_parts(
            target.clone(),
            self.names.clone(),
            self.start,
            self.halting.clone(),
            table,
            self.oracle,
        ))
    }

    pub fn to_builder(&self) -> MachineBuilder {
        let mut b = MachineBuilder::new(&self.alphabet);
        for name in &self.names {
            b.state(name);
        }
        b.start(&self.names[self.start].clone());
        for s in self.halt_states() {
            b.halt(&self.names[s].clone());
        }
        if let Some(p) = self.oracle {
            b.oracle(
                &self.names[p.query].clone(),
                &self.names[p.yes].clone(),
                &self.names[p.no].clone(),
            );
        }
        for (s, sym, q) in self.rules() {
            b.rule_sym(s, sym, q.write, q.mv, q.next);
        }
        b
    }
}

pub(crate) fn fresh_name(existing: &[String], base: &str) -> String {
    if !existing.iter().any(|n| n == base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}{i}"))
        .find(|c| !existing.iter().any(|n| n == c))
        .unwrap()
}

/// Incremental construction of machines from named states.
#[derive(Clone, Debug)]
pub struct MachineBuilder {
    alphabet: Alphabet,
    names: Vec<String>,
    index: HashMap<String, StateId>,
    start: Option<StateId>,
    halting: Vec<StateId>,
    oracle: Option<(StateId, StateId, StateId)>,
    rules: Vec<(StateId, Symbol, Quintuple)>,
    conflict: Option<MachineError>,
}

impl MachineBuilder {
    pub fn new(alphabet: &Alphabet) -> Self {
        MachineBuilder {
            alphabet: alphabet.clone(),
            names: Vec::new(),
            index: HashMap::new(),
            start: None,
            halting: Vec::new(),
            oracle: None,
            rules: Vec::new(),
            conflict: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Returns the id of `name`, declaring it if needed.
    pub fn state(&mut self, name: &str) -> StateId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn start(&mut self, name: &str) -> &mut Self {
        let id = self.state(name);
        self.start = Some(id);
        self
    }

    pub fn halt(&mut self, name: &str) -> &mut Self {
        let id = self.state(name);
        if !self.halting.contains(&id) {
            self.halting.push(id);
        }
        self
    }

    pub fn oracle(&mut self, query: &str, yes: &str, no: &str) -> &mut Self {
        let q = self.state(query);
        let y = self.state(yes);
        let n = self.state(no);
        self.oracle = Some((q, y, n));
        self
    }

    /// Adds `(from, read) -> (write, mv, to)` using symbol characters.
    pub fn rule(&mut self, from: &str, read: char, write: char, mv: Move, to: &str) -> &mut Self {
        let (Some(r), Some(w)) = (self.alphabet.symbol(read), self.alphabet.symbol(write)) else {
            let bad = if self.alphabet.symbol(read).is_none() { read } else { write };
            self.conflict.get_or_insert(MachineError::UnknownSymbol(bad));
            return self;
        };
        let f = self.state(from);
        let t = self.state(to);
        self.rule_sym(f, r, w, mv, t)
    }

    /// Same as [`MachineBuilder::rule`] but keeps the read symbol.
    pub fn pass(&mut self, from: &str, read: char, mv: Move, to: &str) -> &mut Self {
        self.rule(from, read, read, mv, to)
    }

    /// [`MachineBuilder::pass`] for every character of `reads`.
    pub fn pass_each(&mut self, from: &str, reads: &str, mv: Move, to: &str) -> &mut Self {
        for c in reads.chars() {
            self.pass(from, c, mv, to);
        }
        self
    }

    /// Writes `write` whatever is read.
    pub fn write_any(&mut self, from: &str, write: char, mv: Move, to: &str) -> &mut Self {
        let syms = self.alphabet.symbols().to_vec();
        for c in syms {
            self.rule(from, c, write, mv, to);
        }
        self
    }

    /// Leaves any symbol in place.
    pub fn pass_any(&mut self, from: &str, mv: Move, to: &str) -> &mut Self {
        let syms: String = self.alphabet.symbols().iter().collect();
        self.pass_each(from, &syms, mv, to)
    }

    pub fn rule_sym(&mut self, from: StateId, read: Symbol, write: Symbol, mv: Move, to: StateId) -> &mut Self {
        let q = Quintuple { write, mv, next: to };
        if let Some(&(_, _, old)) = self.rules.iter().find(|(f, r, _)| *f == from && *r == read) {
            if old != q {
                let c = self.alphabet.char_of(read);
                self.conflict
                    .get_or_insert(MachineError::ConflictingRule(self.names[from].clone(), c));
            }
            return self;
        }
        self.rules.push((from, read, q));
        self
    }

    pub fn build(&self) -> Result<Machine, MachineError> {
        if let Some(e) = &self.conflict {
            return Err(e.clone());
        }
        let start = self.start.ok_or(MachineError::MissingStart)?;
        let mut names = self.names.clone();
        let mut halting = vec![false; names.len()];
        for &h in &self.halting {
            halting[h] = true;
        }
        if self.halting.is_empty() {
            names.push(fresh_name(&names, "halt"));
            halting.push(true);
        }
        let a = self.alphabet.len();
        let mut table = vec![None; names.len() * a];
        for &(f, r, q) in &self.rules {
            if halting[f] {
                return Err(MachineError::RuleOnHaltState(names[f].clone()));
            }
            if self.oracle.is_some_and(|(qs, _, _)| qs == f) {
                return Err(MachineError::RuleOnQueryState(names[f].clone()));
            }
            table[f * a + r as usize] = Some(q);
        }
        let oracle = self.oracle.map(|(q, y, n)| OraclePorts { query: q, yes: y, no: n });
        if let Some(p) = oracle {
            if halting[p.query] {
                return Err(MachineError::QueryIsHalt(names[p.query].clone()));
            }
        }
        Ok(Machine::from_parts(self.alphabet.clone(), names, start, halting, table, oracle))
    }
}

/// The yes/no tapes `ν` and `o` over an alphabet: `^1` and the blank tape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub yes_tape: Tape,
    pub no_tape: Tape,
}

impl Conventions {
    pub fn for_alphabet(alphabet: &Alphabet) -> Conventions {
        Conventions {
            yes_tape: Tape::blank(alphabet).with(0, alphabet.sym('1')),
            no_tape: Tape::blank(alphabet),
        }
    }

    pub fn binary() -> Conventions {
        Conventions::for_alphabet(&Alphabet::binary())
    }

    pub fn sigma4() -> Conventions {
        Conventions::for_alphabet(&Alphabet::sigma4())
    }

    pub fn answer(&self, b: bool) -> Tape {
        if b {
            self.yes_tape.clone()
        } else {
            self.no_tape.clone()
        }
    }

    /// `Some(true)` for ν, `Some(false)` for o, `None` otherwise.
    pub fn classify(&self, t: &Tape) -> Option<bool> {
        if *t == self.yes_tape {
            Some(true)
        } else if *t == self.no_tape {
            Some(false)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_adds_halt_when_missing() {
        let a = Alphabet::binary();
        let mut b = MachineBuilder::new(&a);
        b.start("s").pass("s", '0', Move::L, "s").pass("s", '1', Move::L, "s");
        let m = b.build().unwrap();
        assert_eq!(m.num_states(), 2);
        assert!(m.is_halt(1));
    }

    #[test]
    fn builder_rejects_conflicts_and_halt_rules() {
        let a = Alphabet::binary();
        let mut b = MachineBuilder::new(&a);
        b.start("s").rule("s", '1', '0', Move::R, "h").rule("s", '1', '1', Move::R, "h");
        assert!(matches!(b.build(), Err(MachineError::ConflictingRule(..))));

        let mut b = MachineBuilder::new(&a);
        b.start("s").halt("s").rule("s", '1', '0', Move::R, "s");
        assert!(matches!(b.build(), Err(MachineError::RuleOnHaltState(_))));
    }

    #[test]
    fn canonicalize_drops_unreachable_and_is_idempotent() {
        let a = Alphabet::binary();
        let mut b = MachineBuilder::new(&a);
        b.start("x")
            .halt("h")
            .rule("dead", '0', '1', Move::R, "x")
            .rule("x", '1', '0', Move::R, "y")
            .rule("y", '0', '0', Move::L, "h");
        let m = b.build().unwrap();
        let c = m.canonicalize();
        assert_eq!(c.num_states(), 3);
        assert_eq!(c.start(), 0);
        assert_eq!(c.canonicalize(), c);
    }
}
