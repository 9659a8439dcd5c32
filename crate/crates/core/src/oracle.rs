//! Certified oracles, bounded jumps and the `∅^(n)` chain.
//!
//! Every answer an oracle gives is either backed by a replayable
//! certificate or is `Unknown`. A jump oracle answers a query tape `t` by
//! running machine number `#t` on `t` itself (against the previous level
//! as its own oracle): a halting run certifies "yes", a non-halting proof
//! certifies "no", anything else stays unknown.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use serde::Serialize;

use crate::machine::{
    compose, decode_machine_over, MachineBuilder, MachineError, detect_non_halting, replay_non_halt, Answer, Conventions, Detection, FileError,
    Machine, NonHaltProof, QueryOracle, RunResult, Runner,
};
use crate::repr::{check_witness_with, function, Element, Representation, WitnessVerdict};
use crate::tape::{tape_number, Alphabet, Tape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// An explicit table entry.
    Table,
    /// Machine `index` halted on the query after `steps` steps.
    Halted { index: String, steps: u64 },
    NonHalt { index: String, proof: NonHaltProof },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reply {
    pub answer: Answer,
    pub certificate: Option<Certificate>,
}

impl Reply {
    fn unknown() -> Reply {
        Reply {
            answer: Answer::Unknown,
            certificate: None,
        }
    }
}

#[derive(Debug)]
pub enum OracleKind {
    /// Membership by table; with `closed` absent tapes are non-members,
    /// otherwise they are unknown.
    Table { entries: HashMap<Tape, bool>, closed: bool },
    /// The diagonal halting set relative to `base`, certified within `fuel`.
    Jump { base: Arc<Oracle>, fuel: u64 },
}

#[derive(Debug)]
pub struct Oracle {
    kind: OracleKind,
    cache: Mutex<HashMap<Tape, Reply>>,
}

impl Oracle {
    fn with_kind(kind: OracleKind) -> Arc<Oracle> {
        Arc::new(Oracle {
            kind,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// `∅`, a computable set: every answer is "no".
    pub fn empty() -> Arc<Oracle> {
        Oracle::table(HashMap::new(), true)
    }

    pub fn table(entries: HashMap<Tape, bool>, closed: bool) -> Arc<Oracle> {
        let entries = entries.into_iter().map(|(t, b)| (t.recentered(), b)).collect();
        Oracle::with_kind(OracleKind::Table { entries, closed })
    }

    /// The first jump of `∅`: diagonal halting, certified within `fuel`.
    pub fn bounded_halting(fuel: u64) -> Arc<Oracle> {
        Oracle::chain(Oracle::empty(), fuel)
    }

    /// The jump of `prev`.
    pub fn chain(prev: Arc<Oracle>, fuel: u64) -> Arc<Oracle> {
        Oracle::with_kind(OracleKind::Jump { base: prev, fuel })
    }

    pub fn kind(&self) -> &OracleKind {
        &self.kind
    }

    /// 0 for tables, one more than the base for jumps.
    pub fn level(&self) -> usize {
        match &self.kind {
            OracleKind::Table { .. } => 0,
            OracleKind::Jump { base, .. } => base.level() + 1,
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            OracleKind::Table { entries, closed } => {
                format!("table({} entries, {})", entries.len(), if *closed { "closed" } else { "open" })
            }
            OracleKind::Jump { fuel, .. } if self.level() == 1 => format!("bounded-halting(fuel {fuel})"),
            OracleKind::Jump { fuel, .. } => format!("chain(level {}, fuel {fuel})", self.level()),
        }
    }

    pub fn query(&self, t: &Tape) -> Reply {
        let t = t.recentered();
        if let Some(r) = self.cache.lock().unwrap().get(&t) {
            return r.clone();
        }
        let reply = match &self.kind {
            OracleKind::Table { entries, closed } => match entries.get(&t) {
                Some(&b) => Reply {
                    answer: if b { Answer::Yes } else { Answer::No },
                    certificate: Some(Certificate::Table),
                },
                None if *closed => Reply {
                    answer: Answer::No,
                    certificate: Some(Certificate::Table),
                },
                None => Reply::unknown(),
            },
            OracleKind::Jump { base, fuel } => {
                let e = tape_number(&t);
                let m = decode_machine_over(&e, t.alphabet());
                match detect_non_halting(&m, base.as_ref(), &t, *fuel) {
                    Detection::Halted { steps, .. } => Reply {
                        answer: Answer::Yes,
                        certificate: Some(Certificate::Halted {
                            index: e.to_string(),
                            steps,
                        }),
                    },
                    Detection::Diverges(proof) => Reply {
                        answer: Answer::No,
                        certificate: Some(Certificate::NonHalt {
                            index: e.to_string(),
                            proof,
                        }),
                    },
                    _ => Reply::unknown(),
                }
            }
        };
        self.cache.lock().unwrap().insert(t, reply.clone());
        reply
    }

    /// Re-checks a reply from scratch.
    pub fn replay(&self, t: &Tape, reply: &Reply) -> bool {
        let t = t.recentered();
        match (&self.kind, &reply.certificate) {
            (_, None) => reply.answer == Answer::Unknown,
            (OracleKind::Table { entries, closed }, Some(Certificate::Table)) => {
                match (entries.get(&t), reply.answer) {
                    (Some(&b), Answer::Yes) => b,
                    (Some(&b), Answer::No) => !b,
                    (None, Answer::No) => *closed,
                    _ => false,
                }
            }
            (OracleKind::Jump { base, .. }, Some(cert)) => {
                let e = tape_number(&t);
                let m = decode_machine_over(&e, t.alphabet());
                match (cert, reply.answer) {
                    (Certificate::Halted { index, steps }, Answer::Yes) => {
                        *index == e.to_string() && replay_halt(&m, base.as_ref(), &t, *steps)
                    }
                    (Certificate::NonHalt { index, proof }, Answer::No) => {
                        *index == e.to_string() && replay_non_halt(&m, base.as_ref(), &t, proof)
                    }
                    _ => false,
                }
            }
            _ => false,
        }
    }
}

impl QueryOracle for Oracle {
    fn ask(&self, query: &Tape) -> Answer {
        self.query(query).answer
    }
}

fn replay_halt(m: &Machine, oracle: &dyn QueryOracle, input: &Tape, steps: u64) -> bool {
    matches!(Runner::new(m, input).run_to(steps, oracle), RunResult::Halted { steps: s, .. } if s == steps)
}

/// `∅`, `∅′`, `∅″`, … up to `levels` (inclusive), each certified within `fuel`.
pub fn jump_oracles(levels: usize, fuel: u64) -> Vec<Arc<Oracle>> {
    let mut v = vec![Oracle::empty()];
    for _ in 0..levels {
        let prev = v.last().unwrap().clone();
        v.push(Oracle::chain(prev, fuel));
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum JumpStatus {
    Member { steps: u64 },
    /// `proof` is `None` only at level 0, where membership is empty by
    /// definition.
    NonMember { proof: Option<NonHaltProof> },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpEntry {
    pub element: Element,
    pub index: u64,
    pub tape: Tape,
    pub status: JumpStatus,
}

/// A certified finite approximation of a jump: every scanned element is a
/// member, a non-member or unknown, each with its evidence.
#[derive(Clone, Debug)]
pub struct JumpApprox {
    pub level: usize,
    pub representation: String,
    pub fuel: u64,
    pub entries: Vec<JumpEntry>,
}

impl JumpApprox {
    fn select(&self, f: impl Fn(&JumpStatus) -> bool) -> Vec<u64> {
        self.entries.iter().filter(|e| f(&e.status)).map(|e| e.index).collect()
    }

    pub fn members(&self) -> Vec<u64> {
        self.select(|s| matches!(s, JumpStatus::Member { .. }))
    }

    pub fn non_members(&self) -> Vec<u64> {
        self.select(|s| matches!(s, JumpStatus::NonMember { .. }))
    }

    pub fn unknown(&self) -> Vec<u64> {
        self.select(|s| matches!(s, JumpStatus::Unknown))
    }

    /// Re-verifies every certificate against the oracle the jump was taken
    /// over.
    pub fn replay(&self, base: &Oracle) -> bool {
        self.entries.iter().all(|e| {
            let m = decode_machine_over(&BigUint::from(e.index), e.tape.alphabet());
            match &e.status {
                JumpStatus::Member { steps } => replay_halt(&m, base, &e.tape, *steps),
                JumpStatus::NonMember { proof: Some(p) } => replay_non_halt(&m, base, &e.tape, p),
                JumpStatus::NonMember { proof: None } => self.level == 0,
                JumpStatus::Unknown => true,
            }
        })
    }
}

/// `C′` in `rx`: element number `i` is a member iff machine `i` (with `C`
/// as oracle) halts on `rx(element i)`.
pub fn jump_approx(c_oracle: &Oracle, rx: &Representation, fuel: u64, element_bound: usize) -> JumpApprox {
    let entries = rx
        .domain
        .take(element_bound)
        .into_iter()
        .enumerate()
        .map(|(i, x)| {
            let Ok(tape) = rx.encode(&x) else {
                return JumpEntry {
                    element: x,
                    index: i as u64,
                    tape: Tape::blank(rx.alphabet()),
                    status: JumpStatus::Unknown,
                };
            };
            let m = decode_machine_over(&BigUint::from(i), rx.alphabet());
            let status = match detect_non_halting(&m, c_oracle, &tape, fuel) {
                Detection::Halted { steps, .. } => JumpStatus::Member { steps },
                Detection::Diverges(p) => JumpStatus::NonMember { proof: Some(p) },
                _ => JumpStatus::Unknown,
            };
            JumpEntry {
                element: x,
                index: i as u64,
                tape,
                status,
            }
        })
        .collect();
    JumpApprox {
        level: c_oracle.level() + 1,
        representation: rx.name().to_string(),
        fuel,
        entries,
    }
}

/// Levels `0..=n` of `∅^(k)` over the tape numbering of {0,1}.
pub fn empty_jump_chain(n: usize, fuel: u64, bound: usize) -> Vec<JumpApprox> {
    assert!(n <= 2, "the chain stops at level 2");
    let rx = crate::repr::rep_numbering(&Alphabet::binary());
    let oracles = jump_oracles(n, fuel);
    let level0 = JumpApprox {
        level: 0,
        representation: rx.name().to_string(),
        fuel,
        entries: rx
            .domain
            .take(bound)
            .into_iter()
            .enumerate()
            .map(|(i, x)| JumpEntry {
                tape: rx.encode(&x).expect("total"),
                element: x,
                index: i as u64,
                status: JumpStatus::NonMember { proof: None },
            })
            .collect(),
    };
    let mut out = vec![level0];
    for k in 0..n {
        out.push(jump_approx(&oracles[k], &rx, fuel, bound));
    }
    out
}

/// `verify_transformable` for witnesses that consult `r`.
pub fn relativized_verify_transformable(
    rx: &Representation,
    ry: &Representation,
    witness: &Machine,
    r: &Oracle,
    samples: usize,
    fuel: u64,
) -> WitnessVerdict {
    check_witness_with(witness, &function(|x| Some(x.clone())), rx, ry, samples, fuel, r)
}

/// Queries the oracle on the whole tape, then continues as `yes` or `no`.
pub fn branch_on_oracle(yes: &Machine, no: &Machine) -> Result<Machine, MachineError> {
    if yes.oracle().is_some() || no.oracle().is_some() {
        return Err(MachineError::TwoOracles);
    }
    if yes.alphabet() != no.alphabet() {
        return Err(MachineError::AlphabetMismatch(
            yes.alphabet().symbols_string(),
            no.alphabet().symbols_string(),
        ));
    }
    let mut b = MachineBuilder::new(yes.alphabet());
    let (ys, ns) = (
        format!("y.{}", yes.state_name(yes.start())),
        format!("n.{}", no.state_name(no.start())),
    );
    b.start("ask").oracle("ask", &ys, &ns);
    for (tag, m) in [("y", yes), ("n", no)] {
        let ids: Vec<_> = (0..m.num_states())
            .map(|s| b.state(&format!("{tag}.{}", m.state_name(s))))
            .collect();
        for h in m.halt_states() {
            b.halt(&format!("{tag}.{}", m.state_name(h)));
        }
        for (s, sym, q) in m.rules() {
            b.rule_sym(ids[s], sym, q.write, q.mv, ids[q.next]);
        }
    }
    b.build()
}

/// `u⁰ → u¹` with an oracle for the flags: ask about `ρc(n)`, write
/// `ρc(1)` or `ρc(0)` as a second block, and swap it to the front.
pub fn flag_transform_witness() -> Machine {
    let ask = branch_on_oracle(&crate::machines::left_block_writer("110"), &crate::machines::left_block_writer("10"))
        .expect("plain branches");
    compose(&ask, &crate::pairing::combinators::machine_swap()).expect("one oracle")
}

/// The certified flags of `n < bound` as a table keyed by `ρc(n)`;
/// uncertified `n` stay unknown.
pub fn flag_table(flags: &Oracle, bound: u64) -> Arc<Oracle> {
    let entries = (0..bound)
        .filter_map(|n| {
            crate::repr::certified_flag(flags, n)
                .ok()
                .map(|f| (crate::repr::rho_c(n), f))
        })
        .collect();
    Oracle::table(entries, false)
}

/// A decider that answers from the certified entries of `a` (which must
/// come from a single-block representation) and spins elsewhere.
pub fn table_decider(a: &JumpApprox) -> Machine {
    let conv = Conventions::sigma4();
    let entries: Vec<_> = a
        .entries
        .iter()
        .filter_map(|e| {
            let member = match e.status {
                JumpStatus::Member { .. } => true,
                JumpStatus::NonMember { .. } => false,
                JumpStatus::Unknown => return None,
            };
            let mut blocks = crate::pairing::parse_component(&e.tape)?;
            (blocks.len() == 1).then(|| (blocks.remove(0), conv.answer(member)))
        })
        .collect();
    crate::pairing::combinators::machine_lookup(&entries, &crate::pairing::combinators::LookupDefault::Diverge)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Falsification {
    Counterexample {
        element: Element,
        member: bool,
        result: RunResult,
    },
    /// No disagreement among `checked` certified elements — not a proof of
    /// correctness.
    NoneFound { checked: usize, undecided: usize },
}

/// Looks for a certified element on which `candidate` (running with `C`
/// as its oracle) gives the wrong jump answer.
pub fn jump_decider_falsifier(
    candidate: &Machine,
    c_oracle: &Oracle,
    rx: &Representation,
    bound: usize,
    fuel: u64,
) -> Falsification {
    let approx = jump_approx(c_oracle, rx, fuel, bound);
    let conv = Conventions::for_alphabet(rx.alphabet());
    let (mut checked, mut undecided) = (0, 0);
    for e in &approx.entries {
        let member = match e.status {
            JumpStatus::Member { .. } => true,
            JumpStatus::NonMember { .. } => false,
            JumpStatus::Unknown => continue,
        };
        let result = Runner::new(candidate, &e.tape).run_to(fuel, c_oracle);
        match &result {
            RunResult::Halted { tape, .. } => {
                if conv.classify(tape) != Some(member) {
                    return Falsification::Counterexample {
                        element: e.element.clone(),
                        member,
                        result,
                    };
                }
                checked += 1;
            }
            _ => undecided += 1,
        }
    }
    Falsification::NoneFound { checked, undecided }
}

/// The certificate table format: `yes <element> <steps>` and
/// `no <element> <reason>` with reason `unreachable`, `revisit <i> <j>` or
/// `empty`. `#` starts a comment.
pub fn write_certificates(a: &JumpApprox) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# level {} over {} at fuel {}",
        a.level, a.representation, a.fuel
    );
    for e in &a.entries {
        let _ = match &e.status {
            JumpStatus::Member { steps } => writeln!(out, "yes {} {steps}", e.element),
            JumpStatus::NonMember { proof: None } => writeln!(out, "no {} empty", e.element),
            JumpStatus::NonMember {
                proof: Some(NonHaltProof::Unreachable),
            } => writeln!(out, "no {} unreachable", e.element),
            JumpStatus::NonMember {
                proof: Some(NonHaltProof::Revisit { first, again }),
            } => writeln!(out, "no {} revisit {first} {again}", e.element),
            JumpStatus::Unknown => Ok(()),
        };
    }
    out
}

pub fn parse_certificates(text: &str) -> Result<Vec<(u64, JumpStatus)>, FileError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| FileError {
            line: i + 1,
            message: m.to_string(),
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| err("expected a number"));
        let element = num(toks.get(1).ok_or_else(|| err("missing element"))?)?;
        let status = match (toks[0], &toks[2..]) {
            ("yes", [steps]) => JumpStatus::Member { steps: num(steps)? },
            ("no", ["empty"]) => JumpStatus::NonMember { proof: None },
            ("no", ["unreachable"]) => JumpStatus::NonMember {
                proof: Some(NonHaltProof::Unreachable),
            },
            ("no", ["revisit", a, b]) => JumpStatus::NonMember {
                proof: Some(NonHaltProof::Revisit {
                    first: num(a)?,
                    again: num(b)?,
                }),
            },
            _ => return Err(err("expected `yes <n> <steps>` or `no <n> <reason>`")),
        };
        out.push((element, status));
    }
    Ok(out)
}

/// Rebuilds the approximation a certificate table describes (elements are
/// numbers in `rx`) so it can be replayed.
pub fn approx_from_certificates(
    lines: &[(u64, JumpStatus)],
    rx: &Representation,
    level: usize,
    fuel: u64,
) -> Option<JumpApprox> {
    let entries = lines
        .iter()
        .map(|(n, s)| {
            let element = Element::Nat(*n);
            Some(JumpEntry {
                tape: rx.encode(&element).ok()?,
                element,
                index: *n,
                status: s.clone(),
            })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(JumpApprox {
        level,
        representation: rx.name().to_string(),
        fuel,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{k_approx, MachineBuilder, Move};
    use crate::tape::tape_of_index;

    #[test]
    fn table_oracle_machine() {
        let a = Alphabet::binary();
        let t0 = Tape::blank(&a);
        let mut entries = HashMap::new();
        entries.insert(t0.clone(), true);
        let o = Oracle::table(entries, true);
        // query the input, then answer
        let mut b = MachineBuilder::new(&a);
        b.start("q").oracle("q", "y", "n").halt("halt");
        b.write_any("y", '1', Move::S, "halt");
        b.write_any("n", '0', Move::S, "halt");
        let m = b.build().unwrap();
        let c = Conventions::binary();
        let r = crate::machine::run_with_oracle(&m, o.as_ref(), &t0, 10);
        assert_eq!(r.halted_tape().map(|t| c.classify(t)), Some(Some(true)));
        let open = Oracle::table(HashMap::new(), false);
        let r = crate::machine::run_with_oracle(&m, open.as_ref(), &t0, 10);
        assert!(matches!(r, RunResult::OracleUnknown { .. }));
    }

    #[test]
    fn level_one_is_k_approx() {
        let chain = empty_jump_chain(1, 200, 300);
        assert!(chain[0].members().is_empty());
        let k: Vec<u64> = k_approx(200, 300).into_iter().collect();
        assert_eq!(chain[1].members(), k);
        assert!(!chain[1].non_members().is_empty());
        assert!(chain[1].replay(&Oracle::empty()));
    }

    #[test]
    fn replies_replay() {
        let o = Oracle::bounded_halting(300);
        for n in 0..200 {
            let t = tape_of_index(n, &Alphabet::binary());
            let r = o.query(&t);
            assert!(o.replay(&t, &r), "{n}");
            assert_eq!(o.query(&t), r);
        }
    }

    #[test]
    fn relativized_flag_transform() {
        let flags = Oracle::bounded_halting(500);
        let table = flag_table(&flags, 60);
        let u0 = crate::repr::rep_u_k(0, vec![]);
        let u1 = crate::repr::rep_u_k(1, vec![flags]);
        let w = flag_transform_witness();
        let v = relativized_verify_transformable(&u0, &u1, &w, &table, 60, 100_000);
        assert!(matches!(v, WitnessVerdict::Verified { samples, .. } if samples > 0), "{v}");
        // beyond the table the oracle is silent: inconclusive, not refuted
        let v = relativized_verify_transformable(&u0, &u1, &w, &table, 80, 100_000);
        assert!(matches!(v, WitnessVerdict::Inconclusive { .. }), "{v}");
        // with no oracle the witness cannot help
        let id = crate::machines::identity(&Alphabet::sigma4());
        let plain = crate::repr::check_witness(&id, &function(|x| Some(x.clone())), &u0, &u0, 20, 100);
        assert_eq!(relativized_verify_transformable(&u0, &u0, &id, &Oracle::empty(), 20, 100), plain);
    }

    #[test]
    fn falsifier() {
        use crate::pairing::combinators::machine_const_tape;
        let rx = crate::repr::rep_words();
        let c = Conventions::sigma4();
        let empty = Oracle::empty();
        let first = |member: bool| {
            jump_approx(&empty, &rx, 1000, 60)
                .entries
                .into_iter()
                .find(|e| matches!(e.status, JumpStatus::Member { .. }) == member && e.status != JumpStatus::Unknown)
                .unwrap()
                .element
        };
        match jump_decider_falsifier(&machine_const_tape(&c.no_tape), &empty, &rx, 60, 1000) {
            Falsification::Counterexample { element, member, .. } => {
                assert!(member);
                assert_eq!(element, first(true));
            }
            other => panic!("{other:?}"),
        }
        match jump_decider_falsifier(&machine_const_tape(&c.yes_tape), &empty, &rx, 60, 1000) {
            Falsification::Counterexample { element, member, .. } => {
                assert!(!member);
                assert_eq!(element, first(false));
            }
            other => panic!("{other:?}"),
        }
        let table = table_decider(&jump_approx(&empty, &rx, 1000, 60));
        assert!(matches!(
            jump_decider_falsifier(&table, &empty, &rx, 60, 1000),
            Falsification::NoneFound { checked, .. } if checked > 0
        ));
    }

    #[test]
    fn certificate_file_round_trip() {
        let chain = empty_jump_chain(1, 100, 120);
        let text = write_certificates(&chain[1]);
        let lines = parse_certificates(&text).unwrap();
        let rx = crate::repr::rep_numbering(&Alphabet::binary());
        let back = approx_from_certificates(&lines, &rx, 1, 100).unwrap();
        assert_eq!(back.members(), chain[1].members());
        assert!(back.replay(&Oracle::empty()));
        assert_eq!(parse_certificates("yes 3\n").unwrap_err().line, 1);
    }
}
