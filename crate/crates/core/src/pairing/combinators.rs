//! The pairing combinators as genuine Σ₄ machines.
//!
//! Every machine here starts with the head on cell 0 of a component tape
//! and halts with the head back on cell 0. Internally they only ever use
//! the four symbols of Σ₄: temporary marks are blanks ("holes") whose
//! original content is carried in the finite control.

use super::{component_tape, enc, parse_component, Block, PairError};
use crate::machine::{compose, run, Conventions, Machine, MachineBuilder, Move, Runner, EmptyOracle, RunResult};
use crate::tape::{Alphabet, Tape};

use Move::{L, R, S};

const BITS: [char; 2] = ['0', '1'];
const NONBLANK: [char; 3] = ['0', '1', '$'];

fn builder() -> MachineBuilder {
    let mut b = MachineBuilder::new(&Alphabet::sigma4());
    b.halt("halt");
    b
}

/// δ: `w$ ↦ ⟨w, w⟩`.
///
/// Cell 0 is replaced by a blank origin mark for the whole run, its bit
/// kept in the state. Each source bit is lifted (leaving a hole), carried
/// past the origin to the left end of the copy and written there, then
/// restored.
pub fn machine_duplicate() -> Machine {
    let mut b = builder();
    b.start("start");
    b.rule("start", '$', '$', L, "empty");
    b.rule("empty", '_', '$', R, "halt");
    for o in BITS {
        b.rule("start", o, '_', L, &format!("w{o}"));
        b.rule(&format!("w{o}"), '_', o, R, &format!("skip{o}"));
        b.pass(&format!("skip{o}"), '_', R, &format!("pick{o}"));
        let pick = format!("pick{o}");
        for x in BITS {
            let (cb, ca) = (format!("carry{o}{x}b"), format!("carry{o}{x}a"));
            let (rb, ra) = (format!("ret{o}{x}b"), format!("ret{o}{x}a"));
            b.rule(&pick, x, '_', L, &cb);
            b.pass_each(&cb, "01", L, &cb).pass(&cb, '_', L, &ca);
            b.pass_each(&ca, "01", L, &ca).rule(&ca, '_', x, R, &rb);
            b.pass_each(&rb, "01", R, &rb).pass(&rb, '_', R, &ra);
            b.pass_each(&ra, "01", R, &ra).rule(&ra, '_', x, R, &pick);
        }
        let (fb, fa, fr) = (format!("fin{o}b"), format!("fin{o}a"), format!("finret{o}"));
        b.pass(&pick, '$', L, &fb);
        b.pass_each(&fb, "01", L, &fb).pass(&fb, '_', L, &fa);
        b.pass_each(&fa, "01", L, &fa).rule(&fa, '_', '$', R, &fr);
        b.pass_each(&fr, "01", R, &fr).rule(&fr, '_', o, S, "halt");
    }
    b.build().expect("duplicate machine")
}

/// σ: `⟨u, v⟩ ↦ ⟨v, u⟩`, i.e. the reflection `p ↦ −1 − p` of the tape.
///
/// Cells `i` and `−1−i` are exchanged outward from the origin using two
/// holes whose contents ride in the state; cell 0 keeps a blank origin mark
/// whose final symbol `F` is also remembered. Once the shorter side's
/// terminator has been exchanged, the rest of the longer side is moved
/// across one symbol at a time.
pub fn machine_swap() -> Machine {
    let mut b = builder();
    b.start("start");
    for a0 in NONBLANK {
        b.rule("start", a0, '_', L, &format!("sb{a0}"));
    }
    // setup: cell -1 receives u0, cell 0 becomes the origin mark
    b.rule("sb$", '$', '$', R, "fin$");
    b.rule("fin$", '_', '$', S, "halt");
    for a0 in BITS {
        b.rule(&format!("sb{a0}"), '$', a0, R, "nori");
    }
    b.rule("nori", '_', '$', R, "TRn_w2");
    for f in BITS {
        b.rule("sb$", f, '$', L, &format!("TL_seek{f}"));
        for a0 in BITS {
            b.rule(&format!("sb{a0}"), f, a0, L, &format!("mkleft{f}"));
        }
    }
    for f in BITS {
        // the first pair of holes at cells -2 and 1
        for y in NONBLANK {
            let iwb = format!("iw{f}{y}");
            b.rule(&format!("mkleft{f}"), y, '_', R, &iwb);
            b.pass_each(&iwb, "01", R, &iwb);
            b.pass(&iwb, '_', R, &format!("mkright{f}{y}"));
            for x in NONBLANK {
                b.rule(&format!("mkright{f}{y}"), x, '_', S, &format!("AR{f}{x}{y}"));
            }
        }
        // exchange loop; AR = at the right hole holding (x, y)
        for x in NONBLANK {
            for y in NONBLANK {
                let ar = format!("AR{f}{x}{y}");
                let xb = x != '$';
                let yb = y != '$';
                if xb && yb {
                    let mk = format!("mk{f}{x}");
                    b.rule(&ar, '_', y, R, &mk);
                    for x2 in NONBLANK {
                        let (cb, ca) = (format!("cl{f}{x}{x2}b"), format!("cl{f}{x}{x2}a"));
                        let tl = format!("tl{f}{x2}");
                        b.rule(&mk, x2, '_', L, &cb);
                        b.pass_each(&cb, "01", L, &cb).pass(&cb, '_', L, &ca);
                        b.pass_each(&ca, "01", L, &ca).rule(&ca, '_', x, L, &tl);
                    }
                } else if !xb && !yb {
                    let (cb, ca, rt) = (format!("fc{f}b"), format!("fc{f}a"), format!("rt{f}"));
                    b.rule(&ar, '_', '$', L, &cb);
                    b.pass_each(&cb, "01", L, &cb).pass(&cb, '_', L, &ca);
                    b.pass_each(&ca, "01", L, &ca).rule(&ca, '_', '$', R, &rt);
                    b.pass_each(&rt, "01", R, &rt).rule(&rt, '_', f, S, "halt");
                } else if !xb {
                    // u ended first: the rest of v moves right
                    let (cb, ca) = (format!("cd{f}b"), format!("cd{f}a"));
                    b.rule(&ar, '_', y, L, &cb);
                    b.pass_each(&cb, "01", L, &cb).pass(&cb, '_', L, &ca);
                    b.pass_each(&ca, "01", L, &ca).rule(&ca, '_', '$', L, &format!("TL_seek{f}"));
                } else {
                    // v ended first: the rest of u moves left
                    let (cb, ca) = (format!("cx{f}{x}b"), format!("cx{f}{x}a"));
                    b.rule(&ar, '_', '$', L, &cb);
                    b.pass_each(&cb, "01", L, &cb).pass(&cb, '_', L, &ca);
                    b.pass_each(&ca, "01", L, &ca).rule(&ca, '_', x, R, &format!("TR_w0{f}"));
                }
            }
        }
        for x2 in NONBLANK {
            let tl = format!("tl{f}{x2}");
            for y2 in NONBLANK {
                let (wb, wa) = (format!("wr{f}{x2}{y2}b"), format!("wr{f}{x2}{y2}a"));
                b.rule(&tl, y2, '_', R, &wb);
                b.pass_each(&wb, "01", R, &wb).pass(&wb, '_', R, &wa);
                b.pass_each(&wa, "01", R, &wa).pass(&wa, '_', S, &format!("AR{f}{x2}{y2}"));
            }
        }

        // left tail moves to the right end
        let seek = format!("TL_seek{f}");
        let (b0, b1, ret) = (format!("TLb{f}0"), format!("TLb{f}1"), format!("TLret{f}"));
        b.pass(&seek, '_', L, &seek);
        for c in NONBLANK {
            let (c0, c1, c2) = (format!("TLc{f}{c}0"), format!("TLc{f}{c}1"), format!("TLc{f}{c}2"));
            b.rule(&seek, c, '_', R, &c0);
            b.pass(&c0, '_', R, &c0).pass(&c0, '$', R, &c1);
            b.pass_each(&c1, "01", R, &c1).pass(&c1, '_', R, &c2);
            b.pass_each(&c2, "01", R, &c2);
            if c == '$' {
                b.rule(&c2, '_', c, L, &ret);
            } else {
                b.rule(&c2, '_', c, L, &b0);
            }
        }
        b.pass_each(&b0, "01", L, &b0).pass(&b0, '_', L, &b1);
        b.pass_each(&b1, "01", L, &b1).pass(&b1, '$', L, &seek);
        b.pass_each(&ret, "01", L, &ret).rule(&ret, '_', f, S, "halt");

        // right tail moves to the left end
        let (w0, w1, w2, ret) = (
            format!("TR_w0{f}"),
            format!("TR_w1{f}"),
            format!("TR_w2{f}"),
            format!("TRret{f}"),
        );
        b.pass_each(&w0, "01", R, &w0).pass(&w0, '_', R, &w1);
        b.pass_each(&w1, "01", R, &w1).pass(&w1, '$', R, &w2);
        b.pass(&w2, '_', R, &w2);
        for c in NONBLANK {
            let (c0, c1, c2) = (format!("TRc{f}{c}0"), format!("TRc{f}{c}1"), format!("TRc{f}{c}2"));
            b.rule(&w2, c, '_', L, &c0);
            b.pass(&c0, '_', L, &c0).pass(&c0, '$', L, &c1);
            b.pass_each(&c1, "01", L, &c1).pass(&c1, '_', L, &c2);
            b.pass_each(&c2, "01", L, &c2);
            if c == '$' {
                b.rule(&c2, '_', c, R, &ret);
            } else {
                b.rule(&c2, '_', c, R, &w0);
            }
        }
        b.pass_each(&ret, "01", R, &ret).rule(&ret, '_', f, S, "halt");
    }
    // right tail when v is empty: the origin itself holds v's terminator
    b.pass_each("TRn_w0", "01", R, "TRn_w0").pass("TRn_w0", '$', R, "TRn_w2");
    b.pass("TRn_w2", '_', R, "TRn_w2");
    for c in NONBLANK {
        let (c0, c2) = (format!("TRnc{c}0"), format!("TRnc{c}2"));
        b.rule("TRn_w2", c, '_', L, &c0);
        b.pass(&c0, '_', L, &c0).pass(&c0, '$', L, &c2);
        b.pass_each(&c2, "01", L, &c2);
        b.rule(&c2, '_', c, R, if c == '$' { "TRn_ret" } else { "TRn_w0" });
    }
    b.pass_each("TRn_ret", "01", R, "TRn_ret").pass("TRn_ret", '$', S, "halt");
    b.build().expect("swap machine")
}

/// π₁: erase every block left of the head.
pub fn machine_proj1() -> Machine {
    let mut b = builder();
    b.start("start");
    b.pass_each("start", "01$", L, "E");
    for x in BITS {
        b.rule("E", x, '_', L, "E");
        b.rule("E$", x, '_', L, "E");
    }
    b.rule("E", '$', '_', L, "E$");
    b.rule("E$", '$', '_', L, "E$");
    b.pass("E$", '_', R, "ret");
    b.pass("ret", '_', R, "ret");
    b.pass_each("ret", "01$", S, "halt");
    b.build().expect("proj1 machine")
}

/// π₂ as `σ ; π₁`, defined for pairs of single blocks.
pub fn machine_proj2() -> Machine {
    compose(&machine_swap(), &machine_proj1()).expect("same alphabet")
}

/// π₂ built directly: erase the first block, then move the second one
/// across the origin symbol by symbol.
pub fn machine_proj2_direct() -> Machine {
    let mut b = builder();
    b.start("start");
    for x in BITS {
        b.rule("start", x, '_', R, "start");
    }
    b.rule("start", '$', '_', L, "back");
    b.pass("back", '_', L, "back");
    for c in NONBLANK {
        let put = format!("put{c}");
        b.rule("back", c, '_', R, &put);
        if c == '$' {
            b.rule(&put, '_', c, S, "halt");
        } else {
            b.rule(&put, '_', c, L, "W1");
        }
        let (c1, c2) = (format!("C1{c}"), format!("C2{c}"));
        b.rule("W2", c, '_', R, &c1);
        b.pass(&c1, '_', R, &c1).pass_each(&c1, "01$", R, &c2);
        b.pass_each(&c2, "01$", R, &c2);
        b.rule(&c2, '_', c, L, if c == '$' { "R1" } else { "W1" });
    }
    b.pass_each("W1", "01$", L, "W1").pass("W1", '_', L, "W2");
    b.pass("W2", '_', L, "W2");
    b.pass_each("R1", "01$", L, "R1").pass("R1", '_', R, "halt");
    b.build().expect("direct proj2 machine")
}

/// eq: `⟨u, v⟩ ↦ ν` if `u = v`, else `o`.
///
/// Cell 0 becomes a `$` anchor; pairs `(i, −1−i)` are compared and erased
/// from the inside out, and everything left is erased on a mismatch.
pub fn machine_eq() -> Machine {
    let mut b = builder();
    b.start("start");
    for a in NONBLANK {
        b.rule("start", a, '$', L, &format!("cmp{a}"));
    }
    b.pass("yesret", '_', R, "yesret");
    b.rule("yesret", '$', '1', S, "halt");
    b.pass("back", '_', R, "back");
    b.pass("back", '$', R, "fetch");
    b.pass("fetch", '_', R, "fetch");
    for a in NONBLANK {
        let (cmp, cl) = (format!("cmp{a}"), format!("cl{a}"));
        b.rule("fetch", a, '_', L, &cl);
        b.pass(&cl, '_', L, &cl).pass(&cl, '$', L, &cmp);
        b.pass(&cmp, '_', L, &cmp);
        let rd = if a == '$' { "d" } else { "p" };
        for c in NONBLANK {
            if c == a {
                b.rule(&cmp, c, '_', R, if a == '$' { "yesret" } else { "back" });
            } else if c == '$' {
                b.rule(&cmp, c, '_', R, &format!("gor{rd}"));
            } else {
                b.rule(&cmp, c, '_', L, &format!("el{rd}"));
            }
        }
    }
    for rd in ["d", "p"] {
        let (el, gor) = (format!("el{rd}"), format!("gor{rd}"));
        for x in BITS {
            b.rule(&el, x, '_', L, &el);
        }
        b.rule(&el, '$', '_', R, &gor);
        b.pass(&gor, '_', R, &gor);
        if rd == "d" {
            b.rule(&gor, '$', '_', S, "halt");
        } else {
            b.pass(&gor, '$', R, "er");
        }
    }
    b.pass("er", '_', R, "er");
    for x in BITS {
        b.rule("er", x, '_', R, "er1");
        b.rule("er1", x, '_', R, "er1");
    }
    b.rule("er", '$', '_', L, "bk");
    b.rule("er1", '$', '_', L, "bk");
    b.pass("bk", '_', L, "bk");
    b.rule("bk", '$', '_', S, "halt");
    b.build().expect("eq machine")
}

/// Adds states starting at `entry` that write `t` (relative to the current
/// cell, assumed blank elsewhere) and halt on the starting cell.
fn emit_writer(b: &mut MachineBuilder, entry: &str, t: &Tape) {
    let t = t.recentered();
    let (lo, hi) = match t.support() {
        Some((lo, hi)) => (lo.min(0), hi.max(0)),
        None => (0, 0),
    };
    let go = |k: i64| format!("{entry}.go{k}");
    let put = |p: i64| format!("{entry}.put{p}");
    let home = |p: i64| format!("{entry}.home{p}");
    b.pass_any(entry, S, &go(0));
    for k in 0..-lo {
        b.pass_any(&go(k), L, &go(k + 1));
    }
    b.pass_any(&go(-lo), S, &put(lo));
    for p in lo..=hi {
        let c = t.get_char(p);
        if p < hi {
            b.write_any(&put(p), c, R, &put(p + 1));
        } else if p > 0 {
            b.write_any(&put(p), c, L, &home(p - 1));
        } else {
            b.write_any(&put(p), c, S, "halt");
        }
    }
    for p in (1..hi).rev() {
        b.pass_any(&home(p), L, &home(p - 1));
    }
    if hi > 0 {
        b.pass_any(&home(0), S, "halt");
    }
}

/// Writes the fixed Σ₄ tape `t` over any single-component input.
pub fn machine_const_tape(t: &Tape) -> Machine {
    assert_eq!(*t.alphabet(), Alphabet::sigma4(), "constant tapes are over Σ₄");
    let mut b = builder();
    b.start("start");
    b.pass("start", '$', S, "out");
    for x in BITS {
        b.rule("start", x, '$', R, "erase");
        b.rule("erase", x, '_', R, "erase");
    }
    b.rule("erase", '$', '_', L, "back");
    b.pass("back", '_', L, "back");
    b.pass("back", '$', S, "out");
    emit_writer(&mut b, "out", t);
    b.build().expect("constant machine")
}

/// Lemma-style constant: any input ↦ `enc(t)`.
pub fn machine_const(t: &Tape) -> Result<Machine, PairError> {
    Ok(machine_const_tape(&enc(t)?))
}

/// What a [`machine_lookup`] does on a word that is not a key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LookupDefault {
    Output(Tape),
    Diverge,
}

/// A finite table from single-block inputs to output tapes, compiled to a
/// trie walk. The input is erased while it is read; cell 0 keeps a `$`
/// anchor to find the way back before the output is written.
pub fn machine_lookup(entries: &[(Block, Tape)], default: &LookupDefault) -> Machine {
    #[derive(Default)]
    struct Node {
        child: [Option<usize>; 2],
        output: Option<usize>,
    }
    let mut nodes = vec![Node::default()];
    for (i, (word, _)) in entries.iter().enumerate() {
        let mut n = 0;
        for &bit in word {
            let k = bit as usize;
            n = match nodes[n].child[k] {
                Some(c) => c,
                None => {
                    nodes.push(Node::default());
                    let c = nodes.len() - 1;
                    nodes[n].child[k] = Some(c);
                    c
                }
            };
        }
        nodes[n].output.get_or_insert(i);
    }

    let mut b = builder();
    b.start("n0");
    let out_state = |n: usize| -> String {
        match nodes[n].output {
            Some(i) => format!("out{i}"),
            None => "dflt".to_string(),
        }
    };
    for (n, node) in nodes.iter().enumerate() {
        let here = format!("n{n}");
        let back = format!("bk{}", out_state(n));
        for (k, c) in BITS.iter().enumerate() {
            let next = node.child[k].map_or("dead".to_string(), |ch| format!("n{ch}"));
            if n == 0 {
                b.rule(&here, *c, '$', R, &next);
            } else {
                b.rule(&here, *c, '_', R, &next);
            }
        }
        if n == 0 {
            b.pass(&here, '$', S, &out_state(0));
        } else {
            b.rule(&here, '$', '_', L, &back);
            b.pass(&back, '_', L, &back);
            b.pass(&back, '$', S, &out_state(n));
        }
    }
    for x in BITS {
        b.rule("dead", x, '_', R, "dead");
    }
    b.rule("dead", '$', '_', L, "bkdflt");
    b.pass("bkdflt", '_', L, "bkdflt");
    b.pass("bkdflt", '$', S, "dflt");
    let mut written = std::collections::HashSet::new();
    for n in 0..nodes.len() {
        if let Some(i) = nodes[n].output {
            if written.insert(i) {
                emit_writer(&mut b, &format!("out{i}"), &entries[i].1);
            }
        }
    }
    match default {
        LookupDefault::Output(t) => emit_writer(&mut b, "dflt", t),
        LookupDefault::Diverge => {
            b.pass_any("dflt", S, "dflt");
        }
    }
    b.build().expect("lookup machine")
}

/// Halts with ν iff the input is `enc(t)`, with o otherwise.
pub fn machine_recognize_const(t: &Tape) -> Result<Machine, PairError> {
    let target = enc(t)?;
    let blocks = parse_component(&target).expect("enc gives components");
    if blocks.len() != 1 {
        return Err(PairError::NestedFirst(blocks.len()));
    }
    let c = Conventions::sigma4();
    Ok(machine_lookup(
        &[(blocks[0].clone(), c.yes_tape)],
        &LookupDefault::Output(c.no_tape),
    ))
}

/// α₁[f]: `⟨a, b⟩ ↦ ⟨f(a), b⟩`.
///
/// For a *right-anchored* `f` — one that never visits a cell left of its
/// start and leaves a single block there — running `f` on a pair already
/// is partial application, because the second component is never touched.
/// [`check_right_anchored`] audits that precondition on samples.
pub fn machine_partial_apply(f: &Machine) -> Machine {
    f.clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnchorVerdict {
    Verified { samples: usize },
    Refuted { sample: Tape, reason: String },
    Inconclusive { sample: Tape },
}

pub fn check_right_anchored(f: &Machine, samples: &[Tape], fuel: u64) -> AnchorVerdict {
    let mut inconclusive = None;
    for t in samples {
        let mut r = Runner::new(f, t);
        match r.run_to(fuel, &EmptyOracle) {
            RunResult::Halted { tape, .. } => {
                let (lo, _) = r.visited();
                if lo < t.head() {
                    return AnchorVerdict::Refuted {
                        sample: t.clone(),
                        reason: format!("visited cell {}", lo - t.head()),
                    };
                }
                let single = parse_component(&tape).is_some_and(|b| b.len() == 1);
                if tape.head() != t.head() || !single {
                    return AnchorVerdict::Refuted {
                        sample: t.clone(),
                        reason: format!("output {tape} is not a single block at the origin"),
                    };
                }
            }
            _ => {
                inconclusive.get_or_insert_with(|| t.clone());
            }
        }
    }
    match inconclusive {
        Some(sample) => AnchorVerdict::Inconclusive { sample },
        None => AnchorVerdict::Verified {
            samples: samples.len(),
        },
    }
}

/// Convenience: run a combinator and return the halted tape.
pub fn apply(m: &Machine, t: &Tape, fuel: u64) -> Option<Tape> {
    match run(m, t, fuel) {
        RunResult::Halted { tape, .. } => Some(tape),
        _ => None,
    }
}

/// Every pair of single blocks with both words of length `< max_len`.
pub fn small_pairs(max_len: usize) -> Vec<Tape> {
    let words = super::words_up_to(max_len);
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            out.push(component_tape(&[u.clone(), v.clone()]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{spec, word_tape_str};
    use super::*;

    const FUEL: u64 = 1_000_000;

    fn check(m: &Machine, f: impl Fn(&Tape) -> Option<Tape>, inputs: &[Tape]) {
        for t in inputs {
            let want = f(t).expect("input in domain");
            assert_eq!(apply(m, t, FUEL), Some(want.clone()), "on {t}");
        }
    }

    fn singles(max_len: usize) -> Vec<Tape> {
        super::super::words_up_to(max_len)
            .into_iter()
            .map(|w| component_tape(&[w]))
            .collect()
    }

    #[test]
    fn duplicate_exhaustive_small() {
        check(&machine_duplicate(), spec::duplicate, &singles(7));
    }

    #[test]
    fn swap_exhaustive_small() {
        check(&machine_swap(), spec::swap, &small_pairs(5));
    }

    #[test]
    fn projections_exhaustive_small() {
        let pairs = small_pairs(5);
        check(&machine_proj1(), spec::proj1, &pairs);
        check(&machine_proj2(), spec::proj2, &pairs);
        check(&machine_proj2_direct(), spec::proj2, &pairs);
    }

    #[test]
    fn proj1_handles_nested_pairs() {
        let t = component_tape(&[vec![true], vec![], vec![false, true]]);
        assert_eq!(apply(&machine_proj1(), &t, FUEL), spec::proj1(&t));
    }

    #[test]
    fn eq_exhaustive_small() {
        check(&machine_eq(), spec::eq, &small_pairs(5));
    }

    #[test]
    fn constants_and_recognizers() {
        let rc = |n: usize| word_tape_str(&format!("{}0", "1".repeat(n + 1)));
        let k = machine_const(&rc(0)).unwrap();
        for t in singles(5).iter().chain([rc(7)].iter()) {
            assert_eq!(apply(&k, t, FUEL), Some(rc(0)));
        }
        let c = Conventions::sigma4();
        let r = machine_recognize_const(&rc(1)).unwrap();
        assert_eq!(apply(&r, &rc(1), FUEL), Some(c.yes_tape.clone()));
        assert_eq!(apply(&r, &rc(2), FUEL), Some(c.no_tape.clone()));
        for t in singles(5) {
            let want = c.answer(t == rc(1));
            assert_eq!(apply(&r, &t, FUEL), Some(want));
        }
    }

    #[test]
    fn lookup_diverges_off_table() {
        let m = machine_lookup(
            &[(vec![true], word_tape_str("0")), (vec![], word_tape_str("11"))],
            &LookupDefault::Diverge,
        );
        assert_eq!(apply(&m, &word_tape_str("1"), FUEL), Some(word_tape_str("0")));
        assert_eq!(apply(&m, &word_tape_str(""), FUEL), Some(word_tape_str("11")));
        assert_eq!(apply(&m, &word_tape_str("10"), 1000), None);
    }
}
