//! Stock machines: the small hand-built machines every other module and
//! example leans on.
//!
//! Unless stated otherwise the Σ₄ machines work on single-block inputs
//! `w$` and halt with the head back on cell 0.

use crate::machine::{compose, Machine, MachineBuilder, Move};
use crate::pairing::combinators::{machine_lookup, machine_proj1, machine_proj2, LookupDefault};
use crate::tape::Alphabet;

use Move::{L, R, S};

fn sigma4() -> MachineBuilder {
    let mut b = MachineBuilder::new(&Alphabet::sigma4());
    b.halt("halt");
    b
}

/// Zero states of work: the start state is the halt state.
pub fn identity(alphabet: &Alphabet) -> Machine {
    let mut b = MachineBuilder::new(alphabet);
    b.start("halt").halt("halt");
    b.build().expect("identity")
}

pub fn never_halt(alphabet: &Alphabet) -> Machine {
    let mut b = MachineBuilder::new(alphabet);
    b.start("spin").halt("halt").pass_any("spin", S, "spin");
    b.build().expect("never_halt")
}

/// Moves right `k` times, then halts.
pub fn right_mover(alphabet: &Alphabet, k: usize) -> Machine {
    let mut b = MachineBuilder::new(alphabet);
    b.start("r0").halt(&format!("r{k}"));
    for i in 0..k {
        b.pass_any(&format!("r{i}"), R, &format!("r{}", i + 1));
    }
    b.build().expect("right_mover")
}

/// Writes `1` under the head and halts: says "yes" to everything.
pub fn always_yes(alphabet: &Alphabet) -> Machine {
    let mut b = MachineBuilder::new(alphabet);
    b.start("s").halt("halt").write_any("s", '1', S, "halt");
    b.build().expect("always_yes")
}

/// `1ⁿ⁺¹0$ ↦ 1ⁿ⁺²0$`; never visits a cell left of the start.
pub fn unary_successor() -> Machine {
    let mut b = sigma4();
    b.start("mark");
    b.rule("mark", '1', '_', R, "ones");
    b.pass("ones", '1', R, "ones");
    b.rule("ones", '0', '1', R, "zero");
    b.rule("zero", '$', '0', R, "end");
    b.rule("end", '_', '$', L, "back");
    b.pass_each("back", "01$", L, "back");
    b.rule("back", '_', '1', S, "halt");
    b.build().expect("unary_successor")
}

pub fn unary_add_two() -> Machine {
    compose(&unary_successor(), &unary_successor()).expect("same alphabet")
}

/// Successor on least-significant-bit-first binary words, `0$` for zero.
pub fn binary_marked_successor() -> Machine {
    let mut b = sigma4();
    b.start("s");
    b.rule("s", '0', '1', S, "halt");
    b.rule("s", '1', '_', R, "carry");
    b.rule("carry", '1', '0', R, "carry");
    b.rule("carry", '0', '1', L, "back");
    b.rule("carry", '$', '1', R, "grow");
    b.rule("grow", '_', '$', L, "back");
    b.pass_each("back", "01$", L, "back");
    b.rule("back", '_', '0', S, "halt");
    b.build().expect("binary_marked_successor")
}

/// Equality on the two-sided unary pair code over {0,1}: `n+1` ones from
/// cell 0 rightward, `m+1` ones from cell −1 leftward. Answers `^1` or the
/// blank tape.
///
/// Cells 0 and −1 are cleared first, leaving a two-cell gap; then the outer
/// ends of the two runs are erased alternately until one side runs out.
pub fn unary_pair_comparator() -> Machine {
    let mut b = MachineBuilder::new(&Alphabet::binary());
    b.start("c0").halt("halt");
    b.rule("c0", '1', '0', L, "c1");
    b.rule("c1", '1', '0', R, "home");
    b.pass("home", '0', R, "probeR");
    // right run: cells 1..
    b.pass("probeR", '1', R, "toEndR");
    b.pass("toEndR", '1', R, "toEndR");
    b.pass("toEndR", '0', L, "cutR");
    b.rule("cutR", '1', '0', L, "backR");
    b.pass("backR", '1', L, "backR");
    b.pass("backR", '0', L, "gapL");
    b.pass("gapL", '0', L, "probeL");
    // left run: cells -2..
    b.pass("probeL", '1', L, "toEndL");
    b.pass("toEndL", '1', L, "toEndL");
    b.pass("toEndL", '0', R, "cutL");
    b.rule("cutL", '1', '0', R, "backL");
    b.pass("backL", '1', R, "backL");
    b.pass("backL", '0', R, "home");
    // the left run ran out first: clear what is left on the right
    b.pass("probeL", '0', R, "lx1");
    b.pass("lx1", '0', R, "lx2");
    b.pass("lx2", '0', R, "clrR");
    b.pass("clrR", '1', R, "clrR");
    b.pass("clrR", '0', L, "eraseR");
    b.rule("eraseR", '1', '0', L, "eraseR");
    b.pass("eraseR", '0', S, "halt");
    // the right run ran out: equal iff the left one is empty too
    b.pass("probeR", '0', L, "rx1");
    b.pass("rx1", '0', L, "rx2");
    b.pass("rx2", '0', L, "rx3");
    b.pass("rx3", '0', R, "yes1");
    b.pass("yes1", '0', R, "yes2");
    b.rule("yes2", '0', '1', S, "halt");
    b.pass("rx3", '1', L, "clrL");
    b.pass("clrL", '1', L, "clrL");
    b.pass("clrL", '0', R, "eraseL");
    b.rule("eraseL", '1', '0', R, "eraseL");
    b.pass("eraseL", '0', R, "halt");
    b.build().expect("unary_pair_comparator")
}

/// A plausible but wrong comparator for the two-sided binary pair code: it
/// compares and erases the first `window` digit pairs (cell `i` against
/// cell `−1−i`) and then answers. Correct whenever both numbers are below
/// `2^window`.
pub fn naive_binary_comparator(window: usize) -> Machine {
    assert!(window >= 1);
    let mut b = MachineBuilder::new(&Alphabet::binary());
    b.start("r0.1").halt("halt");
    // walks `n` cells in direction `mv`, then continues in `to`
    fn walk(b: &mut MachineBuilder, from: &str, n: usize, mv: Move, to: &str) {
        let mut cur = from.to_string();
        for k in 1..n {
            let next = format!("{from}~{k}");
            b.pass_any(&cur, mv, &next);
            cur = next;
        }
        b.pass_any(&cur, mv, to);
    }
    for i in 0..window {
        for ok in [true, false] {
            let flag = if ok { 1 } else { 0 };
            let here = format!("r{i}.{flag}");
            for bit in ['0', '1'] {
                let cmp = format!("c{i}.{bit}.{flag}");
                if i == 0 {
                    b.rule(&here, bit, '0', L, &cmp);
                } else {
                    let gl = format!("gl{i}.{bit}.{flag}");
                    b.rule(&here, bit, '0', L, &gl);
                    walk(&mut b, &gl, 2 * i, L, &cmp);
                }
                for other in ['0', '1'] {
                    let still = ok && other == bit;
                    let f2 = if still { 1 } else { 0 };
                    let after = if i + 1 < window {
                        format!("r{}.{f2}", i + 1)
                    } else {
                        format!("answer.{f2}")
                    };
                    let gr = format!("gr{i}.{f2}");
                    b.rule(&cmp, other, '0', R, &gr);
                    let dist = if i + 1 < window { 2 * i + 1 } else { i };
                    if dist > 0 {
                        walk(&mut b, &gr, dist, R, &after);
                    } else {
                        b.pass_any(&gr, S, &after);
                    }
                }
            }
        }
    }
    b.write_any("answer.1", '1', S, "halt");
    b.write_any("answer.0", '0', S, "halt");
    b.build().expect("naive_binary_comparator")
}

/// The two-quintuple flag probe for `⟨ρc(n), ρc(f)⟩`: two steps left from
/// the origin puts the head on the second digit of the flag block, which
/// is `1` iff `f = 1`. The answer is the symbol under the head.
pub fn flag_probe() -> Machine {
    let mut b = sigma4();
    b.start("q0");
    b.pass("q0", '1', L, "q1");
    b.pass("q1", '1', L, "halt");
    b.build().expect("flag_probe")
}

/// Writes `word$` leftward from cell −1 (so a single block becomes a pair
/// with `word` as its second component) and returns to cell 0.
pub fn left_block_writer(word: &str) -> Machine {
    let mut b = sigma4();
    b.start("go");
    b.pass_any("go", L, "w0");
    let cells: Vec<char> = word.chars().chain(['$']).collect();
    let n = cells.len();
    // h{j} stands on cell -j
    let h = |j: usize| if j == 0 { "halt".to_string() } else { format!("h{j}") };
    for (i, c) in cells.iter().enumerate() {
        if i + 1 < n {
            b.write_any(&format!("w{i}"), *c, L, &format!("w{}", i + 1));
        } else {
            b.write_any(&format!("w{i}"), *c, R, &h(n - 1));
        }
    }
    for j in 1..n {
        b.pass_any(&h(j), R, &h(j - 1));
    }
    b.build().expect("left_block_writer")
}

/// Accepts (halts with `^1`) exactly the words `1²ᵏ⁺¹0$`, i.e. the unary
/// codes of even numbers; spins forever on every other word.
pub fn unary_evens_acceptor() -> Machine {
    let mut b = sigma4();
    b.start("s");
    b.pass_any("spin", S, "spin");
    b.rule("s", '1', '$', R, "even");
    b.pass_each("s", "0_", S, "spin");
    b.pass("s", '$', S, "spin");
    b.rule("even", '1', '_', R, "odd");
    b.rule("odd", '1', '_', R, "even");
    b.rule("even", '0', '_', R, "fin");
    b.pass_each("even", "$_", S, "spin");
    b.pass_each("odd", "0$_", S, "spin");
    b.rule("fin", '$', '_', L, "back");
    b.pass_each("fin", "01_", S, "spin");
    b.pass("back", '_', L, "back");
    b.rule("back", '$', '1', S, "halt");
    b.build().expect("unary_evens_acceptor")
}

/// Enumerates `{1w$}` in the order `1$, 10$, 11$, 100$, …` — the binary
/// numerals of 1, 2, 3, … with the most significant digit first.
pub fn starts_with_one_enumerator() -> Machine {
    let mut b = sigma4();
    b.start("s");
    b.rule("s", '1', '_', R, "right");
    b.pass_each("right", "01", R, "right");
    b.pass("right", '$', L, "carry");
    b.rule("carry", '1', '0', L, "carry");
    b.rule("carry", '0', '1', L, "back");
    b.pass_each("back", "01", L, "back");
    b.rule("back", '_', '1', S, "halt");
    // every digit was 1: 1 followed by zeros, one digit longer
    b.rule("carry", '_', '1', R, "grow");
    b.pass("grow", '0', R, "grow");
    b.rule("grow", '$', '0', R, "term");
    b.rule("term", '_', '$', L, "home");
    b.pass("home", '0', L, "home");
    b.pass("home", '1', S, "halt");
    b.build().expect("starts_with_one_enumerator")
}

/// Accepts exactly the words starting with `1`.
pub fn starts_with_one_acceptor() -> Machine {
    let mut b = sigma4();
    b.start("s");
    b.pass_any("spin", S, "spin");
    b.rule("s", '1', '$', R, "erase");
    b.pass_each("s", "0$_", S, "spin");
    b.rule("erase", '0', '_', R, "erase");
    b.rule("erase", '1', '_', R, "erase");
    b.rule("erase", '$', '_', L, "back");
    b.pass("erase", '_', S, "spin");
    b.pass("back", '_', L, "back");
    b.rule("back", '$', '1', S, "halt");
    b.build().expect("starts_with_one_acceptor")
}

/// Accepts exactly the one-block word `1$`.
pub fn singleton_acceptor() -> Machine {
    let yes = crate::machine::Conventions::sigma4().yes_tape;
    machine_lookup(&[(vec![true], yes)], &LookupDefault::Diverge)
}

/// Every stock machine under the file name it ships as in `data/machines`.
pub fn catalog() -> Vec<(&'static str, Machine)> {
    let (s4, bin) = (Alphabet::sigma4(), Alphabet::binary());
    vec![
        ("identity", identity(&s4)),
        ("never_halt", never_halt(&s4)),
        ("never_halt_binary", never_halt(&bin)),
        ("always_yes_binary", always_yes(&bin)),
        ("unary_successor", unary_successor()),
        ("unary_add_two", unary_add_two()),
        ("binary_marked_successor", binary_marked_successor()),
        (
            "binary_marked_add_two",
            compose(&binary_marked_successor(), &binary_marked_successor()).expect("composable"),
        ),
        ("unary_pair_comparator", unary_pair_comparator()),
        ("naive_binary_comparator", naive_binary_comparator(8)),
        ("flag_probe", flag_probe()),
        ("proj1", machine_proj1()),
        ("proj2", machine_proj2()),
        ("unary_evens_acceptor", unary_evens_acceptor()),
        ("starts_with_one_enumerator", starts_with_one_enumerator()),
        ("starts_with_one_acceptor", starts_with_one_acceptor()),
        ("singleton_acceptor", singleton_acceptor()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{run, Conventions, RunResult};
    use crate::pairing::{component_tape, word_tape_str};
    use crate::tape::{parse_tape, Tape};

    fn rc(n: usize) -> Tape {
        word_tape_str(&format!("{}0", "1".repeat(n + 1)))
    }

    fn out(m: &Machine, t: &Tape) -> Option<Tape> {
        run(m, t, 1_000_000).halted_tape().cloned()
    }

    #[test]
    fn successors() {
        for n in 0..20 {
            assert_eq!(out(&unary_successor(), &rc(n)), Some(rc(n + 1)));
            assert_eq!(out(&unary_add_two(), &rc(n)), Some(rc(n + 2)));
        }
        let bm = |n: u64| {
            let mut w = String::new();
            let mut k = n;
            loop {
                w.push(if k & 1 == 1 { '1' } else { '0' });
                k >>= 1;
                if k == 0 {
                    break;
                }
            }
            word_tape_str(&w)
        };
        for n in 0..300 {
            assert_eq!(out(&binary_marked_successor(), &bm(n)), Some(bm(n + 1)), "{n}");
        }
    }

    fn unary_pair(n: usize, m: usize) -> Tape {
        let lit = format!("{}^{}", "1".repeat(m + 1), "1".repeat(n + 1));
        parse_tape(&lit, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn unary_comparator_small() {
        let c = Conventions::binary();
        let m = unary_pair_comparator();
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(out(&m, &unary_pair(x, y)), Some(c.answer(x == y)), "{x} {y}");
            }
        }
    }

    #[test]
    fn naive_comparator_inside_window() {
        let c = Conventions::binary();
        let m = naive_binary_comparator(3);
        let enc = |n: u32, k: u32| {
            let mut t = Tape::blank(&Alphabet::binary());
            for i in 0..3 {
                t = t.with(i, ((n >> i) & 1) as u8).with(-1 - i, ((k >> i) & 1) as u8);
            }
            t
        };
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(out(&m, &enc(x, y)), Some(c.answer(x == y)), "{x} {y}");
            }
        }
    }

    #[test]
    fn flag_probe_reads_second_block() {
        for f in 0..2 {
            let t = component_tape(&[vec![true, true, false], {
                let mut w = vec![true; f + 1];
                w.push(false);
                w
            }]);
            let RunResult::Halted { tape, steps, .. } = run(&flag_probe(), &t, 10) else {
                panic!()
            };
            assert_eq!(steps, 2);
            assert_eq!(tape.read(), f as u8 + 1, "symbol 1 or 0 in Σ₄");
        }
    }

    #[test]
    fn left_block() {
        let m = left_block_writer("110");
        let want = component_tape(&[vec![true, false], vec![true, true, false]]);
        assert_eq!(out(&m, &rc(0)), Some(want));
    }

    #[test]
    fn enumerator_and_acceptors() {
        let mut t = word_tape_str("1");
        let mut seen = vec![];
        for _ in 0..9 {
            seen.push(t.to_string());
            t = out(&starts_with_one_enumerator(), &t).unwrap();
        }
        assert_eq!(seen[..5], ["^1$", "^10$", "^11$", "^100$", "^101$"]);
        let yes = Conventions::sigma4().yes_tape;
        for n in 0..12 {
            let r = run(&unary_evens_acceptor(), &rc(n), 1000);
            assert_eq!(r.halted_tape() == Some(&yes), n % 2 == 0, "{n}");
        }
        for w in ["1", "10", "0", "", "011"] {
            let r = run(&starts_with_one_acceptor(), &word_tape_str(w), 1000);
            assert_eq!(r.halted_tape() == Some(&yes), w.starts_with('1'));
        }
    }
}
