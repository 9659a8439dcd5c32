//! Machine numbering.
//!
//! A canonical machine is serialised to a bit string and bit strings are
//! numbered by bijective base 2 (`n` ↔ binary of `n + 1` without its
//! leading 1), i.e. length-then-lexicographic order.
//!
//! Layout, with `N` states, `w = ⌈log₂ N⌉` bits per state id and
//! `v = ⌈log₂ |Σ|⌉` bits per symbol:
//!
//! ```text
//! gamma(N) · halt bit × N · oracle bit [· query · yes · no]
//!          · for every ordinary state, for every symbol:
//!              0                       (no quintuple)
//!            | 1 · write · move · next (move: 00 L, 01 R, 10 S)
//! ```
//!
//! State 0 is the start state. Strings that do not parse exactly decode to
//! [`fallback_machine`].

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{run, Machine, Move, OraclePorts, Quintuple, RunResult};
use crate::tape::{tape_of_index, Alphabet, Symbol, Tape};

fn width(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

fn push_bits(out: &mut Vec<bool>, value: usize, w: usize) {
    for i in (0..w).rev() {
        out.push((value >> i) & 1 == 1);
    }
}

pub fn bits_of_number(n: &BigUint) -> Vec<bool> {
    let m = n + 1u32;
    let len = m.bits() as usize;
    (0..len - 1).rev().map(|i| m.bit(i as u64)).collect()
}

pub fn number_of_bits(bits: &[bool]) -> BigUint {
    let mut m = BigUint::one();
    for &b in bits {
        m <<= 1;
        if b {
            m += 1u32;
        }
    }
    m - 1u32
}

/// Serialises `canonicalize(m)`.
pub fn encode_bits(m: &Machine) -> Vec<bool> {
    let m = m.canonicalize();
    let n = m.num_states();
    let a = m.alphabet().len();
    let (ws, wy) = (width(n), width(a));
    let mut out = Vec::new();
    let len = (usize::BITS - n.leading_zeros()) as usize;
    out.extend(std::iter::repeat_n(false, len - 1));
    push_bits(&mut out, n, len);
    out.extend((0..n).map(|s| m.is_halt(s)));
    match m.oracle() {
        None => out.push(false),
        Some(p) => {
            out.push(true);
            for s in [p.query, p.yes, p.no] {
                push_bits(&mut out, s, ws);
            }
        }
    }
    for s in 0..n {
        if m.is_halt(s) || m.is_query(s) {
            continue;
        }
        for sym in 0..a {
            match m.quintuple(s, sym as Symbol) {
                None => out.push(false),
                Some(q) => {
                    out.push(true);
                    push_bits(&mut out, q.write as usize, wy);
                    push_bits(
                        &mut out,
                        match q.mv {
                            Move::L => 0,
                            Move::R => 1,
                            Move::S => 2,
                        },
                        2,
                    );
                    push_bits(&mut out, q.next, ws);
                }
            }
        }
    }
    out
}

struct Reader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl Reader<'_> {
    fn bit(&mut self) -> Option<bool> {
        let b = *self.bits.get(self.pos)?;
        self.pos += 1;
        Some(b)
    }

    fn take(&mut self, w: usize) -> Option<usize> {
        let mut v = 0usize;
        for _ in 0..w {
            v = (v << 1) | self.bit()? as usize;
        }
        Some(v)
    }
}

/// Exact parse of a bit string; `None` if it is not a well-formed
/// serialisation. The result is canonicalised.
pub fn decode_bits(bits: &[bool], alphabet: &Alphabet) -> Option<Machine> {
    let mut r = Reader { bits, pos: 0 };
    let mut zeros = 0usize;
    while !r.bit()? {
        zeros += 1;
        if zeros > 32 {
            return None;
        }
    }
    let n = (1usize << zeros) | r.take(zeros)?;
    if n > bits.len() {
        return None;
    }
    let a = alphabet.len();
    let (ws, wy) = (width(n), width(a));
    let halting: Vec<bool> = (0..n).map(|_| r.bit()).collect::<Option<_>>()?;
    let oracle = if r.bit()? {
        let q = r.take(ws)?;
        let y = r.take(ws)?;
        let no = r.take(ws)?;
        if q >= n || y >= n || no >= n || halting[q] {
            return None;
        }
        Some(OraclePorts { query: q, yes: y, no })
    } else {
        None
    };
    let mut table = vec![None; n * a];
    for s in 0..n {
        if halting[s] || oracle.is_some_and(|p| p.query == s) {
            continue;
        }
        for sym in 0..a {
            if !r.bit()? {
                continue;
            }
            let write = r.take(wy)?;
            let mv = match r.take(2)? {
                0 => Move::L,
                1 => Move::R,
                2 => Move::S,
                _ => return None,
            };
            let next = r.take(ws)?;
            if write >= a || next >= n {
                return None;
            }
            table[s * a + sym] = Some(Quintuple {
                write: write as Symbol,
                mv,
                next,
            });
        }
    }
    if r.pos != bits.len() {
        return None;
    }
    let names = (0..n).map(|i| format!("q{i}")).collect();
    Some(Machine::from_parts(alphabet.clone(), names, 0, halting, table, oracle).canonicalize())
}

/// The machine every malformed number decodes to: one state, which is both
/// start and halt, so it computes the identity in zero steps.
pub fn fallback_machine(alphabet: &Alphabet) -> Machine {
    Machine::from_parts(
        alphabet.clone(),
        vec!["q0".into()],
        0,
        vec![true],
        vec![None; alphabet.len()],
        None,
    )
}

pub fn encode_machine(m: &Machine) -> BigUint {
    number_of_bits(&encode_bits(m))
}

/// Decodes over the default binary alphabet.
pub fn decode_machine(n: &BigUint) -> Machine {
    decode_machine_over(n, &Alphabet::binary())
}

pub fn decode_machine_over(n: &BigUint, alphabet: &Alphabet) -> Machine {
    if n.is_zero() {
        return fallback_machine(alphabet);
    }
    decode_bits(&bits_of_number(n), alphabet).unwrap_or_else(|| fallback_machine(alphabet))
}

/// `φ_e(input)`: the engine plays the universal machine. Decodes over the
/// input's alphabet.
pub fn simulate_indexed(e: &BigUint, input: &Tape, fuel: u64) -> RunResult {
    run(&decode_machine_over(e, input.alphabet()), input, fuel)
}

/// `W_{e,fuel}` restricted to the first `tape_bound` binary tapes.
pub fn halting_table(e: &BigUint, fuel: u64, tape_bound: u64) -> BTreeSet<u64> {
    let a = Alphabet::binary();
    let m = decode_machine_over(e, &a);
    (0..tape_bound)
        .filter(|&k| run(&m, &tape_of_index(k, &a), fuel).is_halted())
        .collect()
}

/// Sound under-approximation of `K = { k | φ_k(#k) halts }`.
pub fn k_approx(fuel: u64, tape_bound: u64) -> BTreeSet<u64> {
    let a = Alphabet::binary();
    (0..tape_bound)
        .filter(|&k| simulate_indexed(&BigUint::from(k), &tape_of_index(k, &a), fuel).is_halted())
        .collect()
}
