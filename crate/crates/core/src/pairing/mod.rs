//! Pairing of tapes.
//!
//! Two schemes live here:
//!
//! * the *meta* pairing `⟨a,b⟩ = #⁻¹(cantor(#a, #b))`, a bijection used by
//!   numbering-based algorithms;
//! * the *machine-level* pairing over Σ₄ = {_,0,1,$}, which machines can
//!   actually take apart because every part is `$`-terminated.
//!
//! Machine-level values are *component tapes*: a non-empty list of blocks,
//! each a word over {0,1}. Block 0 is written rightward from the head and
//! terminated by `$`; the remaining blocks are written leftward from cell
//! −1, each terminated by `$`:
//!
//! ```text
//!   blocks [u, v, w]   →   $ w' $ v' ^u $      (v', w' read right to left)
//! ```
//!
//! A one-block component `w$` is the canonical single-component form.
//! `pair_mach(a, b)` puts the single block of `a` in front of the blocks of
//! `b`, so tuples nest to the right.

pub mod combinators;

use num_bigint::BigUint;
use thiserror::Error;

use crate::machine::Conventions;
use crate::tape::{fold, tape_number, tape_of_number_in, Alphabet, Tape};

pub type Block = Vec<bool>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("tape {0} is neither a binary tape nor a component tape")]
    NotAComponent(String),
    #[error("the first component must be a single block, got {0} blocks")]
    NestedFirst(usize),
    #[error("meta pairing needs both tapes over the same alphabet")]
    AlphabetMismatch,
}

pub fn cantor(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

pub fn cantor_inverse(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

pub fn pair_meta(a: &Tape, b: &Tape) -> Result<Tape, PairError> {
    if a.alphabet() != b.alphabet() {
        return Err(PairError::AlphabetMismatch);
    }
    Ok(tape_of_number_in(&cantor(&tape_number(a), &tape_number(b)), a.alphabet()))
}

pub fn unpair_meta(t: &Tape) -> (Tape, Tape) {
    let (x, y) = cantor_inverse(&tape_number(t));
    (tape_of_number_in(&x, t.alphabet()), tape_of_number_in(&y, t.alphabet()))
}

fn sym4(c: char) -> u8 {
    Alphabet::sigma4().sym(c)
}

/// Writes a component tape with the head at 0.
pub fn component_tape(blocks: &[Block]) -> Tape {
    assert!(!blocks.is_empty(), "a component has at least one block");
    let a = Alphabet::sigma4();
    let (bit0, bit1, dollar) = (sym4('0'), sym4('1'), sym4('$'));
    let bit = |b: bool| if b { bit1 } else { bit0 };
    let mut right: Vec<u8> = blocks[0].iter().map(|&b| bit(b)).collect();
    right.push(dollar);
    // left side, listed from cell -1 outward
    let mut left: Vec<u8> = Vec::new();
    for blk in &blocks[1..] {
        left.extend(blk.iter().map(|&b| bit(b)));
        left.push(dollar);
    }
    let start = -(left.len() as i64);
    let mut cells: Vec<u8> = left.into_iter().rev().collect();
    cells.extend(right);
    Tape::from_window(&a, start, cells, 0)
}

/// The single-block component `w$`.
pub fn word_tape(word: &[bool]) -> Tape {
    component_tape(&[word.to_vec()])
}

pub fn word_tape_str(word: &str) -> Tape {
    word_tape(&word.chars().map(|c| c == '1').collect::<Vec<_>>())
}

/// Parses a Σ₄ tape (relative to its head) as a component tape.
pub fn parse_component(t: &Tape) -> Option<Vec<Block>> {
    if *t.alphabet() != Alphabet::sigma4() {
        return None;
    }
    let t = t.recentered();
    let (lo, hi) = t.support()?;
    let read = |p: i64| t.get_char(p);
    let mut blocks = Vec::new();
    let mut blk = Vec::new();
    let mut p = 0i64;
    loop {
        match read(p) {
            '0' => blk.push(false),
            '1' => blk.push(true),
            '$' => break,
            _ => return None,
        }
        p += 1;
    }
    if p != hi {
        return None;
    }
    blocks.push(std::mem::take(&mut blk));
    let mut q = -1i64;
    while q >= lo {
        match read(q) {
            '0' => blk.push(false),
            '1' => blk.push(true),
            '$' => blocks.push(std::mem::take(&mut blk)),
            _ => return None,
        }
        q -= 1;
    }
    if !blk.is_empty() {
        return None;
    }
    Some(blocks)
}

/// All words over {0,1} of length `< max_len`, shortest first.
pub fn words_up_to(max_len: usize) -> Vec<Block> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 1..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Block| {
                [false, true].map(|b| {
                    let mut w = w.clone();
                    w.push(b);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn is_component(t: &Tape) -> bool {
    parse_component(t).is_some()
}

/// Canonical single-component form of a tape.
///
/// A binary tape becomes `fold(t)` followed by `$`; a Σ₄ tape that already
/// is a component tape is returned as is (re-centred).
pub fn enc(t: &Tape) -> Result<Tape, PairError> {
    if *t.alphabet() == Alphabet::binary() {
        let w = fold(&t.recentered());
        return Ok(word_tape(&w.symbols().iter().map(|&s| s == 1).collect::<Vec<_>>()));
    }
    match parse_component(t) {
        Some(_) => Ok(t.recentered()),
        None => Err(PairError::NotAComponent(t.to_string())),
    }
}

fn blocks_of(t: &Tape) -> Result<Vec<Block>, PairError> {
    let e = enc(t)?;
    Ok(parse_component(&e).expect("enc yields components"))
}

pub fn pair_mach(a: &Tape, b: &Tape) -> Result<Tape, PairError> {
    let mut first = blocks_of(a)?;
    if first.len() != 1 {
        return Err(PairError::NestedFirst(first.len()));
    }
    first.extend(blocks_of(b)?);
    Ok(component_tape(&first))
}

/// Splits a pair into its first block and the rest; both come back as
/// component tapes. `None` off the image of [`pair_mach`].
pub fn unpair_mach(t: &Tape) -> Option<(Tape, Tape)> {
    let blocks = parse_component(t)?;
    if blocks.len() < 2 {
        return None;
    }
    Some((component_tape(&blocks[..1]), component_tape(&blocks[1..])))
}

/// Meta-level specifications of the combinator machines, on component
/// tapes. Each returns `None` off its domain.
pub mod spec {
    use super::*;

    pub fn duplicate(t: &Tape) -> Option<Tape> {
        let b = parse_component(t)?;
        (b.len() == 1).then(|| component_tape(&[b[0].clone(), b[0].clone()]))
    }

    pub fn swap(t: &Tape) -> Option<Tape> {
        let b = parse_component(t)?;
        (b.len() == 2).then(|| component_tape(&[b[1].clone(), b[0].clone()]))
    }

    pub fn proj1(t: &Tape) -> Option<Tape> {
        let b = parse_component(t)?;
        (b.len() >= 2).then(|| component_tape(&b[..1]))
    }

    pub fn proj2(t: &Tape) -> Option<Tape> {
        let b = parse_component(t)?;
        (b.len() >= 2).then(|| component_tape(&b[1..]))
    }

    pub fn eq(t: &Tape) -> Option<Tape> {
        let b = parse_component(t)?;
        (b.len() == 2).then(|| Conventions::sigma4().answer(b[0] == b[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tape::parse_tape;

    fn s4(lit: &str) -> Tape {
        parse_tape(lit, &Alphabet::sigma4()).unwrap()
    }

    #[test]
    fn cantor_small_values() {
        assert_eq!(cantor(&0u32.into(), &0u32.into()), BigUint::from(0u32));
        assert_eq!(cantor(&1u32.into(), &0u32.into()), BigUint::from(1u32));
        assert_eq!(cantor(&0u32.into(), &1u32.into()), BigUint::from(2u32));
        for z in 0u32..1000 {
            let (x, y) = cantor_inverse(&z.into());
            assert_eq!(cantor(&x, &y), BigUint::from(z));
        }
    }

    #[test]
    fn layout() {
        let blank = Tape::blank(&Alphabet::binary());
        assert_eq!(pair_mach(&blank, &blank).unwrap(), s4("$^$"));
        let rc = |n: usize| s4(&format!("^{}0$", "1".repeat(n + 1)));
        let p = pair_mach(&rc(2), &rc(0)).unwrap();
        assert_eq!(p.to_string(), "$01^1110$");
        assert_eq!(unpair_mach(&p), Some((rc(2), rc(0))));
        assert_eq!(unpair_mach(&s4("^111")), None);
        assert_eq!(unpair_mach(&rc(3)), None);
    }

    #[test]
    fn nesting_goes_right() {
        let w = |s: &str| word_tape_str(s);
        let inner = pair_mach(&w("1"), &w("0")).unwrap();
        let outer = pair_mach(&w("11"), &inner).unwrap();
        assert_eq!(
            parse_component(&outer).unwrap(),
            vec![vec![true, true], vec![true], vec![false]]
        );
        assert_eq!(pair_mach(&inner, &w("1")), Err(PairError::NestedFirst(2)));
        assert_eq!(spec::proj2(&outer), Some(inner));
    }

    #[test]
    fn binary_tapes_are_encoded_by_folding() {
        let t = parse_tape("1^01", &Alphabet::binary()).unwrap();
        assert_eq!(enc(&t).unwrap().to_string(), "^011$");
        assert!(enc(&s4("^1_1$")).is_err());
    }
}
