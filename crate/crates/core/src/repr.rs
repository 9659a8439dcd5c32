//! Representations: injective encodings of abstract countable sets into
//! tapes, functions between representations, and witness checks.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::machine::{bits_of_number, number_of_bits, EmptyOracle, Machine, QueryOracle, RunResult, Runner};
use crate::oracle::Oracle;
use crate::pairing::combinators::{machine_const_tape, machine_lookup, LookupDefault};
use crate::pairing::{cantor, cantor_inverse, component_tape, pair_mach, parse_component, word_tape, Block};
use crate::tape::{tape_number, tape_of_index, Alphabet, Tape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Nat(u64),
    Pair(u64, u64),
    Tape(Tape),
    /// A machine, by its number.
    Machine(u64),
    MachineTape(u64, Tape),
    Label(String),
}

impl Element {
    pub fn nat(&self) -> Option<u64> {
        match self {
            Element::Nat(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Tape(t) => write!(f, "{t}"),
            Element::Machine(e) => write!(f, "M{e}"),
            Element::MachineTape(e, t) => write!(f, "(M{e},{t})"),
            Element::Label(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("no certificate for the flag of {0}")]
    UnknownFlag(u64),
    #[error("{element} is not in the domain of {repr}")]
    NotInDomain { element: String, repr: String },
    #[error("representation {0} does not encode into single-block tapes")]
    NotSingleBlock(String),
}

#[derive(Clone)]
pub enum DomainKind {
    Naturals,
    NaturalPairs,
    Tapes(Alphabet),
    Machines,
    MachineTapePairs(Alphabet),
    FiniteSet(Vec<String>),
    /// The image of a representation, as a set of tapes.
    Image(Box<Representation>),
}

/// An abstract countable set with a fixed enumeration.
#[derive(Clone)]
pub struct AbstractDomain {
    pub kind: DomainKind,
}

impl fmt::Debug for AbstractDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.kind {
            DomainKind::Naturals => "naturals".to_string(),
            DomainKind::NaturalPairs => "pairs".to_string(),
            DomainKind::Tapes(a) => format!("tapes over {}", a.symbols_string()),
            DomainKind::Machines => "machines".to_string(),
            DomainKind::MachineTapePairs(a) => format!("machine/tape pairs over {}", a.symbols_string()),
            DomainKind::FiniteSet(l) => format!("{{{}}}", l.join(",")),
            DomainKind::Image(r) => format!("image of {}", r.name()),
        };
        f.write_str(&name)
    }
}

const IMAGE_SKIP_LIMIT: usize = 10_000;

impl AbstractDomain {
    pub fn naturals() -> Self {
        AbstractDomain { kind: DomainKind::Naturals }
    }

    pub fn pairs() -> Self {
        AbstractDomain { kind: DomainKind::NaturalPairs }
    }

    pub fn tapes(a: &Alphabet) -> Self {
        AbstractDomain { kind: DomainKind::Tapes(a.clone()) }
    }

    pub fn finite(labels: &[&str]) -> Self {
        AbstractDomain {
            kind: DomainKind::FiniteSet(labels.iter().map(|s| s.to_string()).collect()),
        }
    }

    pub fn first(&self) -> Option<Element> {
        match &self.kind {
            DomainKind::Naturals => Some(Element::Nat(0)),
            DomainKind::NaturalPairs => Some(Element::Pair(0, 0)),
            DomainKind::Tapes(a) => Some(Element::Tape(Tape::blank(a))),
            DomainKind::Machines => Some(Element::Machine(0)),
            DomainKind::MachineTapePairs(a) => Some(Element::MachineTape(0, Tape::blank(a))),
            DomainKind::FiniteSet(l) => l.first().map(|s| Element::Label(s.clone())),
            DomainKind::Image(r) => {
                let mut x = r.domain.first()?;
                for _ in 0..IMAGE_SKIP_LIMIT {
                    if let Ok(t) = r.encode(&x) {
                        return Some(Element::Tape(t));
                    }
                    x = r.domain.successor(&x)?;
                }
                None
            }
        }
    }

    /// The next element in the domain's enumeration; `None` past the end of
    /// a finite set or off the domain.
    pub fn successor(&self, x: &Element) -> Option<Element> {
        match (&self.kind, x) {
            (DomainKind::Naturals, Element::Nat(n)) => Some(Element::Nat(n + 1)),
            (DomainKind::NaturalPairs, Element::Pair(a, b)) => Some(if *a == 0 {
                Element::Pair(b + 1, 0)
            } else {
                Element::Pair(a - 1, b + 1)
            }),
            (DomainKind::Tapes(a), Element::Tape(t)) => {
                Some(Element::Tape(crate::tape::tape_of_number_in(&(tape_number(t) + 1u32), a)))
            }
            (DomainKind::Machines, Element::Machine(e)) => Some(Element::Machine(e + 1)),
            (DomainKind::MachineTapePairs(al), Element::MachineTape(e, t)) => {
                let z = cantor(&BigUint::from(*e), &tape_number(t)) + 1u32;
                let (x, y) = cantor_inverse(&z);
                Some(Element::MachineTape(x.to_u64()?, crate::tape::tape_of_number_in(&y, al)))
            }
            (DomainKind::FiniteSet(l), Element::Label(s)) => {
                let i = l.iter().position(|x| x == s)?;
                l.get(i + 1).map(|s| Element::Label(s.clone()))
            }
            (DomainKind::Image(r), Element::Tape(t)) => {
                let mut x = r.decode(t)?;
                for _ in 0..IMAGE_SKIP_LIMIT {
                    x = r.domain.successor(&x)?;
                    if let Ok(t) = r.encode(&x) {
                        return Some(Element::Tape(t));
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// The first `n` elements (fewer for small finite sets).
    pub fn take(&self, n: usize) -> Vec<Element> {
        let mut out = Vec::with_capacity(n);
        let mut cur = self.first();
        while let Some(x) = cur {
            if out.len() == n {
                break;
            }
            cur = self.successor(&x);
            out.push(x);
        }
        out
    }
}

type Encoder = Arc<dyn Fn(&Element) -> Result<Tape, ReprError> + Send + Sync>;
type Decoder = Arc<dyn Fn(&Tape) -> Option<Element> + Send + Sync>;

/// An injective map from an abstract domain into tapes, with its partial
/// inverse.
#[derive(Clone)]
pub struct Representation {
    name: String,
    pub domain: AbstractDomain,
    alphabet: Alphabet,
    enc: Encoder,
    dec: Decoder,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({} of {:?})", self.name, self.domain)
    }
}

impl Representation {
    pub fn new(
        name: &str,
        domain: AbstractDomain,
        alphabet: &Alphabet,
        enc: impl Fn(&Element) -> Result<Tape, ReprError> + Send + Sync + 'static,
        dec: impl Fn(&Tape) -> Option<Element> + Send + Sync + 'static,
    ) -> Self {
        Representation {
            name: name.to_string(),
            domain,
            alphabet: alphabet.clone(),
            enc: Arc::new(enc),
            dec: Arc::new(dec),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn encode(&self, x: &Element) -> Result<Tape, ReprError> {
        (self.enc)(x)
    }

    /// `None` off the image. Candidates produced by the raw decoder are
    /// re-encoded and compared, so this is exact.
    pub fn decode(&self, t: &Tape) -> Option<Element> {
        if t.alphabet() != &self.alphabet {
            return None;
        }
        let x = (self.dec)(t)?;
        match self.encode(&x) {
            Ok(back) if back == *t => Some(x),
            _ => None,
        }
    }

    /// Injectivity and decode∘encode on the first `n` elements whose
    /// encodings exist. Returns the first offending element.
    pub fn check_prefix(&self, n: usize) -> Result<usize, Element> {
        let mut seen: HashSet<Tape> = HashSet::new();
        let mut checked = 0;
        for x in self.domain.take(n) {
            let Ok(t) = self.encode(&x) else { continue };
            if !seen.insert(t.clone()) || self.decode(&t).as_ref() != Some(&x) {
                return Err(x);
            }
            checked += 1;
        }
        Ok(checked)
    }
}

fn nat_of(x: &Element, repr: &str) -> Result<u64, ReprError> {
    x.nat().ok_or_else(|| ReprError::NotInDomain {
        element: x.to_string(),
        repr: repr.to_string(),
    })
}

fn single_block(t: &Tape) -> Option<Block> {
    let mut b = parse_component(t)?;
    (b.len() == 1).then(|| b.remove(0))
}

pub fn unary_word(n: u64) -> Block {
    let mut w = vec![true; n as usize + 1];
    w.push(false);
    w
}

fn nat_of_unary(w: &[bool]) -> Option<u64> {
    let (last, ones) = w.split_last()?;
    (!*last && !ones.is_empty() && ones.iter().all(|&b| b)).then(|| ones.len() as u64 - 1)
}

/// `ρc(n)`: `1ⁿ⁺¹0$` over Σ₄.
pub fn rho_c(n: u64) -> Tape {
    word_tape(&unary_word(n))
}

pub fn rep_unary() -> Representation {
    Representation::new(
        "unary",
        AbstractDomain::naturals(),
        &Alphabet::sigma4(),
        |x| Ok(rho_c(nat_of(x, "unary")?)),
        |t| nat_of_unary(&single_block(t)?).map(Element::Nat),
    )
}

pub fn binary_marked_word(n: u64) -> Block {
    let mut w = vec![n & 1 == 1];
    let mut k = n >> 1;
    while k > 0 {
        w.push(k & 1 == 1);
        k >>= 1;
    }
    w
}

pub fn rep_binary_marked() -> Representation {
    Representation::new(
        "binary-marked",
        AbstractDomain::naturals(),
        &Alphabet::sigma4(),
        |x| Ok(word_tape(&binary_marked_word(nat_of(x, "binary-marked")?))),
        |t| {
            let w = single_block(t)?;
            if w.is_empty() || w.len() > 64 {
                return None;
            }
            Some(Element::Nat(
                w.iter().rev().fold(0u64, |acc, &b| (acc << 1) | b as u64),
            ))
        },
    )
}

fn pair_of(x: &Element, repr: &str) -> Result<(u64, u64), ReprError> {
    match x {
        Element::Pair(a, b) => Ok((*a, *b)),
        _ => Err(ReprError::NotInDomain {
            element: x.to_string(),
            repr: repr.to_string(),
        }),
    }
}

/// `n+1` ones rightward from the head, `m+1` ones leftward from cell −1,
/// over {0,1}.
pub fn rep_pair_unary_twosided() -> Representation {
    let a = Alphabet::binary();
    let a2 = a.clone();
    Representation::new(
        "pair-unary-2sided",
        AbstractDomain::pairs(),
        &a,
        move |x| {
            let (n, m) = pair_of(x, "pair-unary-2sided")?;
            let (n, m) = (n as i64, m as i64);
            Ok(Tape::from_window(&a2, -(m + 1), vec![1; (n + m + 2) as usize], 0))
        },
        |t| {
            let one = |p: i64| t.get(t.head() + p) == 1;
            let n = (0..).take_while(|&p| one(p)).count() as u64;
            let m = (1..).take_while(|&p| one(-p)).count() as u64;
            (n > 0 && m > 0).then(|| Element::Pair(n - 1, m - 1))
        },
    )
}

/// Binary digits of `n` at cells `0, 1, 2, …` and of `m` at cells
/// `−1, −2, …`, least significant nearest the head, no delimiters.
pub fn binary_pair_tape(n: &BigUint, m: &BigUint) -> Tape {
    let a = Alphabet::binary();
    let len_r = n.bits() as i64;
    let len_l = m.bits() as i64;
    let mut cells = Vec::with_capacity((len_r + len_l) as usize);
    for i in (0..len_l).rev() {
        cells.push(m.bit(i as u64) as u8);
    }
    for i in 0..len_r {
        cells.push(n.bit(i as u64) as u8);
    }
    Tape::from_window(&a, -len_l, cells, 0)
}

pub fn rep_pair_binary_twosided() -> Representation {
    Representation::new(
        "pair-binary-2sided",
        AbstractDomain::pairs(),
        &Alphabet::binary(),
        |x| {
            let (n, m) = pair_of(x, "pair-binary-2sided")?;
            Ok(binary_pair_tape(&n.into(), &m.into()))
        },
        |t| {
            let t = t.recentered();
            let (lo, hi) = t.support().unwrap_or((0, -1));
            if lo < -64 || hi > 63 {
                return None;
            }
            let n = (0..=hi.max(-1)).rev().fold(0u64, |acc, p| (acc << 1) | t.get(p) as u64);
            let m = (1..=(-lo).max(0)).rev().fold(0u64, |acc, p| (acc << 1) | t.get(-p) as u64);
            Some(Element::Pair(n, m))
        },
    )
}

/// `n ↦ #⁻¹(n)`: the tape numbering as a representation of ℕ.
pub fn rep_numbering(a: &Alphabet) -> Representation {
    let a2 = a.clone();
    Representation::new(
        "numbering",
        AbstractDomain::naturals(),
        a,
        move |x| Ok(tape_of_index(nat_of(x, "numbering")?, &a2)),
        |t| tape_number(t).to_u64().map(Element::Nat),
    )
}

/// `n ↦ w$` where `w` is the `n`-th word over {0,1} in length-lex order.
pub fn rep_words() -> Representation {
    Representation::new(
        "words",
        AbstractDomain::naturals(),
        &Alphabet::sigma4(),
        |x| Ok(word_tape(&bits_of_number(&nat_of(x, "words")?.into()))),
        |t| number_of_bits(&single_block(t)?).to_u64().map(Element::Nat),
    )
}

/// Single-block codes for a finite set; `codes[i]` encodes `labels[i]`.
pub fn rep_finite(name: &str, labels: &[&str], codes: &[&str]) -> Representation {
    assert_eq!(labels.len(), codes.len());
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let codes: Vec<Block> = codes.iter().map(|c| c.chars().map(|ch| ch == '1').collect()).collect();
    let (l2, c2) = (labels.clone(), codes.clone());
    let rname = name.to_string();
    Representation::new(
        name,
        AbstractDomain {
            kind: DomainKind::FiniteSet(labels.clone()),
        },
        &Alphabet::sigma4(),
        move |x| match x {
            Element::Label(s) => match l2.iter().position(|l| l == s) {
                Some(i) => Ok(word_tape(&c2[i])),
                None => Err(ReprError::NotInDomain {
                    element: s.clone(),
                    repr: rname.clone(),
                }),
            },
            other => Err(ReprError::NotInDomain {
                element: other.to_string(),
                repr: rname.clone(),
            }),
        },
        move |t| {
            let w = single_block(t)?;
            codes.iter().position(|c| *c == w).map(|i| Element::Label(labels[i].clone()))
        },
    )
}

/// Tapes represented by themselves.
pub fn rep_identity_tapes(a: &Alphabet) -> Representation {
    Representation::new(
        "tapes",
        AbstractDomain::tapes(a),
        a,
        |x| match x {
            Element::Tape(t) => Ok(t.recentered()),
            other => Err(ReprError::NotInDomain {
                element: other.to_string(),
                repr: "tapes".into(),
            }),
        },
        |t| Some(Element::Tape(t.clone())),
    )
}

/// The diagonal flag `χ(n)` from a certified oracle, queried on the
/// numbering tape of `n` over {0,1}.
pub fn certified_flag(oracle: &Oracle, n: u64) -> Result<bool, ReprError> {
    match oracle.query(&tape_of_index(n, &Alphabet::binary())).answer {
        crate::machine::Answer::Yes => Ok(true),
        crate::machine::Answer::No => Ok(false),
        crate::machine::Answer::Unknown => Err(ReprError::UnknownFlag(n)),
    }
}

/// `n ↦ ⟨ρc(n), ρc(χ(n))⟩`, where `χ(n)` records whether machine `n` halts
/// on its own number. Flags come only from the oracle's certificates.
pub fn rep_halting_augmented(flag_oracle: Arc<Oracle>) -> Representation {
    Representation::new(
        "halting-augmented",
        AbstractDomain::naturals(),
        &Alphabet::sigma4(),
        move |x| {
            let n = nat_of(x, "halting-augmented")?;
            let f = certified_flag(&flag_oracle, n)?;
            Ok(pair_mach(&rho_c(n), &rho_c(f as u64)).expect("single blocks"))
        },
        |t| {
            let b = parse_component(t)?;
            (b.len() == 2).then(|| nat_of_unary(&b[0]).map(Element::Nat))?
        },
    )
}

/// `u^(k)(n) = ⟨ρc(χ^(k)(n)), …, ρc(χ′(n)), ρc(n)⟩`, nested to the right;
/// `chain[j]` certifies level `j + 1`.
pub fn rep_u_k(k: usize, chain: Vec<Arc<Oracle>>) -> Representation {
    assert!(k <= 2, "levels above 2 are not supported");
    assert!(chain.len() >= k, "need an oracle for each level");
    let name = format!("u{k}");
    let rname = name.clone();
    Representation::new(
        &name,
        AbstractDomain::naturals(),
        &Alphabet::sigma4(),
        move |x| {
            let n = nat_of(x, &rname)?;
            let mut blocks = Vec::with_capacity(k + 1);
            for j in (0..k).rev() {
                blocks.push(unary_word(certified_flag(&chain[j], n)? as u64));
            }
            blocks.push(unary_word(n));
            Ok(component_tape(&blocks))
        },
        move |t| {
            let b = parse_component(t)?;
            (b.len() == k + 1).then(|| nat_of_unary(&b[k]).map(Element::Nat))?
        },
    )
}

pub type AbstractFn = Arc<dyn Fn(&Element) -> Option<Element> + Send + Sync>;

pub fn function(f: impl Fn(&Element) -> Option<Element> + Send + Sync + 'static) -> AbstractFn {
    Arc::new(f)
}

pub fn nat_function(f: impl Fn(u64) -> Option<u64> + Send + Sync + 'static) -> AbstractFn {
    Arc::new(move |x| x.nat().and_then(&f).map(Element::Nat))
}

/// `f_ab = ρb ∘ f ∘ ρa⁻¹`, defined exactly on `ρa`'s image (and where `f`
/// and `ρb` are defined).
pub fn represent_function(
    f: AbstractFn,
    ra: &Representation,
    rb: &Representation,
) -> impl Fn(&Tape) -> Option<Tape> {
    let (ra, rb) = (ra.clone(), rb.clone());
    move |t| rb.encode(&f(&ra.decode(t)?)?).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessVerdict {
    /// `skipped` counts sampled elements where the function or one of the
    /// encodings is undefined (e.g. an uncertified flag).
    Verified { samples: usize, skipped: usize },
    Refuted {
        element: Element,
        input: Tape,
        expected: Tape,
        actual: RunResult,
        fuel: u64,
    },
    Inconclusive { element: Element, fuel: u64 },
}

impl WitnessVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, WitnessVerdict::Verified { .. })
    }

    /// Re-simulates a refutation and checks it reproduces.
    pub fn replay(&self, m: &Machine, oracle: &dyn QueryOracle) -> bool {
        match self {
            WitnessVerdict::Refuted {
                input,
                expected,
                actual,
                fuel,
                ..
            } => {
                let again = Runner::new(m, input).run_to(*fuel, oracle);
                again == *actual && again.halted_tape() != Some(expected)
            }
            _ => true,
        }
    }
}

impl fmt::Display for WitnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessVerdict::Verified { samples, skipped } => {
                write!(f, "verified on {samples} samples")?;
                if *skipped > 0 {
                    write!(f, " ({skipped} skipped)")?;
                }
                Ok(())
            }
            WitnessVerdict::Refuted {
                element,
                expected,
                actual,
                ..
            } => {
                let got = match actual {
                    RunResult::Halted { tape, .. } => tape.to_string(),
                    RunResult::Exhausted { .. } => "no halt".into(),
                    RunResult::OracleUnknown { .. } => "unknown".into(),
                };
                write!(f, "refuted at {element}: expected {expected}, got {got}")
            }
            WitnessVerdict::Inconclusive { element, fuel } => {
                write!(f, "inconclusive at {element} (fuel {fuel})")
            }
        }
    }
}

/// `check_witness` with an oracle for the witness's queries. An unanswered
/// query makes the verdict inconclusive, never a refutation.
pub fn check_witness_with(
    m: &Machine,
    f: &AbstractFn,
    ra: &Representation,
    rb: &Representation,
    sample_count: usize,
    fuel: u64,
    oracle: &dyn QueryOracle,
) -> WitnessVerdict {
    check_witness_on(m, f, ra, rb, ra.domain.take(sample_count), fuel, oracle)
}

/// The same check on an explicit list of elements.
pub fn check_witness_on(
    m: &Machine,
    f: &AbstractFn,
    ra: &Representation,
    rb: &Representation,
    elements: impl IntoIterator<Item = Element>,
    fuel: u64,
    oracle: &dyn QueryOracle,
) -> WitnessVerdict {
    let mut skipped = 0;
    let mut checked = 0;
    for x in elements {
        let (Ok(input), Some(y)) = (ra.encode(&x), f(&x)) else {
            skipped += 1;
            continue;
        };
        let Ok(expected) = rb.encode(&y) else {
            skipped += 1;
            continue;
        };
        if m.alphabet() != input.alphabet() {
            return WitnessVerdict::Refuted {
                element: x,
                input,
                expected,
                actual: RunResult::Exhausted { fuel: 0 },
                fuel: 0,
            };
        }
        let actual = Runner::new(m, &input).run_to(fuel, oracle);
        match &actual {
            RunResult::Halted { tape, .. } if *tape == expected => checked += 1,
            RunResult::Halted { .. } => {
                return WitnessVerdict::Refuted {
                    element: x,
                    input,
                    expected,
                    actual,
                    fuel,
                }
            }
            _ => return WitnessVerdict::Inconclusive { element: x, fuel },
        }
    }
    WitnessVerdict::Verified {
        samples: checked,
        skipped,
    }
}

/// Does `m` compute `f` from `ra` to `rb` on the first `sample_count`
/// elements of `ra`'s domain?
pub fn check_witness(
    m: &Machine,
    f: &AbstractFn,
    ra: &Representation,
    rb: &Representation,
    sample_count: usize,
    fuel: u64,
) -> WitnessVerdict {
    check_witness_with(m, f, ra, rb, sample_count, fuel, &EmptyOracle)
}

fn single_block_encoding(ra: &Representation, x: &Element) -> Result<Block, ReprError> {
    let t = ra.encode(x)?;
    single_block(&t).ok_or_else(|| ReprError::NotSingleBlock(ra.name().to_string()))
}

/// A machine computing the constant `x` in `ra`: it erases its
/// single-block input and writes `ρa(x)`.
pub fn build_constant_machine(ra: &Representation, x: &Element) -> Result<Machine, ReprError> {
    let t = ra.encode(x)?;
    if single_block(&t).is_none() {
        return Err(ReprError::NotSingleBlock(ra.name().to_string()));
    }
    Ok(machine_const_tape(&t))
}

/// A machine computing a function on a finite set given by a table, as one
/// trie walk over the input code.
pub fn build_finite_function_machine(
    ra: &Representation,
    table: &[(Element, Element)],
) -> Result<Machine, ReprError> {
    let entries = table
        .iter()
        .map(|(x, y)| Ok((single_block_encoding(ra, x)?, ra.encode(y)?)))
        .collect::<Result<Vec<_>, ReprError>>()?;
    Ok(machine_lookup(&entries, &LookupDefault::Diverge))
}

/// `ρa(n)` for a representation of ℕ.
pub fn nat_tape(ra: &Representation, n: u64) -> Tape {
    ra.encode(&Element::Nat(n)).expect("total on naturals")
}

/// Looks a representation up by its registry name. `halting-augmented`,
/// `u1` and `u2` need the oracle chain (levels 1 and 2).
pub fn by_name(name: &str, chain: &[Arc<Oracle>]) -> Option<Representation> {
    Some(match name {
        "unary" => rep_unary(),
        "binary-marked" => rep_binary_marked(),
        "pair-unary-2sided" => rep_pair_unary_twosided(),
        "pair-binary-2sided" => rep_pair_binary_twosided(),
        "numbering" => rep_numbering(&Alphabet::binary()),
        "words" => rep_words(),
        "halting-augmented" => rep_halting_augmented(chain.first()?.clone()),
        "u0" => rep_u_k(0, vec![]),
        "u1" => rep_u_k(1, chain.get(..1)?.to_vec()),
        "u2" => rep_u_k(2, chain.get(..2)?.to_vec()),
        _ => return None,
    })
}

pub const REGISTRY: &[&str] = &[
    "unary",
    "binary-marked",
    "pair-unary-2sided",
    "pair-binary-2sided",
    "numbering",
    "words",
    "halting-augmented",
    "u1",
    "u2",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::{identity, unary_successor};
    use crate::pairing::spec;

    #[test]
    fn concrete_encodings() {
        let u = rep_unary();
        assert_eq!(u.encode(&Element::Nat(0)).unwrap().to_string(), "^10$");
        assert_eq!(u.encode(&Element::Nat(3)).unwrap().to_string(), "^11110$");
        let b = rep_binary_marked();
        assert_eq!(b.encode(&Element::Nat(0)).unwrap().to_string(), "^0$");
        assert_eq!(b.encode(&Element::Nat(5)).unwrap().to_string(), "^101$");
        let p = rep_pair_unary_twosided();
        assert_eq!(p.encode(&Element::Pair(2, 0)).unwrap().to_string(), "1^111");
        let q = rep_pair_binary_twosided();
        assert_eq!(q.encode(&Element::Pair(5, 5)).unwrap().to_string(), "101^101");
    }

    #[test]
    fn prefixes_are_injective_and_invertible() {
        for r in [
            rep_unary(),
            rep_binary_marked(),
            rep_pair_unary_twosided(),
            rep_pair_binary_twosided(),
            rep_numbering(&Alphabet::binary()),
            rep_words(),
        ] {
            assert_eq!(r.check_prefix(1000), Ok(1000), "{}", r.name());
        }
    }

    #[test]
    fn decode_is_partial() {
        let u = rep_unary();
        let s4 = |s: &str| crate::tape::parse_tape(s, &Alphabet::sigma4()).unwrap();
        assert_eq!(u.decode(&s4("^110$")), Some(Element::Nat(1)));
        for bad in ["^0$", "^1$", "^101$", "^110", "1^10$", "^$"] {
            assert_eq!(u.decode(&s4(bad)), None, "{bad}");
        }
    }

    #[test]
    fn pair_enumeration_is_cantor_order() {
        let d = AbstractDomain::pairs();
        let v = d.take(6);
        assert_eq!(
            v,
            [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)].map(|(a, b)| Element::Pair(a, b))
        );
    }

    #[test]
    fn witnesses() {
        let u = rep_unary();
        let id = nat_function(Some);
        let succ = nat_function(|n| Some(n + 1));
        let plus2 = nat_function(|n| Some(n + 2));
        let a = Alphabet::sigma4();
        assert!(check_witness(&identity(&a), &id, &u, &u, 50, 10).is_verified());
        assert!(check_witness(&unary_successor(), &succ, &u, &u, 200, 10_000).is_verified());
        let v = check_witness(&unary_successor(), &plus2, &u, &u, 200, 10_000);
        match &v {
            WitnessVerdict::Refuted { element, .. } => assert_eq!(*element, Element::Nat(0)),
            other => panic!("{other:?}"),
        }
        assert!(v.replay(&unary_successor(), &EmptyOracle));
    }

    #[test]
    fn function_representation() {
        let double = nat_function(|n| Some(2 * n));
        let f = represent_function(double, &rep_unary(), &rep_binary_marked());
        assert_eq!(f(&rho_c(1)).unwrap().to_string(), "^01$");
        assert_eq!(f(&word_tape(&[true])), None);
    }

    #[test]
    fn constants_and_finite_functions() {
        let u = rep_unary();
        let b = rep_binary_marked();
        let c0 = build_constant_machine(&u, &Element::Nat(0)).unwrap();
        assert!(check_witness(&c0, &nat_function(|_| Some(0)), &u, &u, 30, 100_000).is_verified());
        let c5 = build_constant_machine(&b, &Element::Nat(5)).unwrap();
        assert!(check_witness(&c5, &nat_function(|_| Some(5)), &b, &b, 100, 100_000).is_verified());
        let c6 = crate::machine::compose(&build_constant_machine(&u, &Element::Nat(5)).unwrap(), &unary_successor()).unwrap();
        assert!(check_witness(&c6, &nat_function(|_| Some(6)), &u, &u, 30, 100_000).is_verified());

        let r = rep_finite("ab", &["a", "b"], &["", "01"]);
        let table = [
            (Element::Label("a".into()), Element::Label("b".into())),
            (Element::Label("b".into()), Element::Label("a".into())),
        ];
        let m = build_finite_function_machine(&r, &table).unwrap();
        let f = function(move |x| table.iter().find(|(k, _)| k == x).map(|(_, v)| v.clone()));
        assert!(check_witness(&m, &f, &r, &r, 10, 10_000).is_verified());
    }

    #[test]
    fn unary_pair_matches_meta_pairing_layout() {
        // the Σ₄ pair of two unary codes is what the meta spec expects
        let t = pair_mach(&rho_c(2), &rho_c(5)).unwrap();
        assert_eq!(spec::proj1(&t), Some(rho_c(2)));
        assert_eq!(spec::proj2(&t), Some(rho_c(5)));
    }
}
