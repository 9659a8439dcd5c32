//! Alphabets, finite-support tapes, the tape literal format, folding of
//! two-sided tapes and the bijective numbering of all tapes.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Index of a symbol inside its [`Alphabet`].
pub type Symbol = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TapeError {
    #[error("alphabet needs at least two symbols, got {0}")]
    AlphabetTooSmall(usize),
    #[error("blank symbol {0:?} is not part of the alphabet")]
    BlankNotInAlphabet(char),
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet symbol {0:?} is reserved for the head marker")]
    ReservedSymbol(char),
    #[error("unknown symbol {symbol:?} at offset {offset}")]
    UnknownSymbol { symbol: char, offset: usize },
    #[error("tape literal must contain exactly one head marker '^', found {0}")]
    HeadMarkers(usize),
}

/// An ordered finite set of single-character symbols with one blank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Arc<[char]>,
    blank: Symbol,
}

impl Alphabet {
    pub fn new(symbols: &[char], blank: char) -> Result<Self, TapeError> {
        if symbols.len() < 2 {
            return Err(TapeError::AlphabetTooSmall(symbols.len()));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c == '^' {
                return Err(TapeError::ReservedSymbol(c));
            }
            if symbols[..i].contains(&c) {
                return Err(TapeError::DuplicateSymbol(c));
            }
        }
        let blank = symbols
            .iter()
            .position(|&c| c == blank)
            .ok_or(TapeError::BlankNotInAlphabet(blank))?;
        Ok(Alphabet {
            symbols: symbols.into(),
            blank: blank as Symbol,
        })
    }

    /// Σ = {0,1} with blank `0`.
    pub fn binary() -> Self {
        Alphabet::new(&['0', '1'], '0').unwrap()
    }

    /// Σ₄ = {_,0,1,$} with blank `_`, used by every self-delimiting encoding.
    pub fn sigma4() -> Self {
        Alphabet::new(&['_', '0', '1', '$'], '_').unwrap()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn blank(&self) -> Symbol {
        self.blank
    }

    pub fn blank_char(&self) -> char {
        self.symbols[self.blank as usize]
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn char_of(&self, s: Symbol) -> char {
        self.symbols[s as usize]
    }

    pub fn symbol(&self, c: char) -> Option<Symbol> {
        self.symbols.iter().position(|&x| x == c).map(|i| i as Symbol)
    }

    /// Like [`Alphabet::symbol`] but panics; for symbols known to exist.
    pub fn sym(&self, c: char) -> Symbol {
        self.symbol(c)
            .unwrap_or_else(|| panic!("symbol {c:?} not in alphabet {self:?}"))
    }

    pub fn symbols_string(&self) -> String {
        self.symbols.iter().collect()
    }

    /// Position of a non-blank symbol among the non-blank symbols.
    fn nonblank_rank(&self, s: Symbol) -> usize {
        debug_assert_ne!(s, self.blank);
        if s > self.blank {
            s as usize - 1
        } else {
            s as usize
        }
    }

    fn nonblank_at(&self, rank: usize) -> Symbol {
        if rank >= self.blank as usize {
            (rank + 1) as Symbol
        } else {
            rank as Symbol
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?}, blank {:?})", self.symbols_string(), self.blank_char())
    }
}

/// A two-way infinite tape with finitely many non-blank cells.
///
/// Cells are stored as a trimmed window: `cells[0]` sits at position
/// `origin`, and both ends of the window are non-blank. Storing a blank is
/// the same as storing nothing, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tape {
    alphabet: Alphabet,
    origin: i64,
    cells: Vec<Symbol>,
    head: i64,
}

impl Tape {
    pub fn blank(alphabet: &Alphabet) -> Self {
        Tape {
            alphabet: alphabet.clone(),
            origin: 0,
            cells: Vec::new(),
            head: 0,
        }
    }

    /// Builds a tape from a dense window starting at `origin`.
    pub fn from_window(alphabet: &Alphabet, origin: i64, cells: Vec<Symbol>, head: i64) -> Self {
        debug_assert!(cells.iter().all(|&s| (s as usize) < alphabet.len()));
        let mut t = Tape {
            alphabet: alphabet.clone(),
            origin,
            cells,
            head,
        };
        t.normalize();
        t
    }

    /// Writes `symbols` rightward starting at position `start`, head at 0.
    pub fn from_symbols(alphabet: &Alphabet, start: i64, symbols: &[Symbol]) -> Self {
        Tape::from_window(alphabet, start, symbols.to_vec(), 0)
    }

    /// Convenience constructor from a string of alphabet characters written
    /// rightward from position `start`. Panics on unknown characters.
    pub fn from_str_at(alphabet: &Alphabet, start: i64, text: &str) -> Self {
        let cells = text.chars().map(|c| alphabet.sym(c)).collect();
        Tape::from_window(alphabet, start, cells, 0)
    }

    fn normalize(&mut self) {
        let blank = self.alphabet.blank;
        let lead = self.cells.iter().take_while(|&&s| s == blank).count();
        if lead == self.cells.len() {
            self.cells.clear();
            self.origin = 0;
            return;
        }
        let trail = self.cells.iter().rev().take_while(|&&s| s == blank).count();
        self.cells.truncate(self.cells.len() - trail);
        if lead > 0 {
            self.cells.drain(..lead);
            self.origin += lead as i64;
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn get(&self, pos: i64) -> Symbol {
        let idx = pos - self.origin;
        if idx < 0 || idx >= self.cells.len() as i64 {
            self.alphabet.blank
        } else {
            self.cells[idx as usize]
        }
    }

    pub fn get_char(&self, pos: i64) -> char {
        self.alphabet.char_of(self.get(pos))
    }

    pub fn read(&self) -> Symbol {
        self.get(self.head)
    }

    /// Returns a copy with `sym` stored at `pos`.
    pub fn with(&self, pos: i64, sym: Symbol) -> Tape {
        let (origin, mut cells) = self.window_covering(pos, pos);
        cells[(pos - origin) as usize] = sym;
        Tape::from_window(&self.alphabet, origin, cells, self.head)
    }

    pub fn with_head(&self, head: i64) -> Tape {
        Tape {
            head,
            ..self.clone()
        }
    }

    /// Dense copy of the cells covering at least `[lo, hi]`.
    pub(crate) fn window_covering(&self, lo: i64, hi: i64) -> (i64, Vec<Symbol>) {
        let (lo, hi) = match self.support() {
            Some((a, b)) => (lo.min(a), hi.max(b)),
            None => (lo, hi),
        };
        let cells = (lo..=hi).map(|p| self.get(p)).collect();
        (lo, cells)
    }

    /// Smallest and largest non-blank positions.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.cells.is_empty() {
            None
        } else {
            Some((self.origin, self.origin + self.cells.len() as i64 - 1))
        }
    }

    pub fn is_blank(&self) -> bool {
        self.cells.is_empty()
    }

    /// Non-blank cells in increasing position order.
    pub fn non_blank(&self) -> impl Iterator<Item = (i64, Symbol)> + '_ {
        let blank = self.alphabet.blank;
        self.cells
            .iter()
            .enumerate()
            .filter(move |(_, &s)| s != blank)
            .map(move |(i, &s)| (self.origin + i as i64, s))
    }

    /// Translates the tape so that the head sits at position 0.
    pub fn recentered(&self) -> Tape {
        Tape {
            alphabet: self.alphabet.clone(),
            origin: if self.cells.is_empty() { 0 } else { self.origin - self.head },
            cells: self.cells.clone(),
            head: 0,
        }
    }

    /// Re-expresses the tape over another alphabet by symbol character,
    /// mapping blank to blank. Returns `None` if some symbol is missing.
    pub fn relabel(&self, target: &Alphabet) -> Option<Tape> {
        let mut cells = Vec::with_capacity(self.cells.len());
        for &s in &self.cells {
            if s == self.alphabet.blank {
                cells.push(target.blank);
            } else {
                let c = self.alphabet.char_of(s);
                let t = target.symbol(c)?;
                if t == target.blank {
                    return None;
                }
                cells.push(t);
            }
        }
        Some(Tape::from_window(target, self.origin, cells, self.head))
    }

    /// Smallest distance from the head at which `self` and `other` differ,
    /// both read relative to their own heads; `None` if they are equal.
    pub fn first_disagreement_radius(&self, other: &Tape) -> Option<u64> {
        let a = self.recentered();
        let b = other.recentered();
        let mut bound = 0i64;
        for t in [&a, &b] {
            if let Some((lo, hi)) = t.support() {
                bound = bound.max(lo.abs()).max(hi.abs());
            }
        }
        (0..=bound)
            .find(|&r| a.get(r) != b.get(r) || a.get(-r) != b.get(-r))
            .map(|r| r as u64)
    }
}

impl fmt::Debug for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tape({:?}", render_tape(self))?;
        if self.head != 0 {
            write!(f, " @head {}", self.head)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_tape(self))
    }
}

/// Parses a tape literal such as `11^10`: symbols are single characters,
/// `^` precedes the head cell, and positions are relative to the head.
pub fn parse_tape(text: &str, alphabet: &Alphabet) -> Result<Tape, TapeError> {
    let markers = text.chars().filter(|&c| c == '^').count();
    if markers != 1 {
        return Err(TapeError::HeadMarkers(markers));
    }
    let mut cells = Vec::new();
    let mut head_index = 0i64;
    for (offset, c) in text.chars().enumerate() {
        if c == '^' {
            head_index = cells.len() as i64;
            continue;
        }
        let s = alphabet
            .symbol(c)
            .ok_or(TapeError::UnknownSymbol { symbol: c, offset })?;
        cells.push(s);
    }
    Ok(Tape::from_window(alphabet, -head_index, cells, 0))
}

/// Canonical literal of a tape, written relative to its head: the window
/// spans the non-blank support extended to include the head, and a blank
/// head cell outside the support is not printed.
pub fn render_tape(t: &Tape) -> String {
    let t = t.recentered();
    let mut out = String::new();
    match t.support() {
        None => out.push('^'),
        Some((lo, hi)) => {
            let lo = lo.min(0);
            for p in lo..=hi.max(-1) {
                if p == 0 {
                    out.push('^');
                }
                out.push(t.get_char(p));
            }
            if hi < 0 {
                out.push('^');
            }
        }
    }
    out
}

/// Position visited at index `i` of the fold order 0, 1, −1, 2, −2, …
pub fn fold_position(i: u64) -> i64 {
    if i == 0 {
        0
    } else if i % 2 == 1 {
        (i as i64 + 1) / 2
    } else {
        -(i as i64 / 2)
    }
}

/// Inverse of [`fold_position`].
pub fn fold_index(p: i64) -> u64 {
    if p > 0 {
        (2 * p - 1) as u64
    } else {
        (-2 * p) as u64
    }
}

/// A one-sided word obtained by folding a tape; trailing blanks trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FoldedWord {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl FoldedWord {
    pub fn new(alphabet: &Alphabet, mut symbols: Vec<Symbol>) -> Self {
        while symbols.last() == Some(&alphabet.blank) {
            symbols.pop();
        }
        FoldedWord {
            alphabet: alphabet.clone(),
            symbols,
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

impl fmt::Display for FoldedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.char_of(s))?;
        }
        Ok(())
    }
}

/// Folds absolute positions in the order 0, 1, −1, 2, −2, … into a word.
/// The head position is not part of the word.
pub fn fold(t: &Tape) -> FoldedWord {
    let len = t
        .support()
        .map(|(lo, hi)| fold_index(lo).max(fold_index(hi)) + 1)
        .unwrap_or(0);
    let symbols = (0..len).map(|i| t.get(fold_position(i))).collect();
    FoldedWord::new(t.alphabet(), symbols)
}

pub fn unfold(word: &FoldedWord, head: i64) -> Tape {
    let mut lo = 0i64;
    let mut hi = 0i64;
    for i in 0..word.len() as u64 {
        let p = fold_position(i);
        lo = lo.min(p);
        hi = hi.max(p);
    }
    let mut cells = vec![word.alphabet.blank; (hi - lo + 1) as usize];
    for (i, &s) in word.symbols.iter().enumerate() {
        cells[(fold_position(i as u64) - lo) as usize] = s;
    }
    Tape::from_window(&word.alphabet, lo, cells, head)
}

/// Number of folded words of length `len` (last symbol non-blank).
fn words_of_length(base: &BigUint, len: usize) -> BigUint {
    if len == 0 {
        BigUint::one()
    } else {
        (base - 1u32) * base.pow(len as u32 - 1)
    }
}

/// Position of a folded word in length-then-lexicographic order.
pub fn word_number(word: &FoldedWord) -> BigUint {
    let a = &word.alphabet;
    let base = BigUint::from(a.len());
    let mut n = BigUint::zero();
    for l in 0..word.len() {
        n += words_of_length(&base, l);
    }
    if let Some((&last, init)) = word.symbols.split_last() {
        let mut rank = BigUint::zero();
        for &d in init {
            rank = rank * &base + d as u32;
        }
        n += rank * (a.len() as u32 - 1) + a.nonblank_rank(last) as u32;
    }
    n
}

pub fn word_of_number(n: &BigUint, alphabet: &Alphabet) -> FoldedWord {
    let base = BigUint::from(alphabet.len());
    let mut rest = n.clone();
    let mut len = 0usize;
    loop {
        let c = words_of_length(&base, len);
        if rest < c {
            break;
        }
        rest -= c;
        len += 1;
    }
    if len == 0 {
        return FoldedWord::new(alphabet, Vec::new());
    }
    let nb = BigUint::from(alphabet.len() - 1);
    let last = (&rest % &nb).to_usize().unwrap();
    let mut q = rest / nb;
    let mut symbols = vec![0 as Symbol; len];
    symbols[len - 1] = alphabet.nonblank_at(last);
    for slot in symbols[..len - 1].iter_mut().rev() {
        *slot = (&q % &base).to_u8().unwrap();
        q /= &base;
    }
    FoldedWord::new(alphabet, symbols)
}

/// `#τ`: the number of a tape in length-lex order of its fold. Tapes whose
/// head is not at 0 are first translated so that it is.
pub fn tape_number(t: &Tape) -> BigUint {
    word_number(&fold(&t.recentered()))
}

pub fn tape_of_number_in(n: &BigUint, alphabet: &Alphabet) -> Tape {
    unfold(&word_of_number(n, alphabet), 0)
}

/// Inverse of [`tape_number`] over the default binary alphabet.
pub fn tape_of_number(n: &BigUint) -> Tape {
    tape_of_number_in(n, &Alphabet::binary())
}

pub fn tape_of_index(n: u64, alphabet: &Alphabet) -> Tape {
    tape_of_number_in(&BigUint::from(n), alphabet)
}
