//! The text machine format.
//!
//! ```text
//! # unary successor
//! alphabet: _01$
//! blank: _
//! start: s
//! halt: h
//! s 1 -> _ R run
//! ```
//!
//! Header keys are `alphabet`, `blank`, `start`, `halt` and the optional
//! `oracle: <query> <yes> <no>`. Each rule is
//! `<state> <read> -> <write> <L|R|S> <state>`. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Machine, MachineBuilder, Move};
use crate::tape::Alphabet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        message: message.into(),
    }
}

fn single_char(tok: &str, line: usize) -> Result<char, FileError> {
    let mut cs = tok.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(err(line, format!("expected a single symbol, found {tok:?}"))),
    }
}

pub fn parse_machine(text: &str) -> Result<Machine, FileError> {
    let mut symbols: Option<Vec<char>> = None;
    let mut blank: Option<char> = None;
    let mut start: Option<(usize, String)> = None;
    let mut halts: Vec<String> = Vec::new();
    let mut oracle: Option<[String; 3]> = None;
    let mut rules: Vec<(usize, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "alphabet" => {
                    let syms: Vec<char> = if value.contains(char::is_whitespace) {
                        value
                            .split_whitespace()
                            .map(|t| single_char(t, lineno))
                            .collect::<Result<_, _>>()?
                    } else {
                        value.chars().collect()
                    };
                    symbols = Some(syms);
                }
                "blank" => blank = Some(single_char(value, lineno)?),
                "start" => start = Some((lineno, value.to_string())),
                "halt" => halts.extend(value.split_whitespace().map(str::to_string)),
                "oracle" => {
                    let parts: Vec<&str> = value.split_whitespace().collect();
                    let [q, y, n] = parts[..] else {
                        return Err(err(lineno, "oracle needs <query> <yes> <no>"));
                    };
                    oracle = Some([q.to_string(), y.to_string(), n.to_string()]);
                }
                other => return Err(err(lineno, format!("unknown header {other:?}"))),
            }
            continue;
        }
        let toks: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if toks.len() != 6 || toks[2] != "->" {
            return Err(err(lineno, "expected `<state> <read> -> <write> <L|R|S> <state>`"));
        }
        rules.push((lineno, toks));
    }

    let symbols = symbols.ok_or_else(|| err(0, "missing `alphabet:` header"))?;
    let blank = blank.ok_or_else(|| err(0, "missing `blank:` header"))?;
    let alphabet = Alphabet::new(&symbols, blank).map_err(|e| err(0, e.to_string()))?;
    let (start_line, start) = start.ok_or_else(|| err(0, "missing `start:` header"))?;
    if start.is_empty() {
        return Err(err(start_line, "empty start state"));
    }

    let mut b = MachineBuilder::new(&alphabet);
    b.start(&start);
    for h in &halts {
        b.halt(h);
    }
    if let Some([q, y, n]) = &oracle {
        b.oracle(q, y, n);
    }
    for (lineno, t) in &rules {
        let read = single_char(&t[1], *lineno)?;
        let write = single_char(&t[3], *lineno)?;
        for c in [read, write] {
            if alphabet.symbol(c).is_none() {
                return Err(err(*lineno, format!("symbol {c:?} is not in the alphabet")));
            }
        }
        let mv = match t[4].as_str() {
            "L" => Move::L,
            "R" => Move::R,
            "S" => Move::S,
            other => return Err(err(*lineno, format!("bad move {other:?}"))),
        };
        let before = b.clone();
        b.rule(&t[0], read, write, mv, &t[5]);
        if let Err(e) = b.build() {
            // report the first rule that makes the machine invalid
            if before.build().is_ok() || matches!(e, super::MachineError::ConflictingRule(..)) {
                return Err(err(*lineno, e.to_string()));
            }
        }
    }
    b.build().map_err(|e| err(0, e.to_string()))
}

/// Writes the canonical file form; `parse_machine` reads it back to an
/// equal machine.
pub fn write_machine(m: &Machine) -> String {
    let a = m.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", a.symbols_string());
    let _ = writeln!(out, "blank: {}", a.blank_char());
    let _ = writeln!(out, "start: {}", m.state_name(m.start()));
    let halts: Vec<&str> = m.halt_states().map(|s| m.state_name(s)).collect();
    let _ = writeln!(out, "halt: {}", halts.join(" "));
    if let Some(p) = m.oracle() {
        let _ = writeln!(
            out,
            "oracle: {} {} {}",
            m.state_name(p.query),
            m.state_name(p.yes),
            m.state_name(p.no)
        );
    }
    for (s, sym, q) in m.rules() {
        let _ = writeln!(
            out,
            "{} {} -> {} {} {}",
            m.state_name(s),
            a.char_of(sym),
            a.char_of(q.write),
            q.mv.letter(),
            m.state_name(q.next)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FLIP: &str = "\
# flips the first cell
alphabet: 01
blank: 0
start: s
halt: h
s 1 -> 0 S h   # clear
s 0 -> 1 S h
";

    #[test]
    fn parse_and_write_round_trip() {
        let m = parse_machine(FLIP).unwrap();
        assert_eq!(m.num_quintuples(), 2);
        let again = parse_machine(&write_machine(&m)).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = FLIP.replace("s 0 -> 1 S h", "s 0 -> 1 X h");
        assert_eq!(parse_machine(&bad).unwrap_err().line, 7);
        let bad = FLIP.replace("s 0 -> 1 S h", "s 2 -> 1 S h");
        assert_eq!(parse_machine(&bad).unwrap_err().line, 7);
        let bad = format!("{FLIP}s 1 -> 1 S h\n");
        assert_eq!(parse_machine(&bad).unwrap_err().line, 8);
        let bad = format!("{FLIP}h 1 -> 1 S h\n");
        assert_eq!(parse_machine(&bad).unwrap_err().line, 8);
        assert!(parse_machine("alphabet: 01\nstart: s\n").is_err());
    }
}
