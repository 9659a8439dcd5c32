//! A small untyped λ-calculus: parsing, normal-order reduction with
//! capture-avoiding substitution, α-equivalence via de Bruijn indices, and
//! the flag-reading halting detector.
//!
//! `ν` and `o` are the Church booleans `λx.λy.x` and `λx.λy.y`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Abs(String, Box<Term>),
    App(Box<Term>, Box<Term>),
}

pub fn var(x: &str) -> Term {
    Term::Var(x.to_string())
}

pub fn abs(x: &str, body: Term) -> Term {
    Term::Abs(x.to_string(), Box::new(body))
}

pub fn app(f: Term, a: Term) -> Term {
    Term::App(Box::new(f), Box::new(a))
}

/// Left-nested application `f a₁ a₂ …`.
pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
    args.into_iter().fold(f, app)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("no certificate for the halting flag of {0}")]
    UnknownFlag(String),
    #[error("the flag certificate does not replay: {0}")]
    BadCertificate(String),
    #[error("the detector did not reach the flag: {0}")]
    DemoFailed(String),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() && c != 'λ' || c == '_' || c == '\''
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |&(p, _)| p)
    }

    fn err<T>(&self, message: &str) -> Result<T, LambdaError> {
        Err(LambdaError::Syntax {
            pos: self.pos(),
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.i).is_some_and(|(_, c)| c.is_whitespace()) {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.i;
        while self.chars.get(self.i).is_some_and(|&(_, c)| ident_char(c)) {
            self.i += 1;
        }
        (self.i > start).then(|| self.chars[start..self.i].iter().map(|&(_, c)| c).collect())
    }

    fn term(&mut self) -> Result<Term, LambdaError> {
        let mut acc: Option<Term> = None;
        loop {
            let next = match self.peek() {
                Some('\\' | 'λ') => {
                    self.i += 1;
                    let mut binders = Vec::new();
                    while let Some(x) = self.ident() {
                        binders.push(x);
                    }
                    if binders.is_empty() {
                        return self.err("expected a variable after λ");
                    }
                    if self.peek() != Some('.') {
                        return self.err("expected '.'");
                    }
                    self.i += 1;
                    let body = self.term()?;
                    binders.into_iter().rev().fold(body, |b, x| Term::Abs(x, Box::new(b)))
                }
                Some('(') => {
                    self.i += 1;
                    let t = self.term()?;
                    if self.peek() != Some(')') {
                        return self.err("expected ')'");
                    }
                    self.i += 1;
                    t
                }
                Some(c) if ident_char(c) => var(&self.ident().unwrap()),
                _ => break,
            };
            acc = Some(match acc {
                None => next,
                Some(f) => app(f, next),
            });
        }
        match acc {
            Some(t) => Ok(t),
            None => self.err("expected a term"),
        }
    }
}

/// Parses `λx.x`, `\x y. x`, `λa.a L I`, … Application is left-associative
/// and an abstraction extends as far right as possible.
pub fn parse_term(text: &str) -> Result<Term, LambdaError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        i: 0,
        src: text,
    };
    let t = p.term()?;
    if p.peek().is_some() {
        return p.err("unexpected input");
    }
    Ok(t)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => f.write_str(x),
            Term::Abs(x, b) => write!(f, "λ{x}.{b}"),
            Term::App(a, b) => {
                match **a {
                    Term::Abs(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                match **b {
                    Term::Var(_) => write!(f, " {b}"),
                    _ => write!(f, " ({b})"),
                }
            }
        }
    }
}

pub fn print_term(t: &Term) -> String {
    t.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Db {
    Bound(usize),
    Free(String),
    Abs(Box<Db>),
    App(Box<Db>, Box<Db>),
}

fn de_bruijn(t: &Term, ctx: &mut Vec<String>) -> Db {
    match t {
        Term::Var(x) => match ctx.iter().rev().position(|y| y == x) {
            Some(i) => Db::Bound(i),
            None => Db::Free(x.clone()),
        },
        Term::Abs(x, b) => {
            ctx.push(x.clone());
            let d = de_bruijn(b, ctx);
            ctx.pop();
            Db::Abs(Box::new(d))
        }
        Term::App(a, b) => Db::App(Box::new(de_bruijn(a, ctx)), Box::new(de_bruijn(b, ctx))),
    }
}

pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    de_bruijn(a, &mut Vec::new()) == de_bruijn(b, &mut Vec::new())
}

pub fn free_vars(t: &Term) -> HashSet<String> {
    fn go(t: &Term, bound: &mut Vec<String>, out: &mut HashSet<String>) {
        match t {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Term::Abs(x, b) => {
                bound.push(x.clone());
                go(b, bound, out);
                bound.pop();
            }
            Term::App(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
        }
    }
    let mut out = HashSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

fn all_names(t: &Term, out: &mut HashSet<String>) {
    match t {
        Term::Var(x) => {
            out.insert(x.clone());
        }
        Term::Abs(x, b) => {
            out.insert(x.clone());
            all_names(b, out);
        }
        Term::App(a, b) => {
            all_names(a, out);
            all_names(b, out);
        }
    }
}

fn fresh(base: &str, avoid: &HashSet<String>) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { "v" } else { stem };
    (1..).map(|i| format!("{stem}{i}")).find(|n| !avoid.contains(n)).unwrap()
}

/// `t[x := s]`, renaming binders that would capture free variables of `s`.
pub fn subst(t: &Term, x: &str, s: &Term) -> Term {
    subst_with(t, x, s, &free_vars(s))
}

fn subst_with(t: &Term, x: &str, s: &Term, fv_s: &HashSet<String>) -> Term {
    match t {
        Term::Var(y) if y == x => s.clone(),
        Term::Var(_) => t.clone(),
        Term::App(a, b) => app(subst_with(a, x, s, fv_s), subst_with(b, x, s, fv_s)),
        Term::Abs(y, _) if y == x => t.clone(),
        Term::Abs(y, b) => {
            if fv_s.contains(y) && free_vars(b).contains(x) {
                let mut avoid = fv_s.clone();
                all_names(b, &mut avoid);
                avoid.insert(x.to_string());
                let z = fresh(y, &avoid);
                let b2 = subst(b, y, &var(&z));
                abs(&z, subst_with(&b2, x, s, fv_s))
            } else {
                abs(y, subst_with(b, x, s, fv_s))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Fun,
    Arg,
    Body,
}

/// One contraction: where it happened, the redex, and the whole term after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub path: Vec<Dir>,
    pub redex: Term,
    pub result: Term,
}

fn contract(redex: &Term) -> Option<Term> {
    match redex {
        Term::App(f, a) => match &**f {
            Term::Abs(x, b) => Some(subst(b, x, a)),
            _ => None,
        },
        _ => None,
    }
}

/// Paths of every redex, leftmost-outermost first.
pub fn redexes(t: &Term) -> Vec<Vec<Dir>> {
    fn go(t: &Term, path: &mut Vec<Dir>, out: &mut Vec<Vec<Dir>>) {
        match t {
            Term::Var(_) => {}
            Term::Abs(_, b) => {
                path.push(Dir::Body);
                go(b, path, out);
                path.pop();
            }
            Term::App(f, a) => {
                if matches!(**f, Term::Abs(..)) {
                    out.push(path.clone());
                }
                path.push(Dir::Fun);
                go(f, path, out);
                path.pop();
                path.push(Dir::Arg);
                go(a, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

pub fn subterm<'a>(t: &'a Term, path: &[Dir]) -> Option<&'a Term> {
    match (path.split_first(), t) {
        (None, _) => Some(t),
        (Some((Dir::Fun, rest)), Term::App(f, _)) => subterm(f, rest),
        (Some((Dir::Arg, rest)), Term::App(_, a)) => subterm(a, rest),
        (Some((Dir::Body, rest)), Term::Abs(_, b)) => subterm(b, rest),
        _ => None,
    }
}

/// Contracts the redex at `path`.
pub fn contract_at(t: &Term, path: &[Dir]) -> Option<Term> {
    match (path.split_first(), t) {
        (None, _) => contract(t),
        (Some((Dir::Fun, rest)), Term::App(f, a)) => Some(app(contract_at(f, rest)?, (**a).clone())),
        (Some((Dir::Arg, rest)), Term::App(f, a)) => Some(app((**f).clone(), contract_at(a, rest)?)),
        (Some((Dir::Body, rest)), Term::Abs(x, b)) => Some(abs(x, contract_at(b, rest)?)),
        _ => None,
    }
}

/// One leftmost-outermost step.
pub fn step_normal(t: &Term) -> Option<Step> {
    let path = redexes(t).into_iter().next()?;
    let redex = subterm(t, &path)?.clone();
    let result = contract_at(t, &path)?;
    Some(Step { path, redex, result })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    NormalForm { term: Term, steps: u64 },
    Exhausted { term: Term, steps: u64 },
}

impl Reduction {
    pub fn normal_form(&self) -> Option<&Term> {
        match self {
            Reduction::NormalForm { term, .. } => Some(term),
            _ => None,
        }
    }
}

pub fn reduce_normal_order(t: &Term, fuel: u64) -> Reduction {
    reduce_traced(t, fuel).0
}

pub fn reduce_traced(t: &Term, fuel: u64) -> (Reduction, Vec<Step>) {
    let mut cur = t.clone();
    let mut trace = Vec::new();
    for steps in 0..=fuel {
        match step_normal(&cur) {
            None => return (Reduction::NormalForm { term: cur, steps }, trace),
            Some(_) if steps == fuel => break,
            Some(s) => {
                cur = s.result.clone();
                trace.push(s);
            }
        }
    }
    (
        Reduction::Exhausted {
            term: cur,
            steps: fuel,
        },
        trace,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaCert {
    Normalizes { steps: u64, normal_form: Term },
    /// Normal order is deterministic, so returning to an α-equal term after
    /// `first` steps at step `again` means it never stops.
    Diverges { first: u64, again: u64 },
}

/// Reduces `t` until a normal form or an α-repeat, within `fuel` steps.
pub fn certify(t: &Term, fuel: u64) -> Option<LambdaCert> {
    let mut seen: HashMap<Db, u64> = HashMap::new();
    let mut cur = t.clone();
    for k in 0..=fuel {
        let key = de_bruijn(&cur, &mut Vec::new());
        if let Some(&first) = seen.get(&key) {
            return Some(LambdaCert::Diverges { first, again: k });
        }
        let Some(s) = step_normal(&cur) else {
            return Some(LambdaCert::Normalizes {
                steps: k,
                normal_form: cur,
            });
        };
        seen.insert(key, k);
        cur = s.result;
    }
    None
}

pub fn replay_cert(t: &Term, cert: &LambdaCert) -> bool {
    match cert {
        LambdaCert::Normalizes { steps, normal_form } => match reduce_normal_order(t, *steps) {
            Reduction::NormalForm { term, steps: s } => s == *steps && alpha_eq(&term, normal_form),
            _ => false,
        },
        LambdaCert::Diverges { first, again } => {
            if first >= again {
                return false;
            }
            let (_, trace) = reduce_traced(t, *again);
            if trace.len() as u64 != *again {
                return false;
            }
            let at = |k: u64| if k == 0 { t } else { &trace[k as usize - 1].result };
            alpha_eq(at(*first), at(*again))
        }
    }
}

pub fn church_true() -> Term {
    abs("x", abs("y", var("x")))
}

pub fn church_false() -> Term {
    abs("x", abs("y", var("y")))
}

/// `Ω = (λx.x x)(λx.x x)`.
pub fn omega() -> Term {
    let d = abs("x", app(var("x"), var("x")));
    app(d.clone(), d)
}

/// `h` for `L I` together with the certificate that decides it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaltFlag {
    pub term: Term,
    pub certificate: LambdaCert,
}

pub fn certify_flag(l: &Term, i: &Term, fuel: u64) -> Result<HaltFlag, LambdaError> {
    let li = app(l.clone(), i.clone());
    match certify(&li, fuel) {
        Some(c @ LambdaCert::Normalizes { .. }) => Ok(HaltFlag {
            term: church_true(),
            certificate: c,
        }),
        Some(c @ LambdaCert::Diverges { .. }) => Ok(HaltFlag {
            term: church_false(),
            certificate: c,
        }),
        None => Err(LambdaError::UnknownFlag(li.to_string())),
    }
}

fn fresh_for(terms: &[&Term], base: &str) -> String {
    let mut avoid = HashSet::new();
    for t in terms {
        avoid.extend(free_vars(t));
    }
    if avoid.contains(base) {
        fresh(base, &avoid)
    } else {
        base.to_string()
    }
}

/// `λa.a L I`.
pub fn rep_tuple(l: &Term, i: &Term) -> Term {
    let a = fresh_for(&[l, i], "a");
    abs(&a, apps(var(&a), [l.clone(), i.clone()]))
}

/// `λa.a L I h`; the flag's certificate is replayed first, so `h` is never
/// taken on trust.
pub fn rep_tuple_augmented(l: &Term, i: &Term, h: &HaltFlag) -> Result<Term, LambdaError> {
    let li = app(l.clone(), i.clone());
    if !replay_cert(&li, &h.certificate) {
        return Err(LambdaError::BadCertificate(li.to_string()));
    }
    let expected = match h.certificate {
        LambdaCert::Normalizes { .. } => church_true(),
        LambdaCert::Diverges { .. } => church_false(),
    };
    if !alpha_eq(&h.term, &expected) {
        return Err(LambdaError::BadCertificate(format!("{} does not match the certificate", h.term)));
    }
    let a = fresh_for(&[l, i, &h.term], "a");
    Ok(abs(&a, apps(var(&a), [l.clone(), i.clone(), h.term.clone()])))
}

/// `H = λm.m (λx.λy.λz.z)`: picks the third component of a tuple.
pub fn halt_detector() -> Term {
    abs("m", app(var("m"), abs("x", abs("y", abs("z", var("z"))))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Demo {
    pub start: Term,
    pub trace: Vec<Step>,
    pub result: Term,
    pub flag: HaltFlag,
    pub beta_steps: usize,
    /// β-steps grouped so that feeding successive arguments to one
    /// multi-binder abstraction counts once — the granularity of the
    /// displayed chain `H(λa.aLIh) = (λa.aLIh)(λxyz.z) = (λxyz.z)LIh = h`.
    pub chain_contractions: usize,
    /// The reduction is an instance of the same reduction with `L`, `I`
    /// and `h` as opaque variables, so nothing inside `L I` was contracted.
    pub untouched: bool,
}

/// Number of chains in a trace: a step continues the previous chain when
/// it contracts the abstraction the previous step produced at the head.
pub fn chain_contractions(trace: &[Step]) -> usize {
    let mut chains = 0;
    for (k, s) in trace.iter().enumerate() {
        let continues = k > 0 && {
            let mut p = s.path.clone();
            p.push(Dir::Fun);
            p == trace[k - 1].path
        };
        if !continues {
            chains += 1;
        }
    }
    chains
}

const DEMO_FUEL: u64 = 10;

pub fn demo_halting(l: &Term, i: &Term, flag: &HaltFlag) -> Result<Demo, LambdaError> {
    let tuple = rep_tuple_augmented(l, i, flag)?;
    let start = app(halt_detector(), tuple);
    let (red, trace) = reduce_traced(&start, DEMO_FUEL);
    let Reduction::NormalForm { term: result, .. } = red else {
        return Err(LambdaError::DemoFailed(format!("no normal form within {DEMO_FUEL} steps")));
    };
    if !alpha_eq(&result, &flag.term) {
        return Err(LambdaError::DemoFailed(format!("ended with {result}")));
    }
    let untouched = opaque_instance(l, i, flag, &start, &trace);
    Ok(Demo {
        beta_steps: trace.len(),
        chain_contractions: chain_contractions(&trace),
        start,
        trace,
        result,
        flag: flag.clone(),
        untouched,
    })
}

/// Re-runs the detector with fresh variables in place of `L`, `I`, `h` and
/// checks the concrete trace is that trace with the terms plugged back in.
fn opaque_instance(l: &Term, i: &Term, flag: &HaltFlag, start: &Term, trace: &[Step]) -> bool {
    let mut avoid = HashSet::new();
    all_names(start, &mut avoid);
    let nl = fresh("L", &avoid);
    avoid.insert(nl.clone());
    let ni = fresh("I", &avoid);
    avoid.insert(ni.clone());
    let nh = fresh("h", &avoid);
    let placeholders = Term::Abs(
        "a".into(),
        Box::new(apps(var("a"), [var(&nl), var(&ni), var(&nh)])),
    );
    let (red, opaque) = reduce_traced(&app(halt_detector(), placeholders), DEMO_FUEL);
    if red.normal_form() != Some(&var(&nh)) || opaque.len() != trace.len() {
        return false;
    }
    let plug = |t: &Term| subst(&subst(&subst(t, &nl, l), &ni, i), &nh, &flag.term);
    opaque
        .iter()
        .zip(trace)
        .all(|(o, c)| o.path == c.path && alpha_eq(&plug(&o.result), &c.result))
}

impl Demo {
    /// The numbered reduction chain.
    pub fn transcript(&self) -> String {
        let mut out = format!("0. {}\n", self.start);
        for (k, s) in self.trace.iter().enumerate() {
            out.push_str(&format!("{}. {}\n", k + 1, s.result));
        }
        out
    }
}

/// Bundled `(L, I)` pairs: one halting, two divergent.
pub fn bundled_cases() -> Vec<(&'static str, Term, Term)> {
    let id = abs("x", var("x"));
    let delta = abs("x", app(var("x"), var("x")));
    let k = church_true();
    vec![
        ("identity", id.clone(), id),
        ("self-application", delta.clone(), delta),
        ("constant-omega", k, omega()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(p("λx.x"), abs("x", var("x")));
        assert_eq!(p("λa.a L I"), abs("a", apps(var("a"), [var("L"), var("I")])));
        assert_eq!(p("\\x y. x"), p("λx.λy.x"));
        assert_eq!(p("f (λx.x) y"), apps(var("f"), [abs("x", var("x")), var("y")]));
        assert!(matches!(parse_term("λ.x"), Err(LambdaError::Syntax { pos: 2, .. })));
        assert!(parse_term("(x").is_err());
        for s in ["λx.x", "(λx.x x)(λx.x x)", "λm.m (λx.λy.λz.z)", "f (g h) (λx.x)"] {
            assert!(alpha_eq(&p(&print_term(&p(s))), &p(s)), "{s}");
        }
    }

    #[test]
    fn reduction() {
        assert_eq!(
            reduce_normal_order(&p("(λx.x)(λx.x)"), 10),
            Reduction::NormalForm {
                term: p("λx.x"),
                steps: 1
            }
        );
        assert!(matches!(reduce_normal_order(&omega(), 100), Reduction::Exhausted { .. }));
        let r = reduce_normal_order(&apps(church_true(), [var("A"), omega()]), 10);
        assert_eq!(r.normal_form(), Some(&var("A")));
    }

    #[test]
    fn capture_avoidance() {
        // (λx.λy.x) y  must not become λy.y
        let r = reduce_normal_order(&p("(λx.λy.x) y"), 10);
        let nf = r.normal_form().unwrap();
        assert!(alpha_eq(nf, &p("λz.y")));
        assert!(!alpha_eq(nf, &p("λy.y")));
        let r = reduce_normal_order(&p("(λx.λy.λy1. x y y1) y1 y"), 10);
        assert!(alpha_eq(r.normal_form().unwrap(), &p("λa.y1 y a")));
    }

    #[test]
    fn certificates() {
        assert!(matches!(certify(&omega(), 10), Some(LambdaCert::Diverges { first: 0, again: 1 })));
        let c = certify(&p("(λx.λy.x) (λz.z z) (λq.q)"), 10).unwrap();
        assert!(replay_cert(&p("(λx.λy.x) (λz.z z) (λq.q)"), &c));
        assert!(!replay_cert(&omega(), &LambdaCert::Diverges { first: 1, again: 1 }));
        // λx.x x x applied to itself grows forever: no certificate
        assert!(certify(&p("(λx.x x x)(λx.x x x)"), 30).is_none());
    }

    #[test]
    fn tuples() {
        let (l, i) = (var("L"), var("I"));
        let f = var("F");
        let r = reduce_normal_order(&app(rep_tuple(&l, &i), f), 5);
        assert_eq!(r.normal_form(), Some(&apps(var("F"), [var("L"), var("I")])));
        // a fresh binder avoids a free `a`
        let t = rep_tuple(&var("a"), &var("b"));
        assert!(alpha_eq(&app(t, var("F")), &p("(λa1.a1 a b) F")));
        let bad = HaltFlag {
            term: church_true(),
            certificate: LambdaCert::Normalizes {
                steps: 1,
                normal_form: omega(),
            },
        };
        assert!(rep_tuple_augmented(&omega(), &omega(), &bad).is_err());
    }

    #[test]
    fn detector() {
        for (name, l, i) in bundled_cases() {
            let flag = certify_flag(&l, &i, 50).unwrap();
            let d = demo_halting(&l, &i, &flag).unwrap();
            assert!(alpha_eq(&d.result, &flag.term), "{name}");
            assert_eq!(d.beta_steps, 5, "{name}");
            assert_eq!(d.chain_contractions, 3, "{name}");
            assert!(d.untouched, "{name}");
        }
        let (_, l, i) = bundled_cases().remove(1);
        assert_eq!(certify_flag(&l, &i, 50).unwrap().term, church_false());
        assert!(matches!(
            certify_flag(&p("λx.x x x"), &p("λx.x x x"), 20),
            Err(LambdaError::UnknownFlag(_))
        ));
    }
}
