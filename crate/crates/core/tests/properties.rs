use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;
use proptest::prelude::*;

use tapelab::enumerate::{
    acceptor_from_enumerator, enumerator_from_acceptor, invert_via_enumeration, translate_via_enumerators,
    triangular_schedule, Acceptance, Acceptor, Enumerator, Inversion, Translation, Universe,
};
use tapelab::lambda::{
    abs, alpha_eq, app, contract_at, free_vars, parse_term, print_term, reduce_normal_order, redexes, subst, var, Term,
};
use tapelab::machine::{run, run_traced};
use tapelab::machines::{binary_marked_successor, starts_with_one_acceptor, unary_add_two, unary_successor};
use tapelab::pairing::combinators::{apply, machine_eq, machine_proj1, machine_proj2, machine_swap};
use tapelab::pairing::{cantor, cantor_inverse, pair_mach, spec, unpair_mach, word_tape};
use tapelab::repr::{rep_binary_marked, rep_unary, rep_words, rho_c, Element};
use tapelab::tape::{fold, tape_number, tape_of_index, unfold};
use tapelab::{Alphabet, Machine, MachineBuilder, Move, RunResult, Tape};

// ---- machines and tapes ----

fn machine_strategy() -> impl Strategy<Value = Machine> {
    let rule = (any::<bool>(), 0..2u8, 0..3usize, 0..6usize);
    (1..=4usize, prop::collection::vec(prop::option::weighted(0.85, rule), 8)).prop_map(|(n, rules)| {
        let mut b = MachineBuilder::new(&Alphabet::binary());
        b.start("q0").halt("h");
        for (i, r) in rules.into_iter().enumerate() {
            let (q, read) = (i / 2, if i % 2 == 0 { '0' } else { '1' });
            if q >= n {
                break;
            }
            let Some((write, _, mv, to)) = r else { continue };
            let to = if to >= n { "h".to_string() } else { format!("q{to}") };
            let mv = [Move::L, Move::R, Move::S][mv];
            b.rule(&format!("q{q}"), read, if write { '1' } else { '0' }, mv, &to);
        }
        b.build().unwrap()
    })
}

fn tape_strategy() -> impl Strategy<Value = Tape> {
    (prop::collection::vec(0..2u8, 0..24), -12i64..12).prop_map(|(cells, start)| {
        Tape::from_symbols(&Alphabet::binary(), start, &cells)
    })
}

fn word() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..10)
}

proptest! {
    #[test]
    fn locality(m in machine_strategy(), t in tape_strategy(), noise in prop::collection::vec(0..2u8, 8)) {
        if let RunResult::Halted { tape: out, steps, .. } = run(&m, &t, 40) {
            let s = steps as i64;
            let mut u = t.clone();
            for (k, v) in noise.iter().enumerate() {
                let k = k as i64;
                u = u.with(s + 1 + k, *v).with(-s - 1 - k, 1 - *v);
            }
            let RunResult::Halted { tape: out2, steps: steps2, .. } = run(&m, &u, 40) else {
                return Err(TestCaseError::fail("second run did not halt"));
            };
            prop_assert_eq!(steps2, steps);
            prop_assert_eq!(out2.head(), out.head());
            for p in -s..=s {
                prop_assert_eq!(out.get(p), out2.get(p));
            }
        }
    }

    #[test]
    fn excursion_bounded_by_steps(m in machine_strategy(), t in tape_strategy()) {
        let (r, excursion) = run_traced(&m, &t, 60);
        let steps = match r {
            RunResult::Halted { steps, .. } => steps,
            _ => 60,
        };
        prop_assert!(excursion <= steps);
    }

    #[test]
    fn tape_numbering_is_a_bijection(n in 0u64..1_000_000) {
        let t = tape_of_index(n, &Alphabet::binary());
        prop_assert_eq!(tape_number(&t), BigUint::from(n));
    }

    #[test]
    fn fold_unfold(t in tape_strategy()) {
        prop_assert_eq!(unfold(&fold(&t), t.head()), t);
    }

    #[test]
    fn cantor_round_trip(x in 0u64..1 << 30, y in 0u64..1 << 30) {
        let z = cantor(&x.into(), &y.into());
        prop_assert_eq!(cantor_inverse(&z), (BigUint::from(x), BigUint::from(y)));
        // z counts the pairs on earlier diagonals plus the position on this one
        let d = BigUint::from(x + y);
        prop_assert_eq!(z, &d * (&d + 1u32) / 2u32 + y);
    }

    #[test]
    fn pair_mach_injective(a in word(), b in word(), c in word(), d in word()) {
        let p = pair_mach(&word_tape(&a), &word_tape(&b)).unwrap();
        let q = pair_mach(&word_tape(&c), &word_tape(&d)).unwrap();
        prop_assert_eq!(p == q, (a.clone(), b.clone()) == (c, d));
        prop_assert_eq!(unpair_mach(&p), Some((word_tape(&a), word_tape(&b))));
    }

    #[test]
    fn combinators_match_spec(a in word(), b in word()) {
        let p = pair_mach(&word_tape(&a), &word_tape(&b)).unwrap();
        type Spec = fn(&Tape) -> Option<Tape>;
        let table: [(Machine, Spec); 4] =
            [(machine_swap(), spec::swap), (machine_proj1(), spec::proj1), (machine_proj2(), spec::proj2), (machine_eq(), spec::eq)];
        for (m, f) in table {
            prop_assert_eq!(apply(&m, &p, 1_000_000), f(&p));
        }
    }
}

// ---- λ-terms ----

fn term_strategy() -> impl Strategy<Value = Term> {
    let name = prop::sample::select(vec!["x", "y", "z", "w"]);
    name.clone().prop_map(var).prop_recursive(5, 40, 2, move |inner| {
        prop_oneof![
            (name.clone(), inner.clone()).prop_map(|(x, b)| abs(x, b)),
            (inner.clone(), inner).prop_map(|(f, a)| app(f, a)),
        ]
    })
}

// an independent de Bruijn form: free variables keep their names
#[derive(Debug, PartialEq)]
enum Db {
    Free(String),
    Bound(usize),
    Lam(Box<Db>),
    App(Box<Db>, Box<Db>),
}

fn db(t: &Term, env: &mut Vec<String>) -> Db {
    match t {
        Term::Var(x) => match env.iter().rev().position(|y| y == x) {
            Some(i) => Db::Bound(i),
            None => Db::Free(x.clone()),
        },
        Term::Abs(x, b) => {
            env.push(x.clone());
            let body = db(b, env);
            env.pop();
            Db::Lam(Box::new(body))
        }
        Term::App(f, a) => Db::App(Box::new(db(f, env)), Box::new(db(a, env))),
    }
}

// substitution on de Bruijn forms of closed-over terms cannot capture
fn db_subst(t: &Db, x: &str, s: &Term) -> Db {
    match t {
        Db::Free(y) if y == x => db(s, &mut Vec::new()),
        Db::Free(y) => Db::Free(y.clone()),
        Db::Bound(i) => Db::Bound(*i),
        Db::Lam(b) => Db::Lam(Box::new(db_subst(b, x, s))),
        Db::App(f, a) => Db::App(Box::new(db_subst(f, x, s)), Box::new(db_subst(a, x, s))),
    }
}

fn size(t: &Term) -> usize {
    match t {
        Term::Var(_) => 1,
        Term::Abs(_, b) => 1 + size(b),
        Term::App(f, a) => 1 + size(f) + size(a),
    }
}

proptest! {
    #[test]
    fn print_parse_round_trip(t in term_strategy()) {
        let back = parse_term(&print_term(&t)).unwrap();
        prop_assert!(alpha_eq(&back, &t), "{} reparsed as {}", t, back);
    }

    #[test]
    fn substitution_avoids_capture(t in term_strategy(), s in term_strategy(), x in prop::sample::select(vec!["x", "y", "z"])) {
        let got = subst(&t, x, &s);
        prop_assert_eq!(db(&got, &mut Vec::new()), db_subst(&db(&t, &mut Vec::new()), x, &s));
        let mut expect: HashSet<String> = free_vars(&t);
        if expect.remove(x) {
            expect.extend(free_vars(&s));
        }
        prop_assert_eq!(free_vars(&got), expect);
    }

    #[test]
    fn normal_order_finds_every_normal_form(t in term_strategy(), picks in prop::collection::vec(any::<prop::sample::Index>(), 40)) {
        // reduce by arbitrary redex choices; when that reaches a normal
        // form, normal order reaches the same one
        let mut cur = t.clone();
        for pick in &picks {
            let rs = redexes(&cur);
            if rs.is_empty() || size(&cur) > 400 {
                break;
            }
            cur = contract_at(&cur, &rs[pick.index(rs.len())]).unwrap();
        }
        if redexes(&cur).is_empty() {
            let nf = reduce_normal_order(&t, 2000);
            let nf = nf.normal_form();
            prop_assert!(nf.is_some_and(|n| alpha_eq(n, &cur)), "{} vs {:?}", cur, nf);
        }
    }
}

// ---- enumerations ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn translation_round_trips(n in 0u64..80) {
        let (u, b) = (rep_unary(), rep_binary_marked());
        let eu = Enumerator::new(unary_successor(), rho_c(0), 100_000);
        let eb = Enumerator::new(binary_marked_successor(), word_tape(&[false]), 100_000);
        let Ok(Translation::Translated { output, .. }) = translate_via_enumerators(&u, &b, &eu, &eb, &rho_c(n), 100) else {
            return Err(TestCaseError::fail("not translated"));
        };
        prop_assert_eq!(Some(Element::Nat(n)), b.decode(&output));
        let back = translate_via_enumerators(&b, &u, &eb, &eu, &output, 100).unwrap();
        prop_assert_eq!(back, Translation::Translated { output: rho_c(n), index: n as usize });
    }

    #[test]
    fn larger_budgets_keep_answers(n in 0u64..30, budget in 0u64..4000, iters in 0usize..40) {
        let naturals = Enumerator::new(unary_successor(), rho_c(0), 100_000);
        let small = invert_via_enumeration(&unary_successor(), &naturals, &rho_c(n), budget);
        if let Inversion::FoundPreimage { .. } = small {
            prop_assert_eq!(invert_via_enumeration(&unary_successor(), &naturals, &rho_c(n), 2 * budget + 1), small);
        }
        let evens = Enumerator::new(unary_add_two(), rho_c(0), 100_000);
        if let a @ Acceptance::Accepted(_) = acceptor_from_enumerator(&evens, &rho_c(n), iters) {
            prop_assert_eq!(acceptor_from_enumerator(&evens, &rho_c(n), 2 * iters + 1), a);
        }
    }

    #[test]
    fn dovetailing_is_deterministic_and_duplicate_free(rounds in 1u64..70) {
        let acc = Acceptor::new(starts_with_one_acceptor());
        let w = rep_words();
        let u: Universe = Arc::new(move |k| w.encode(&Element::Nat(k)).unwrap());
        let a = enumerator_from_acceptor(&acc, triangular_schedule(), u.clone()).run(rounds, usize::MAX);
        let b = enumerator_from_acceptor(&acc, triangular_schedule(), u).run(rounds, usize::MAX);
        prop_assert_eq!(&a, &b);
        let distinct: HashSet<&Tape> = a.iter().map(|e| &e.tape).collect();
        prop_assert_eq!(distinct.len(), a.len());
        // emitted in (round, index) order
        prop_assert!(a.windows(2).all(|p| (p[0].round, p[0].index) < (p[1].round, p[1].index)));
    }
}
