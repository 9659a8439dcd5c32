use super::{Machine, MachineError, OraclePorts, Quintuple, StateId};
use crate::tape::Symbol;

/// Sequential composition: run `f`, then `g` on whatever `f` left behind.
///
/// States are renamed disjointly (`f.*`, `g.*`). Every transition of `f`
/// into one of its halt states goes straight to `g`'s start; a missing
/// quintuple in an ordinary state of `f` (the implicit reject) becomes a
/// stay-put transition into `g`'s start, so step counts add up exactly.
///
/// Head positions are not normalised in between: `g` starts wherever `f`
/// stopped. For `compose(f, g)` to behave as function composition `f`
/// should obey the origin convention, see
/// [`check_origin_convention`](super::check_origin_convention).
pub fn compose(f: &Machine, g: &Machine) -> Result<Machine, MachineError> {
    if f.alphabet() != g.alphabet() {
        return Err(MachineError::AlphabetMismatch(
            f.alphabet().symbols_string(),
            g.alphabet().symbols_string(),
        ));
    }
    if f.oracle().is_some() && g.oracle().is_some() {
        return Err(MachineError::TwoOracles);
    }
    let a = f.alphabet().len();
    let nf = f.num_states();
    let ng = g.num_states();
    let g_start = nf + g.start();
    let redirect = |s: StateId| if f.is_halt(s) { g_start } else { s };

    let mut names = Vec::with_capacity(nf + ng);
    names.extend((0..nf).map(|s| format!("f.{}", f.state_name(s))));
    names.extend((0..ng).map(|s| format!("g.{}", g.state_name(s))));

    let mut halting = vec![false; nf + ng];
    let mut table = vec![None; (nf + ng) * a];
    for s in 0..nf {
        if f.is_halt(s) || f.is_query(s) {
            continue;
        }
        for sym in 0..a {
            let q = match f.quintuple(s, sym as Symbol) {
                Some(q) => Quintuple {
                    next: redirect(q.next),
                    ..q
                },
                None => Quintuple {
                    write: sym as Symbol,
                    mv: super::Move::S,
                    next: g_start,
                },
            };
            table[s * a + sym] = Some(q);
        }
    }
    for s in 0..ng {
        halting[nf + s] = g.is_halt(s);
        for sym in 0..a {
            if let Some(q) = g.quintuple(s, sym as Symbol) {
                table[(nf + s) * a + sym] = Some(Quintuple {
                    next: nf + q.next,
                    ..q
                });
            }
        }
    }
    let oracle = match (f.oracle(), g.oracle()) {
        (Some(p), None) => Some(OraclePorts {
            query: p.query,
            yes: redirect(p.yes),
            no: redirect(p.no),
        }),
        (None, Some(p)) => Some(OraclePorts {
            query: nf + p.query,
            yes: nf + p.yes,
            no: nf + p.no,
        }),
        _ => None,
    };
    let start = redirect(f.start());
    Ok(Machine::from_parts(
        f.alphabet().clone(),
        names,
        start,
        halting,
        table,
        oracle,
    ))
}

/// Left-to-right composition of a non-empty list.
pub fn compose_all(machines: &[Machine]) -> Result<Machine, MachineError> {
    let (first, rest) = machines.split_first().expect("compose_all needs a machine");
    rest.iter().try_fold(first.clone(), |acc, m| compose(&acc, m))
}
