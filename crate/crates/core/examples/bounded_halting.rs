//! Bounded diagonal halting and the static non-halting detector.

use tapelab::machine::{decode_machine, detect_non_halting, encode_machine, k_approx, EmptyOracle};
use tapelab::machines::{never_halt, unary_successor};
use tapelab::tape::tape_of_number;
use tapelab::Alphabet;

fn main() {
    let k = k_approx(500, 64);
    println!("K within 500 steps, indices < 64: {k:?}");

    for e in [3u32, 17, 40, 63] {
        let m = decode_machine(&e.into());
        let t = tape_of_number(&e.into());
        println!("M{e} on its own number: {:?}", detect_non_halting(&m, &EmptyOracle, &t, 500));
    }

    let spin = never_halt(&Alphabet::sigma4());
    let t = tape_of_number(&0u32.into()).relabel(&Alphabet::sigma4());
    if let Some(t) = t {
        println!("spinner: {:?}", detect_non_halting(&spin, &EmptyOracle, &t, 100));
    }
    println!("successor is machine #{}", encode_machine(&unary_successor()));
}
