//! No machine compares two-sided binary numbers: it answers "equal" on
//! (n, n) after s steps, so it also does on (n + 2^s, n), which agrees
//! with (n, n) on every cell the run could reach.

use tapelab::machines::{always_yes, naive_binary_comparator};
use tapelab::relations::{refute_binary_comparator, Refutation};
use tapelab::Alphabet;

fn main() {
    let candidates = [
        ("naive scan of 8 cells", naive_binary_comparator(8)),
        ("always equal", always_yes(&Alphabet::binary())),
    ];
    for (name, m) in candidates {
        match refute_binary_comparator(&m, 5, 100_000) {
            Refutation::Transcript(t) => {
                println!("{name}: says ν on (5, 5) after s_n = {} steps", t.s_n);
                println!("  m = 5 + 2^{} = {}", t.s_n, t.m);
                println!("  visited cells {:?}, excursion {}", t.window, t.excursion);
                println!("  on (m, 5): {:?}", t.run_mn.halted_tape().map(|t| t.to_string()));
                println!("  wrong answer: {}, replay: {:?}", t.wrong_answer(), t.replay(&m, 100_000));
            }
            Refutation::NotApplicable { .. } => println!("{name}: no answer on (5, 5)"),
        }
    }
}
