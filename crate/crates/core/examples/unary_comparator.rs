//! Equality is easy when both numbers are written in unary around the head.

use tapelab::machine::{run, Conventions};
use tapelab::machines::unary_pair_comparator;
use tapelab::repr::{rep_pair_unary_twosided, Element};

fn main() {
    let rep = rep_pair_unary_twosided();
    let eq = unary_pair_comparator();
    let conv = Conventions::binary();
    let mut wrong = 0;
    for n in 0..=12 {
        let row: String = (0..=12)
            .map(|m| {
                let t = rep.encode(&Element::Pair(n, m)).unwrap();
                let ans = run(&eq, &t, 100_000).halted_tape().and_then(|t| conv.classify(t));
                if ans != Some(n == m) {
                    wrong += 1;
                }
                if ans == Some(true) { '=' } else { '.' }
            })
            .collect();
        println!("{n:>2} {row}");
    }
    println!("{wrong} wrong answers");
}
