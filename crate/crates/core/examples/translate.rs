//! Translating unary codes to binary and back with two lockstep enumerators.

use tapelab::enumerate::{translate_via_enumerators, Enumerator, Translation};
use tapelab::machines::{binary_marked_successor, unary_successor};
use tapelab::pairing::word_tape_str;
use tapelab::repr::{rep_binary_marked, rep_unary, rho_c};

fn main() {
    let (u, b) = (rep_unary(), rep_binary_marked());
    let eu = Enumerator::new(unary_successor(), rho_c(0), 100_000);
    let eb = Enumerator::new(binary_marked_successor(), word_tape_str("0"), 100_000);
    for n in [0, 5, 12, 37] {
        let Ok(Translation::Translated { output, index }) = translate_via_enumerators(&u, &b, &eu, &eb, &rho_c(n), 100)
        else {
            panic!("no translation for {n}")
        };
        let back = translate_via_enumerators(&b, &u, &eb, &eu, &output, 100).unwrap();
        println!("{} -> {output} (step {index}) -> {back:?}", rho_c(n));
    }
    println!("budget 0: {:?}", translate_via_enumerators(&u, &b, &eu, &eb, &rho_c(5), 0));
}
