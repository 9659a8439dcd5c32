//! Enumerators and acceptors, converted into each other.

use std::sync::Arc;

use tapelab::enumerate::{
    acceptor_from_enumerator, acceptor_from_enumerator_tm, enumerator_from_acceptor, triangular_schedule, Acceptor,
    Enumerator, Universe,
};
use tapelab::machines::{starts_with_one_acceptor, unary_add_two};
use tapelab::repr::{rep_words, rho_c, Element};

fn main() {
    // evens in unary, as an enumerator: 0, 2, 4, …
    let evens = Enumerator::new(unary_add_two(), rho_c(0), 10_000);
    for n in [0, 6, 3] {
        println!(
            "is {n} enumerated?  scan: {:?}  via eq machine: {:?}",
            acceptor_from_enumerator(&evens, &rho_c(n), 50),
            acceptor_from_enumerator_tm(&evens, &rho_c(n), 50)
        );
    }

    // words starting with 1, from an acceptor by dovetailing
    let acc = Acceptor::new(starts_with_one_acceptor());
    let words = rep_words();
    let universe: Universe = Arc::new(move |k| words.encode(&Element::Nat(k)).unwrap());
    let mut d = enumerator_from_acceptor(&acc, triangular_schedule(), universe);
    println!();
    for e in d.run(40, 12) {
        println!("round {:>2}: word #{:<2} {}", e.round, e.index, e.tape);
    }
}
