//! Representations of ℕ and witness checks for functions between them.

use tapelab::machines::{binary_marked_successor, unary_successor};
use tapelab::repr::{
    build_constant_machine, check_witness, nat_function, rep_binary_marked, rep_unary, rep_words, Element,
};

fn main() {
    let reps = [rep_unary(), rep_binary_marked(), rep_words()];
    for r in &reps {
        let codes: Vec<String> = (0..6).map(|n| r.encode(&Element::Nat(n)).unwrap().to_string()).collect();
        println!("{:<14} {}", r.name(), codes.join("  "));
        assert_eq!(r.check_prefix(500), Ok(500));
    }

    let succ = nat_function(|n| Some(n + 1));
    let u = rep_unary();
    let b = rep_binary_marked();
    println!("\nunary successor:  {}", check_witness(&unary_successor(), &succ, &u, &u, 100, 100_000));
    println!("binary successor: {}", check_witness(&binary_marked_successor(), &succ, &b, &b, 100, 100_000));
    println!("wrong machine:    {}", check_witness(&unary_successor(), &succ, &b, &b, 100, 100_000));

    let seven = build_constant_machine(&u, &Element::Nat(7)).unwrap();
    let k7 = nat_function(|_| Some(7));
    println!("constant 7:       {}", check_witness(&seven, &k7, &u, &u, 30, 100_000));
}
