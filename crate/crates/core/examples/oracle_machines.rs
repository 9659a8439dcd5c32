//! Oracle machines: a relativized transform from u⁰ to u¹, and a bounded
//! search for mistakes in claimed jump deciders.

use tapelab::machine::Conventions;
use tapelab::oracle::{
    flag_table, flag_transform_witness, jump_approx, jump_decider_falsifier, relativized_verify_transformable,
    table_decider, Oracle,
};
use tapelab::pairing::combinators::machine_const_tape;
use tapelab::repr::{rep_u_k, rep_words};

fn main() {
    let flags = Oracle::bounded_halting(500);
    let table = flag_table(&flags, 40);
    let (u0, u1) = (rep_u_k(0, vec![]), rep_u_k(1, vec![flags]));
    let w = flag_transform_witness();
    println!("u0 -> u1 with the flag table: {}", relativized_verify_transformable(&u0, &u1, &w, &table, 40, 100_000));
    println!("past the table:               {}", relativized_verify_transformable(&u0, &u1, &w, &table, 50, 100_000));

    let words = rep_words();
    let empty = Oracle::empty();
    let c = Conventions::sigma4();
    let candidates = [
        ("always no", machine_const_tape(&c.no_tape)),
        ("always yes", machine_const_tape(&c.yes_tape)),
        ("certificate table", table_decider(&jump_approx(&empty, &words, 1000, 60))),
    ];
    for (name, m) in candidates {
        println!("{name:<18} {:?}", jump_decider_falsifier(&m, &empty, &words, 60, 1000));
    }
}
