//! Adding the diagonal halting flag to unary codes: the flag becomes a
//! two-step read, but the successor becomes out of reach.

use tapelab::machine::run;
use tapelab::machines::{flag_probe, unary_successor};
use tapelab::oracle::Oracle;
use tapelab::pairing::combinators::{machine_proj1, machine_proj2};
use tapelab::relations::{function_by_name, strength_report, verify_transformable, Benchmark, Codomain};
use tapelab::repr::{certified_flag, nat_function, rep_halting_augmented, rep_unary, Element};

fn main() {
    let flags = Oracle::bounded_halting(1000);
    let aug = rep_halting_augmented(flags.clone());
    let u = rep_unary();

    println!(" n  flag  code");
    for n in 0..10 {
        match aug.encode(&Element::Nat(n)) {
            Ok(t) => {
                let probe = run(&flag_probe(), &t, 10);
                let read = probe.halted_tape().map(|t| t.alphabet().char_of(t.read()));
                println!("{n:>2}  {:?}  {t}  probe reads {read:?}", certified_flag(&flags, n).ok());
            }
            Err(e) => println!("{n:>2}  {e}"),
        }
    }

    println!("\nπ₁ takes augmented to unary: {}", verify_transformable(&aug, &u, &machine_proj1(), 50, 100_000));

    let bs = vec![
        Benchmark::new("successor", nat_function(|n| Some(n + 1)), Codomain::Same)
            .with_witness("unary", unary_successor()),
        Benchmark::new("flag", function_by_name("flag", &[flags]).unwrap(), Codomain::Fixed(rep_unary()))
            .with_witness("halting-augmented", machine_proj2()),
    ];
    let r = strength_report(&u, &aug, &bs, 50, 100_000);
    for row in &r.rows {
        println!("{:<10} unary: {:<22} augmented: {}", row.name, row.x, row.y);
    }
    println!("verdict: {}", r.verdict);
}
