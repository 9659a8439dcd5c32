//! Cantor pairing, tape pairings and the combinator machines δ, σ, π₁, π₂, eq.

use tapelab::pairing::combinators::{apply, machine_duplicate, machine_eq, machine_proj1, machine_proj2, machine_swap};
use tapelab::pairing::{cantor, cantor_inverse, pair_mach, unpair_mach, word_tape_str};

fn main() {
    for z in 0u32..6 {
        let (x, y) = cantor_inverse(&z.into());
        println!("{z} = ⟨{x}, {y}⟩");
        assert_eq!(cantor(&x, &y), z.into());
    }

    let (a, b) = (word_tape_str("10"), word_tape_str("111"));
    let p = pair_mach(&a, &b).unwrap();
    println!("\n⟨{a}, {b}⟩ = {p}");
    assert_eq!(unpair_mach(&p), Some((a.clone(), b.clone())));

    let fuel = 100_000;
    println!("δ({a})   = {}", apply(&machine_duplicate(), &a, fuel).unwrap());
    println!("σ({p}) = {}", apply(&machine_swap(), &p, fuel).unwrap());
    println!("π₁({p}) = {}", apply(&machine_proj1(), &p, fuel).unwrap());
    println!("π₂({p}) = {}", apply(&machine_proj2(), &p, fuel).unwrap());
    let same = pair_mach(&a, &a).unwrap();
    println!("eq({p}) = {}", apply(&machine_eq(), &p, fuel).unwrap());
    println!("eq({same}) = {}", apply(&machine_eq(), &same, fuel).unwrap());
}
