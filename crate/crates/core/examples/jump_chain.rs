//! ∅, ∅′, ∅″ over the tape numbering, every answer certified.

use tapelab::machine::k_approx;
use tapelab::oracle::{empty_jump_chain, jump_oracles, write_certificates};

fn main() {
    let (fuel, bound) = (1000, 200);
    let chain = empty_jump_chain(2, fuel, bound);
    let oracles = jump_oracles(2, fuel);
    for a in &chain {
        let replay = a.level == 0 || a.replay(&oracles[a.level - 1]);
        println!(
            "level {}: {} members, {} non-members, {} unknown, replay {}",
            a.level,
            a.members().len(),
            a.non_members().len(),
            a.unknown().len(),
            if replay { "ok" } else { "FAILED" }
        );
    }
    let k: Vec<u64> = k_approx(fuel, bound as u64).into_iter().collect();
    println!("level 1 equals bounded K: {}", chain[1].members() == k);
    println!("\nnon-members of ∅′ and their proofs:");
    for line in write_certificates(&chain[1]).lines().filter(|l| l.starts_with("no")).take(8) {
        println!("  {line}");
    }
}
