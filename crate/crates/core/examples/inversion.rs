//! Inverting an injective machine by searching its domain's enumeration.

use tapelab::enumerate::{invert_via_enumeration, Enumerator};
use tapelab::machines::unary_successor;
use tapelab::repr::rho_c;

fn main() {
    let naturals = Enumerator::new(unary_successor(), rho_c(0), 100_000);
    let succ = unary_successor();
    for n in [7, 20, 0] {
        let r = invert_via_enumeration(&succ, &naturals, &rho_c(n), 200_000);
        println!("succ⁻¹({}) = {r:?}", rho_c(n));
    }
}
