//! Every comparison between two representations factors through the
//! endorepresentation ρx∘ρy⁻¹ against the identity on ρy's image.

use tapelab::machines::{binary_marked_successor, unary_successor};
use tapelab::relations::{endorep_strength_check, endorepresentation, Benchmark, Codomain};
use tapelab::repr::{nat_function, rep_binary_marked, rep_unary};

fn main() {
    let (u, b) = (rep_unary(), rep_binary_marked());
    let e = endorepresentation(&b, &u);
    for x in e.domain.take(5) {
        println!("{x} ↦ {}", e.encode(&x).unwrap());
    }
    let bs = vec![Benchmark::new("successor", nat_function(|n| Some(n + 1)), Codomain::Same)
        .with_witness("unary", unary_successor())
        .with_witness("binary-marked", binary_marked_successor())];
    let r = endorep_strength_check(&b, &u, &bs, 40, 100_000);
    println!("direct: {}  endo: {}  match: {}", r.direct.verdict, r.endo.verdict, r.matches);
}
