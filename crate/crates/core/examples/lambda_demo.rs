//! The λ halting flag: H = λm.m (λx.λy.λz.z) reads h out of λa.a L I h
//! without ever evaluating L I.

use tapelab::lambda::{bundled_cases, certify_flag, demo_halting, parse_term, reduce_normal_order};

fn main() {
    let t = parse_term("(λx.λy.x) A ((λx.x x) (λx.x x))").unwrap();
    println!("{t}  ->  {:?}\n", reduce_normal_order(&t, 20));

    for (name, l, i) in bundled_cases() {
        let flag = certify_flag(&l, &i, 100).unwrap();
        let demo = demo_halting(&l, &i, &flag).unwrap();
        println!("{name}: h = {} ({:?})", flag.term, flag.certificate);
        print!("{}", demo.transcript());
        println!(
            "{} β-steps, {} chain contractions, L I untouched: {}\n",
            demo.beta_steps, demo.chain_contractions, demo.untouched
        );
    }
}
