//! Build a machine, run it, read it back from its file form, compose it.

use tapelab::machine::{compose, parse_machine, run, run_traced, write_machine};
use tapelab::machines::unary_successor;
use tapelab::{parse_tape, Alphabet, MachineBuilder, Move};

fn main() {
    let s4 = Alphabet::sigma4();
    let succ = unary_successor();
    let input = parse_tape("^1110$", &s4).unwrap();
    let (res, excursion) = run_traced(&succ, &input, 1000);
    println!("succ on {input}: {res:?} (head went {excursion} cells out)");

    // the text form round-trips
    let text = write_machine(&succ);
    println!("\n{text}");
    let again = parse_machine(&text).unwrap();
    let rerun = run(&again, &input, 1000);
    assert_eq!((rerun.halted_tape(), rerun.steps()), (res.halted_tape(), res.steps()));

    let add2 = compose(&succ, &succ).unwrap();
    for n in 0..4 {
        let t = parse_tape(&format!("^{}0$", "1".repeat(n + 1)), &s4).unwrap();
        println!("{t} -> {}", run(&add2, &t, 10_000).halted_tape().unwrap());
    }

    // a missing quintuple halts (rejects) after one step
    let mut b = MachineBuilder::new(&Alphabet::binary());
    b.start("s").halt("h").rule("s", '1', '0', Move::R, "h");
    let m = b.build().unwrap();
    let blank = parse_tape("^0", &Alphabet::binary()).unwrap();
    println!("\nimplicit reject: {:?}", run(&m, &blank, 10));
}
