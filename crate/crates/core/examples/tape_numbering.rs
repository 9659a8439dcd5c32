//! Tapes, folding around the head, and the bijective tape numbering.

use tapelab::tape::{fold, tape_number, tape_of_index, unfold, word_number};
use tapelab::{parse_tape, Alphabet};

fn main() {
    let a = Alphabet::binary();
    println!("the first tapes over {{0,1}}:");
    for n in 0..12 {
        let t = tape_of_index(n, &a);
        assert_eq!(tape_number(&t), n.into());
        println!("  #{n:>2}  {t}");
    }

    let t = parse_tape("10^110", &a).unwrap();
    let w = fold(&t);
    println!("\n{t} folds to {:?} (number {})", w.symbols(), word_number(&w));
    assert_eq!(unfold(&w, t.head()), t);

    let s4 = Alphabet::sigma4();
    let u = parse_tape("^110$", &s4).unwrap();
    println!("{u} over _01$ has number {}", tape_number(&u));
}
