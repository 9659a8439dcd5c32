//! tapelab — an executable computability workbench.
//!
//! The crate is organised bottom-up:
//!
//! * [`tape`] — alphabets, finite-support tapes, folding and tape numbering;
//! * [`machine`] — quintuple machines, fuel-bounded runs, composition,
//!   machine files and the machine numbering (`W_{e,n}`, bounded `K`);
//! * [`pairing`] — meta and machine-level pairings plus combinator machines;
//! * [`machines`] — the stock machines used throughout the examples;
//! * [`repr`] — representations of abstract countable sets and witness checks;
//! * [`enumerate`] — c.e. conversions, inversion and enumerator-based translation;
//! * [`relations`] — transformability / strength evidence and the
//!   two-sided binary comparator refuter;
//! * [`oracle`] — certified oracles, bounded jumps and the `∅^(n)` chain;
//! * [`lambda`] — normal-order λ-calculus and the halting-flag detector;
//! * [`cli`] — the `tapelab` command-line front-end.
//!
//! Everything is fuel-bounded: divergence is only ever reported as
//! "exhausted" or "unknown", never decided.

pub mod cli;
pub mod enumerate;
pub mod lambda;
pub mod machine;
pub mod machines;
pub mod oracle;
pub mod pairing;
pub mod relations;
pub mod repr;
pub mod tape;

pub use machine::{Machine, MachineBuilder, Move, RunResult};
pub use tape::{parse_tape, render_tape, Alphabet, Tape};
