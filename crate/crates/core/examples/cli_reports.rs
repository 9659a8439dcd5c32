//! The command line in-process: same reports, same exit codes.

use tapelab::cli::run_cli;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let runs: Vec<Vec<String>> = vec![
        vec!["run".into(), format!("{data}/machines/unary_successor.tm"), "^110$".into()],
        vec!["refute-eq".into(), format!("{data}/machines/naive_binary_comparator.tm")],
        vec!["jump".into(), "--level".into(), "1".into(), "--fuel".into(), "1000".into(), "--bound".into(), "20".into(), "--format".into(), "json".into()],
        vec!["lambda-demo".into(), format!("{data}/lambda/delta.lam"), format!("{data}/lambda/delta.lam")],
    ];
    for args in runs {
        let (code, out, err) = run_cli(std::iter::once("tapelab".to_string()).chain(args));
        print!("{out}{err}");
        println!("exit {code}\n");
    }
}
