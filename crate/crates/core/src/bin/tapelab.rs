use std::io::Write;

fn main() {
    let (code, out, err) = tapelab::cli::run_cli(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
