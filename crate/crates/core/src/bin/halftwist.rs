use std::io;

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let code = halftwist::cli::run(
        std::env::args_os(),
        &mut input,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
