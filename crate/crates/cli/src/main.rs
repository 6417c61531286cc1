use std::io::Write;

fn main() {
    let outcome = ffsums_cli::run(std::env::args_os(), std::env::var(ffsums_cli::ENUM_BOUND_ENV).ok());
    std::io::stdout().write_all(&outcome.stdout).expect("write stdout");
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
