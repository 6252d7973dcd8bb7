fn main() {
    let outcome = hwglue_cli::run(std::env::args_os());
    if outcome.exit_code == 0 {
        print!("{}", outcome.output);
    } else if outcome.report.is_none() {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    std::process::exit(outcome.exit_code);
}
