use std::io::Write;

use clap::Parser;

fn main() {
    let cli = match loewy_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { loewy_cli::exit::PARSE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = loewy_cli::run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
