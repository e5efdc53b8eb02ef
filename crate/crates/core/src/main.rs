use clap::Parser;
use qtense::cli::{run, Cli, USAGE_EXIT};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.to_text());
            std::process::exit(outcome.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(USAGE_EXIT);
        }
    }
}
