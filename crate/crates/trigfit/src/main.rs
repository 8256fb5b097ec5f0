use clap::error::ErrorKind;
use clap::Parser;

use trigfit::cli::{run, Cli, EXIT_FAILURE};

fn main() {
    match Cli::try_parse() {
        Ok(cli) => std::process::exit(run(cli)),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            let text = e.to_string();
            let first = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("error[E_USAGE]: {first}");
            std::process::exit(EXIT_FAILURE);
        }
    }
}
