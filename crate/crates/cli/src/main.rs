use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use virasoro_hc_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = virasoro_hc_cli::run(&cli);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(result.status as u8)
}
