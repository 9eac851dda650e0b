use clap::Parser;
use pind_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli, std::env::args().collect());
    let out = outcome.render(cli.json);
    if outcome.exit_code() == 0 || cli.json {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    std::process::exit(outcome.exit_code());
}
