use clap::Parser;
use kkh_cli::{run, Cli, EXIT_INVARIANT};

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.render(cli.command.args().format));
            if let Some(v) = outcome.violation {
                eprintln!("kkh: internal invariant violated: {v}");
                std::process::exit(EXIT_INVARIANT);
            }
        }
        Err(f) => {
            eprintln!("kkh: {}", f.message);
            std::process::exit(f.code);
        }
    }
}
