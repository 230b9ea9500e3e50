use clap::Parser;
use liegal_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    let text = report.render(cli.json);
    if report.exit_code >= 2 && !cli.json {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    std::process::exit(report.exit_code);
}
