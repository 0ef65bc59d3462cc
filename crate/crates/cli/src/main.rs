use clap::Parser;

fn main() {
    let cli = transversal_cli::Cli::parse();
    std::process::exit(transversal_cli::run(cli));
}
