use clap::Parser;

fn main() {
    let cli = mullineux::cli::Cli::parse();
    std::process::exit(mullineux::cli::run(cli));
}
