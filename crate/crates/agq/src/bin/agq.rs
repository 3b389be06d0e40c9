use clap::Parser;

fn main() {
    let cli = agq::cli::Cli::parse();
    std::process::exit(agq::cli::run(cli));
}
