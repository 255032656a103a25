use clap::Parser;

fn main() {
    let cli = okounkov::cli::Cli::parse();
    std::process::exit(okounkov::cli::run(cli));
}
