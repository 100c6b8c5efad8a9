use clap::Parser;

fn main() {
    std::process::exit(nlfm_pia::cli::run(nlfm_pia::cli::Cli::parse()));
}
