use clap::Parser;
use facelab::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
