use clap::Parser;
use dstfrft::cli::{run, Cli};

fn main() {
    let status = run(Cli::parse());
    std::process::exit(status as i32);
}
