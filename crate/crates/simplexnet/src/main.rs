use clap::Parser;

fn main() -> anyhow::Result<()> {
    simplexnet::commands::run(simplexnet::commands::Cli::parse())
}
