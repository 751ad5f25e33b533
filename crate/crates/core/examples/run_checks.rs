//! Loads an instance file and runs every checker, as `ggal check all` does.
//!
//!     cargo run --example run_checks -- crates/core/fixtures/ex3.ggal

use clap::Parser;
use ggal::cli::{run, Cli};

fn main() -> ggal::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ex2.ggal").into());
    let cli = Cli::parse_from(["ggal", "check", "all", &path]);
    let report = run(&cli.command)?;
    for c in &report.checks {
        println!("{:<24} {}", c.name, c.status);
    }
    println!("{}", if report.failed() { "some checks failed" } else { "all checks passed or not applicable" });
    Ok(())
}
