//! Runs the default claim suite and prints the result table.
//!
//! `cargo run --release --example reproduce_claims -- 7`  (seed)

use gpcross::repro::{run_suite, ReproOptions};

fn main() -> gpcross::error::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_suite(&ReproOptions {
        seed,
        ..ReproOptions::default()
    })?;
    print!("{}", report.table());
    println!("verdict: {}", report.verdict.as_str());
    Ok(())
}
