//! Random search for a projective drawing of P(3k, k) with c crossings.
//!
//! `cargo run --release --example randomized_probe -- 5 3 1 600`
//! (k, c, seed, seconds)

use std::time::Duration;

use gpcross::embed::SurfaceBudget;
use gpcross::gp::build_generalized_petersen;
use gpcross::solver::{randomized_probe, Symmetry};

fn main() -> gpcross::error::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, c, seed, secs) = match args[..] {
        [k, c, seed, secs] => (k as usize, c as usize, seed, secs),
        _ => (4, 2, 1, 60),
    };
    let p = build_generalized_petersen(3 * k, k)?;
    let sym = Symmetry::generated(p.graph(), &p.symmetry_generators())?;
    let r = randomized_probe(
        p.graph(),
        c,
        SurfaceBudget::PROJECTIVE_PLANE,
        &sym,
        seed,
        Some(Duration::from_secs(secs)),
    )?;
    println!(
        "P({},{k}) c={c} seed={seed}: {} after {} samples, {} distinct orbits, {:.1?}",
        3 * k,
        r.status().as_str(),
        r.samples,
        r.tested,
        r.elapsed
    );
    if let Some(w) = &r.witness {
        println!("witness verified: {}", w.verify().passed());
        for &(e, f) in w.config.crossings() {
            println!("  {} x {}", p.edge_name(e), p.edge_name(f));
        }
    }
    Ok(())
}
