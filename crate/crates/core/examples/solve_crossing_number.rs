//! Exact crossing numbers of P(n, k) in the sphere and the projective plane.
//!
//! `cargo run --release --example solve_crossing_number -- 12 4`

use std::time::Duration;

use gpcross::embed::SurfaceBudget;
use gpcross::gp::build_generalized_petersen;
use gpcross::solver::{solve_crossing_number, SolveRequest};

fn main() -> gpcross::error::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (9, 3),
    };
    let p = build_generalized_petersen(n, k)?;
    for budget in [SurfaceBudget::PROJECTIVE_PLANE, SurfaceBudget::SPHERE] {
        let mut req = SolveRequest::new(p.graph().clone(), budget, 8);
        req.symmetry = p.symmetry_generators();
        req.time_budget = Some(Duration::from_secs(600));
        let r = solve_crossing_number(&req)?;
        println!(
            "P({n},{k}) {}: {} ({:.2?}, group order {})",
            budget.name(),
            r.summary(),
            r.elapsed,
            r.group_order
        );
        for l in &r.levels {
            println!(
                "  c={} configs={} orbits={} refuted={}",
                l.crossings, l.enumerated, l.canonical, l.refuted
            );
        }
        if let Some(w) = &r.witness {
            let pairs: Vec<String> = w
                .config
                .crossings()
                .iter()
                .map(|&(e, f)| format!("{} x {}", p.edge_name(e), p.edge_name(f)))
                .collect();
            println!("  witness: {}", pairs.join(", "));
        }
    }
    Ok(())
}
