//! The 12-vertex, 18-edge subgraph of P(9,3) that does not embed in the
//! projective plane while every single-edge deletion does.

use gpcross::embed::{embed_decide, EmbedLimits, SurfaceBudget};
use gpcross::repro::{build_f13_candidate, f13_minimality_check};

fn main() -> gpcross::error::Result<()> {
    let g = build_f13_candidate()?;
    println!(
        "{} vertices, {} edges, degrees {:?}",
        g.vertex_count(),
        g.edge_count(),
        g.degree_sequence()
    );
    let whole = embed_decide(&g, SurfaceBudget::PROJECTIVE_PLANE, &[], &EmbedLimits::unlimited())?;
    println!("projective embedding: {}", whole.scheme().is_some());
    for e in 0..g.edge_count() {
        let h = g.without_edges(&[e]);
        let ok = embed_decide(&h, SurfaceBudget::PROJECTIVE_PLANE, &[], &EmbedLimits::unlimited())?;
        println!("  without {:?}: {}", g.edge(e), ok.scheme().is_some());
    }
    let rec = f13_minimality_check(None)?;
    println!("{}: {} ({})", rec.id, rec.status.as_str(), rec.computed);
    Ok(())
}
