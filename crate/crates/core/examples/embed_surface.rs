//! Decides sphere and projective-plane embeddability of a few classic graphs.

use gpcross::embed::{cycle_one_sided, embed_decide, euler_genus, EmbedLimits, EmbedOutcome, SurfaceBudget};
use gpcross::gp::build_generalized_petersen;
use gpcross::graph::Graph;

fn main() -> gpcross::error::Result<()> {
    let graphs = [
        ("K5", Graph::complete(5)),
        ("K6", Graph::complete(6)),
        ("K7", Graph::complete(7)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("Petersen", build_generalized_petersen(5, 2)?.into_graph()),
        ("P(9,3)", build_generalized_petersen(9, 3)?.into_graph()),
    ];
    for (name, g) in &graphs {
        for budget in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
            match embed_decide(g, budget, &[], &EmbedLimits::unlimited())? {
                EmbedOutcome::Embedded(s) => {
                    let genus = euler_genus(g, &s)?;
                    let mut line = format!("{name:<9} {:<10} embeds, Euler genus {genus}", budget.name());
                    let tri: Option<Vec<usize>> = [(0, 1), (1, 2), (0, 2)]
                        .iter()
                        .map(|&(a, b)| g.edge_index(a, b))
                        .collect();
                    if let Some(tri) = tri {
                        if cycle_one_sided(g, &s, &tri)? {
                            line.push_str(", triangle 123 one-sided");
                        }
                    }
                    println!("{line}");
                }
                EmbedOutcome::NoEmbedding => println!("{name:<9} {:<10} no embedding", budget.name()),
                EmbedOutcome::ResourceExhausted => println!("{name:<9} {:<10} gave up", budget.name()),
            }
        }
    }
    Ok(())
}
