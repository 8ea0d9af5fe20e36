mod common;

use gpcross::drawing::{planarize, validate_config};
use gpcross::embed::{
    brute_force_embed_oracle, brute_force_embed_oracle_with, embed_decide, euler_genus, EmbedLimits, SurfaceBudget,
};
use gpcross::graph::Graph;
use gpcross::solver::enumerate_all_configs;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BUDGETS: [SurfaceBudget; 2] = [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE];

fn agree(g: &Graph, constraints: &[gpcross::embed::Interleave]) {
    for b in BUDGETS {
        let fast = embed_decide(g, b, constraints, &EmbedLimits::unlimited()).unwrap();
        let slow = brute_force_embed_oracle_with(g, b, constraints).unwrap();
        assert_eq!(
            fast.scheme().is_some(),
            slow.is_some(),
            "{:?} budget {}",
            g.edges(),
            b.max_euler_genus
        );
        if let Some(s) = fast.scheme() {
            assert!(euler_genus(g, s).unwrap() <= i64::from(b.max_euler_genus));
        }
    }
}

#[test]
fn small_connected_graphs() {
    let graphs = common::connected_graphs(5);
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21);
    for g in &graphs {
        agree(g, &[]);
    }
}

#[test]
fn random_seven_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..40 {
        let g = common::random_connected(7, 2 + i % 7, &mut rng);
        agree(&g, &[]);
    }
}

#[test]
fn constrained_planarizations() {
    let bases = [Graph::complete(5), Graph::complete_bipartite(3, 3), Graph::complete(4)];
    for g in &bases {
        for c in 1..=2 {
            for config in enumerate_all_configs(g, c).step_by(3) {
                assert!(validate_config(g, &config).is_empty());
                let p = planarize(g, &config).unwrap();
                agree(&p.graph, &p.constraints);
            }
        }
    }
}

#[test]
fn oracle_rejects_large_inputs() {
    let g = gpcross::gp::build_generalized_petersen(9, 3).unwrap();
    assert!(brute_force_embed_oracle(g.graph(), SurfaceBudget::SPHERE).is_err());
}
