mod common;

use gpcross::canon::{canonical_form, is_automorphism, PermGroup};
use gpcross::drawing::{planarize, validate_config, CrossingConfig, HalfInteger};
use gpcross::embed::{default_scheme, euler_genus, trace_faces};
use gpcross::gp::{build_generalized_petersen, edge_partition};
use gpcross::graph::Graph;
use gpcross::repro::additivity_holds;
use gpcross::solver::{crossable_pairs, Symmetry};
use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p124() -> gpcross::gp::GpGraph {
    build_generalized_petersen(12, 4).unwrap()
}

fn random_config(g: &Graph, seed: u64, c: usize) -> CrossingConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = crossable_pairs(g);
    pairs.shuffle(&mut rng);
    CrossingConfig::new(pairs.into_iter().take(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planarization_round_trips(seed in any::<u64>(), c in 0usize..6) {
        let g = p124().into_graph();
        let config = random_config(&g, seed, c);
        prop_assert!(validate_config(&g, &config).is_empty());
        let p = planarize(&g, &config).unwrap();
        prop_assert_eq!(p.graph.vertex_count(), g.vertex_count() + config.len());
        prop_assert_eq!(p.graph.edge_count(), g.edge_count() + 2 * config.len());
        let (back, back_config) = p.recover().unwrap();
        prop_assert_eq!(back, g);
        prop_assert_eq!(back_config, config);
    }

    #[test]
    fn charges_add_up_on_rim_only_configs(seed in any::<u64>(), c in 0usize..7) {
        let gp = p124();
        let part = edge_partition(&gp).unwrap();
        let rim: Vec<usize> = part.rim_blocks().iter().flatten().copied().collect();
        let pairs: Vec<_> = crossable_pairs(gp.graph())
            .into_iter()
            .filter(|(a, b)| rim.contains(a) && rim.contains(b))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chosen: Vec<_> = pairs.choose_multiple(&mut rng, c).copied().collect();
        let config = CrossingConfig::new(chosen);
        prop_assert!(config.is_eprime_clean(&part));
        let total: HalfInteger = (1..=part.k()).map(|i| config.f_value(&part, i).unwrap()).sum();
        prop_assert_eq!(total, HalfInteger::from_int(config.len() as i64));
    }

    #[test]
    fn crossing_counts_are_additive(seed in any::<u64>(), c in 0usize..8, cut in subsequence((0usize..36).collect::<Vec<_>>(), 0..36)) {
        let g = p124().into_graph();
        let config = random_config(&g, seed, c);
        let rest: Vec<usize> = (0..36).filter(|e| !cut.contains(e)).collect();
        let (a, b) = cut.split_at(cut.len() / 2);
        prop_assert!(additivity_holds(&config, a, b, &rest));
    }

    #[test]
    fn faces_cover_every_dart_side(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(8, 6, &mut rng);
        let mut s = default_scheme(&g);
        for rot in &mut s.rotations {
            rot.shuffle(&mut rng);
        }
        for sig in &mut s.signatures {
            *sig = if rand::Rng::gen_bool(&mut rng, 0.5) { 1 } else { -1 };
        }
        let faces = trace_faces(&g, &s).unwrap();
        prop_assert_eq!(faces.total_length(), 2 * g.edge_count());
        let genus = euler_genus(&g, &s).unwrap();
        prop_assert!(genus >= 0);
        for v in 0..g.vertex_count() {
            let mut flipped = s.clone();
            flipped.flip_vertex(&g, v);
            prop_assert_eq!(euler_genus(&g, &flipped).unwrap(), genus);
        }
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(9, 5, &mut rng);
        let perm = common::random_permutation(9, &mut rng);
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabeled(&perm).unwrap()));
    }

    #[test]
    fn symmetric_configs_share_a_canonical_form(seed in any::<u64>(), c in 1usize..5, pick in any::<prop::sample::Index>()) {
        let gp = p124();
        let sym = Symmetry::generated(gp.graph(), &gp.symmetry_generators()).unwrap();
        let config = random_config(gp.graph(), seed, c);
        let image = sym.apply(pick.index(sym.order()), &config);
        prop_assert!(validate_config(gp.graph(), &image).is_empty());
        prop_assert_eq!(sym.canonicalize(&config), sym.canonicalize(&image));
    }
}

#[test]
fn generated_groups_are_automorphisms() {
    for (n, k) in [(9, 3), (12, 4), (10, 3), (5, 2)] {
        let gp = build_generalized_petersen(n, k).unwrap();
        let group = PermGroup::generate(gp.graph().vertex_count(), &gp.symmetry_generators());
        assert!(group.order() >= 2 * n);
        assert!(group.elements().iter().all(|p| is_automorphism(gp.graph(), p)));
    }
}
