mod common;

use gpcross::embed::SurfaceBudget;
use gpcross::gp::build_generalized_petersen;
use gpcross::graph::Graph;
use gpcross::solver::{solve_crossing_number, CandidateOrder, SolveRequest, SolveStatus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn crossing_number(g: &Graph, budget: SurfaceBudget, symmetry: Vec<Vec<usize>>) -> usize {
    let mut req = SolveRequest::new(g.clone(), budget, 6);
    req.symmetry = symmetry;
    let r = solve_crossing_number(&req).unwrap();
    assert_eq!(r.status, SolveStatus::Exact, "{:?}", g.edges());
    let w = r.witness.as_ref().unwrap();
    assert!(w.verify().passed());
    r.value().unwrap()
}

#[test]
fn known_small_values() {
    let petersen = build_generalized_petersen(5, 2).unwrap();
    let cases = [
        (Graph::complete(5), 1, 0),
        (Graph::complete(6), 3, 0),
        (Graph::complete_bipartite(3, 3), 1, 0),
        (Graph::complete_bipartite(3, 4), 2, 0),
        (petersen.graph().clone(), 2, 0),
    ];
    for (g, sphere, projective) in cases {
        assert_eq!(crossing_number(&g, SurfaceBudget::SPHERE, vec![]), sphere);
        assert_eq!(crossing_number(&g, SurfaceBudget::PROJECTIVE_PLANE, vec![]), projective);
    }
    assert_eq!(
        crossing_number(&Graph::complete(7), SurfaceBudget::PROJECTIVE_PLANE, vec![]),
        3
    );
}

#[test]
fn symmetry_reduction_keeps_the_value() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
        let p = build_generalized_petersen(n, k).unwrap();
        for budget in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
            assert_eq!(
                crossing_number(p.graph(), budget, vec![]),
                crossing_number(p.graph(), budget, p.symmetry_generators()),
                "P({n},{k}) {}",
                budget.name()
            );
        }
    }
}

#[test]
fn relabeling_keeps_the_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..12 {
        let g = common::random_connected(8, 10, &mut rng);
        let perm = common::random_permutation(8, &mut rng);
        let h = g.relabeled(&perm).unwrap();
        for budget in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
            assert_eq!(crossing_number(&g, budget, vec![]), crossing_number(&h, budget, vec![]));
        }
    }
}

#[test]
fn candidate_order_does_not_change_the_answer() {
    let p = build_generalized_petersen(9, 3).unwrap();
    let part = gpcross::gp::edge_partition(&p).unwrap();
    for budget in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
        let mut req = SolveRequest::new(p.graph().clone(), budget, 4);
        req.symmetry = p.symmetry_generators();
        let plain = solve_crossing_number(&req).unwrap();
        req.order = CandidateOrder::FewRimClassesFirst(part.clone());
        req.memoize = true;
        let other = solve_crossing_number(&req).unwrap();
        assert_eq!(plain.value(), other.value());
    }
}

#[test]
fn max_c_below_the_value_gives_a_lower_bound() {
    let p = build_generalized_petersen(9, 3).unwrap();
    let mut req = SolveRequest::new(p.graph().clone(), SurfaceBudget::SPHERE, 1);
    req.symmetry = p.symmetry_generators();
    let r = solve_crossing_number(&req).unwrap();
    assert_eq!(r.status, SolveStatus::LowerBoundOnly);
    assert_eq!(r.lower_bound, 2);
    assert!(r.witness.is_none());
}
