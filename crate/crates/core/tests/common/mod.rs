#![allow(dead_code)]

use std::collections::HashSet;

use gpcross::canon::canonical_form;
use gpcross::graph::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every connected graph on 1..=max_n vertices, one per isomorphism class.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            let g = Graph::new(n, edges).unwrap();
            if g.is_connected() && seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// A connected graph on `n` vertices: a random spanning tree plus `extra`
/// further random edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    let max = n * (n - 1) / 2;
    while edges.len() < (n - 1 + extra).min(max) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort();
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
