//! Canonical labelling of small graphs and permutation-group helpers.
//!
//! Canonical forms come from colour refinement plus individualisation: every
//! leaf of the search tree is a discrete colouring, i.e. a relabelling, and
//! the lexicographically smallest relabelled edge list wins. There is no
//! automorphism pruning, so the cost grows with the automorphism group; that
//! is fine at the sizes handled here.

use std::collections::{HashSet, VecDeque};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub colors: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.vertex_count()])
}

/// Canonical form of a vertex-coloured graph. Isomorphisms must preserve the
/// colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.vertex_count());
    let mut initial: Vec<u32> = colors.to_vec();
    // Normalise colours to ranks so equal palettes give equal forms.
    let mut palette: Vec<u32> = initial.clone();
    palette.sort_unstable();
    palette.dedup();
    for c in &mut initial {
        *c = palette.binary_search(c).unwrap() as u32;
    }
    let start = refine(g, &initial);
    let mut best: Option<Labelled> = None;
    search(g, start, colors, &mut best);
    let (edges, sorted_colors) = best.unwrap_or_default();
    CanonicalForm {
        vertex_count: g.vertex_count(),
        colors: sorted_colors,
        edges,
    }
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degree_sequence();
            let mut db = b.degree_sequence();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

fn refine(g: &Graph, colors: &[u32]) -> Vec<u32> {
    let mut cur = colors.to_vec();
    let mut count = distinct(&cur);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| cur[w]).collect();
                nb.sort_unstable();
                (cur[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs.iter().map(|s| sorted.binary_search(&s).unwrap() as u32).collect();
        let next_count = distinct(&next);
        cur = next;
        if next_count == count {
            return cur;
        }
        count = next_count;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Relabelled edge list and colours of one leaf of the search.
type Labelled = (Vec<(usize, usize)>, Vec<u32>);

fn search(g: &Graph, colors: Vec<u32>, original: &[u32], best: &mut Option<Labelled>) {
    let n = g.vertex_count();
    if distinct(&colors) == n {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (colors[a] as usize, colors[b] as usize);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        let mut relabeled_colors = vec![0; n];
        for v in 0..n {
            relabeled_colors[colors[v] as usize] = original[v];
        }
        let candidate = (edges, relabeled_colors);
        let better = match best {
            None => true,
            Some(b) => (&candidate.1, &candidate.0) < (&b.1, &b.0),
        };
        if better {
            *best = Some(candidate);
        }
        return;
    }
    // Target cell: smallest colour class of size > 1, first by colour.
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).unwrap() as u32;
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let individualised: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(w != v))
            .collect();
        search(g, refine(g, &individualised), original, best);
    }
}

/// A finite permutation group, stored as the full list of its elements.
#[derive(Clone, Debug)]
pub struct PermGroup {
    elements: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            elements: vec![(0..degree).collect()],
        }
    }

    /// Closure of the generators under composition.
    pub fn generate(degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut elements = Vec::new();
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            if !seen.insert(p.clone()) {
                continue;
            }
            for gen in generators {
                let q: Vec<usize> = p.iter().map(|&x| gen[x]).collect();
                if !seen.contains(&q) {
                    queue.push_back(q);
                }
            }
            elements.push(p);
        }
        elements.sort();
        PermGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    /// Induced action on the edges of `g` (`result[i][e]` is the image of
    /// edge `e` under element `i`), plus for each element and edge whether the
    /// image runs against the canonical orientation.
    pub fn edge_action(&self, g: &Graph) -> Option<EdgeAction> {
        let mut images = Vec::with_capacity(self.order());
        let mut reversed = Vec::with_capacity(self.order());
        for p in &self.elements {
            let mut img = Vec::with_capacity(g.edge_count());
            let mut rev = Vec::with_capacity(g.edge_count());
            for &(a, b) in g.edges() {
                let (x, y) = (p[a], p[b]);
                img.push(g.edge_index(x, y)?);
                rev.push(x > y);
            }
            images.push(img);
            reversed.push(rev);
        }
        Some(EdgeAction { images, reversed })
    }
}

/// Edge permutations induced by a vertex permutation group.
#[derive(Clone, Debug)]
pub struct EdgeAction {
    pub images: Vec<Vec<usize>>,
    pub reversed: Vec<Vec<bool>>,
}

pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    perm.len() == g.vertex_count() && g.edges().iter().all(|&(a, b)| g.has_edge(perm[a], perm[b]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_a_form() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        let h = g.relabeled(&perm).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_non_isomorphic_cubic_graphs() {
        // K3,3 and the triangular prism are both cubic on six vertices.
        let prism = Graph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!isomorphic(&prism, &Graph::complete_bipartite(3, 3)));
    }

    #[test]
    fn colours_matter() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(
            canonical_form_colored(&g, &[1, 0, 0]),
            canonical_form_colored(&g, &[0, 1, 0])
        );
        assert_eq!(
            canonical_form_colored(&g, &[1, 0, 0]),
            canonical_form_colored(&g, &[0, 0, 1])
        );
    }

    #[test]
    fn dihedral_closure() {
        let n = 5;
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        let g = PermGroup::generate(n, &[rot, refl]);
        assert_eq!(g.order(), 10);
        let c5 = Graph::cycle(5).unwrap();
        assert!(g.elements().iter().all(|p| is_automorphism(&c5, p)));
    }
}
