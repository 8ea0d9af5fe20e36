//! Exhaustive reference embedder for small graphs, used to cross-check the
//! insertion search.
//!
//! Vertices are fixed in BFS order; each one receives a full rotation and
//! signatures for its edges back to earlier vertices (BFS tree edges stay
//! `+1`). The only pruning is a face-count bound: faces already closed plus
//! the remaining dart-sides divided by the minimum face length of three.

use super::{trace_faces, EmbeddingScheme, Interleave, SurfaceBudget};
use crate::error::{invalid, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_VERTICES: usize = 10;
pub const ORACLE_MAX_EDGES: usize = 15;

pub fn brute_force_embed_oracle(g: &Graph, budget: SurfaceBudget) -> Result<Option<EmbeddingScheme>> {
    brute_force_embed_oracle_with(g, budget, &[])
}

/// [`brute_force_embed_oracle`] restricted to rotations that honour the
/// interleaving constraints.
pub fn brute_force_embed_oracle_with(
    g: &Graph,
    budget: SurfaceBudget,
    constraints: &[Interleave],
) -> Result<Option<EmbeddingScheme>> {
    if g.vertex_count() > ORACLE_MAX_VERTICES && g.edge_count() > ORACLE_MAX_EDGES {
        return invalid(format!(
            "oracle limited to {ORACLE_MAX_VERTICES} vertices or {ORACLE_MAX_EDGES} edges"
        ));
    }
    if !g.is_connected() {
        return invalid("oracle requires a connected graph");
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Ok(Some(EmbeddingScheme {
            rotations: vec![Vec::new(); n],
            signatures: Vec::new(),
        }));
    }

    let mut order = vec![0];
    let mut rank = vec![usize::MAX; n];
    let mut tree = vec![false; m];
    rank[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(w, e) in g.incident(v) {
            if rank[w] == usize::MAX {
                rank[w] = order.len();
                order.push(w);
                tree[e] = true;
            }
        }
    }

    let mut opposite = vec![usize::MAX; 2 * m];
    for c in constraints {
        if c.vertex >= n || g.degree(c.vertex) != 4 {
            return invalid("interleave constraint needs a degree-4 vertex");
        }
        let (a, b) = (g.dart_at(c.strand[0], c.vertex), g.dart_at(c.strand[1], c.vertex));
        opposite[a] = b;
        opposite[b] = a;
    }

    let needed = m as i64 - n as i64 + 2 - budget.max_euler_genus as i64;
    let mut st = Oracle {
        g,
        order,
        rank,
        tree,
        orientable_only: budget.max_euler_genus == 0,
        needed,
        opposite,
        rotations: vec![Vec::new(); n],
        signatures: vec![1; m],
        succ: vec![0; 2 * m],
        pred: vec![0; 2 * m],
    };
    if st.assign(0) {
        let scheme = EmbeddingScheme {
            rotations: st.rotations,
            signatures: st.signatures,
        };
        debug_assert!(trace_faces(g, &scheme).is_ok());
        Ok(Some(scheme))
    } else {
        Ok(None)
    }
}

struct Oracle<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    rank: Vec<usize>,
    tree: Vec<bool>,
    orientable_only: bool,
    needed: i64,
    opposite: Vec<usize>,
    rotations: Vec<Vec<usize>>,
    signatures: Vec<i8>,
    succ: Vec<usize>,
    pred: Vec<usize>,
}

impl Oracle<'_> {
    fn assign(&mut self, idx: usize) -> bool {
        let g = self.g;
        if idx == self.order.len() {
            let f = trace_faces(
                g,
                &EmbeddingScheme {
                    rotations: self.rotations.clone(),
                    signatures: self.signatures.clone(),
                },
            )
            .expect("oracle builds valid schemes")
            .face_count() as i64;
            return f >= self.needed;
        }
        let v = self.order[idx];
        let darts: Vec<usize> = g.incident(v).iter().map(|&(_, e)| g.dart_at(e, v)).collect();
        // Edges back to earlier vertices that are free to twist.
        let free: Vec<usize> = g
            .incident(v)
            .iter()
            .filter(|&&(w, e)| self.rank[w] < idx && !self.tree[e])
            .map(|&(_, e)| e)
            .collect();
        let sign_patterns: u32 = if self.orientable_only { 1 } else { 1 << free.len() };

        for rot in cyclic_orders(&darts, idx == 0) {
            if let Some(i) = rot.iter().position(|&d| self.opposite[d] != usize::MAX) {
                if rot[(i + 2) % 4] != self.opposite[rot[i]] {
                    continue;
                }
            }
            for (i, &d) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                self.succ[d] = next;
                self.pred[next] = d;
            }
            self.rotations[v] = rot;
            for pattern in 0..sign_patterns {
                for (bit, &e) in free.iter().enumerate() {
                    self.signatures[e] = if pattern >> bit & 1 == 1 { -1 } else { 1 };
                }
                if self.bound_allows(idx + 1) && self.assign(idx + 1) {
                    return true;
                }
            }
            for &e in &free {
                self.signatures[e] = 1;
            }
        }
        self.rotations[v].clear();
        false
    }

    /// Whether the first `assigned` vertices in order can still reach the
    /// required face count. Closed faces are counted exactly; every other
    /// face needs a dart-side at an unassigned vertex and length at least
    /// three, and keeps each maximal assigned segment of its walk whole.
    fn bound_allows(&self, assigned: usize) -> bool {
        let g = self.g;
        if g.vertex_count() < 3 || assigned == self.order.len() {
            return true;
        }
        let darts = 2 * g.edge_count();
        let done = |v: usize| self.rank[v] < assigned;
        let mut visited = vec![false; darts];
        let mut closed = 0i64;
        let mut unassigned = 0i64;
        let mut segments: Vec<i64> = Vec::new();
        for start in 0..darts {
            if !done(g.dart_vertex(start)) {
                unassigned += 1;
                continue;
            }
            if visited[start] {
                continue;
            }
            let (forward, closes) = self.walk(start, 1, &done);
            for &c in &forward {
                visited[c] = true;
            }
            if closes {
                closed += 1;
                continue;
            }
            let (backward, _) = self.walk(start, -1, &done);
            for &c in &backward {
                visited[c] = true;
            }
            segments.push((forward.len() + backward.len() - 1) as i64);
        }
        // Greedy: cheapest segments get their own face first.
        let mut needs: Vec<i64> = segments.iter().map(|&l| (3 - l).max(1)).collect();
        needs.sort_unstable();
        let mut open = 0i64;
        for need in needs {
            if need > unassigned {
                break;
            }
            unassigned -= need;
            open += 1;
        }
        open += unassigned / 3;
        closed + open >= self.needed
    }

    /// Corners met walking from `start` with orientation `orient` until the
    /// walk leaves the assigned vertices or returns to `start`.
    fn walk(&self, start: usize, orient: i8, done: &impl Fn(usize) -> bool) -> (Vec<usize>, bool) {
        let g = self.g;
        let (mut c, mut s) = (start, orient);
        let mut path = Vec::new();
        loop {
            path.push(c);
            let leave = if s > 0 { self.succ[c] } else { c };
            let twin = leave ^ 1;
            if !done(g.dart_vertex(twin)) {
                return (path, false);
            }
            s *= self.signatures[leave / 2];
            let (nc, ns) = if s > 0 { (twin, 1) } else { (self.pred[twin], -1) };
            if nc == start {
                debug_assert_eq!(ns, orient);
                return (path, true);
            }
            c = nc;
            s = ns;
        }
    }
}

/// All cyclic orders of `darts` with the first dart fixed; with `mirror`
/// set, only one of each order and its reversal.
fn cyclic_orders(darts: &[usize], mirror: bool) -> Vec<Vec<usize>> {
    if darts.len() <= 2 {
        return vec![darts.to_vec()];
    }
    let mut rest = darts[1..].to_vec();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |p| {
        if !mirror || p[0] < p[p.len() - 1] {
            let mut rot = vec![darts[0]];
            rot.extend_from_slice(p);
            out.push(rot);
        }
    });
    out
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::euler_genus;

    #[test]
    fn k4_is_planar() {
        let g = Graph::complete(4);
        let s = brute_force_embed_oracle(&g, SurfaceBudget::SPHERE).unwrap().unwrap();
        assert_eq!(euler_genus(&g, &s).unwrap(), 0);
    }

    #[test]
    fn k33_needs_a_crosscap() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(brute_force_embed_oracle(&g, SurfaceBudget::SPHERE).unwrap().is_none());
        let s = brute_force_embed_oracle(&g, SurfaceBudget::PROJECTIVE_PLANE)
            .unwrap()
            .unwrap();
        assert_eq!(euler_genus(&g, &s).unwrap(), 1);
    }

    #[test]
    fn k5_minimum_euler_genus_is_one() {
        let g = Graph::complete(5);
        assert!(brute_force_embed_oracle(&g, SurfaceBudget::SPHERE).unwrap().is_none());
        assert!(brute_force_embed_oracle(&g, SurfaceBudget::PROJECTIVE_PLANE)
            .unwrap()
            .is_some());
    }

    #[test]
    fn size_guard() {
        let g = Graph::complete(11);
        assert!(brute_force_embed_oracle(&g, SurfaceBudget::SPHERE).is_err());
    }

    #[test]
    fn cyclic_order_counts() {
        assert_eq!(cyclic_orders(&[0, 1, 2, 3], false).len(), 6);
        assert_eq!(cyclic_orders(&[0, 1, 2, 3], true).len(), 3);
        assert_eq!(cyclic_orders(&[0, 1], false).len(), 1);
    }
}
