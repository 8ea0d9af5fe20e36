//! Exact embedding search by edge insertion.
//!
//! The embedding is grown one edge at a time from a single edge. Adding an
//! edge to a new vertex keeps the face count; adding an edge between two
//! corners of one face either splits it (Euler genus unchanged) or threads it
//! through a crosscap (genus + 1); joining corners of two distinct faces
//! merges them (genus + 2). Genus never decreases along the way, so a partial
//! embedding over budget is a dead end. Corners of distinct faces stay in
//! distinct faces unless a merge happens, which gives exact forward checking
//! once the remaining budget drops below two: an unplaced edge whose
//! endpoints share no face cannot be placed anymore.
//!
//! Edges reaching a new vertex get signature `+1` (the new vertex can always
//! be flipped), so the inserted edges of that kind form the normalising
//! spanning tree. The next edge is always the one with the fewest placements.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Instant;

use super::{EmbeddingScheme, SurfaceBudget};
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Requires the two edges `strand` at a degree-4 `vertex` to be opposite in
/// its rotation, so the other two edges alternate with them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interleave {
    pub vertex: usize,
    pub strand: [usize; 2],
}

#[derive(Clone, Debug, Default)]
pub struct EmbedLimits {
    pub deadline: Option<Instant>,
    pub node_limit: Option<u64>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl EmbedLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    Embedded(EmbeddingScheme),
    NoEmbedding,
    /// Time, node or cancellation limit hit; says nothing about existence.
    ResourceExhausted,
}

impl EmbedOutcome {
    pub fn scheme(&self) -> Option<&EmbeddingScheme> {
        match self {
            EmbedOutcome::Embedded(s) => Some(s),
            _ => None,
        }
    }
}

/// Decides whether `g` has a signed rotation system of Euler genus at most
/// `budget` that honours the interleaving constraints.
pub fn embed_decide(
    g: &Graph,
    budget: SurfaceBudget,
    constraints: &[Interleave],
    limits: &EmbedLimits,
) -> Result<EmbedOutcome> {
    decide(g, budget, constraints, limits, None)
}

/// [`embed_decide`] restricted to schemes accepted by `accept`. Every
/// embedding is reachable up to vertex flips, so the answer is exact for any
/// predicate that flips leave unchanged, such as cycle one-sidedness.
pub fn embed_decide_where(
    g: &Graph,
    budget: SurfaceBudget,
    constraints: &[Interleave],
    limits: &EmbedLimits,
    accept: &dyn Fn(&EmbeddingScheme) -> bool,
) -> Result<EmbedOutcome> {
    decide(g, budget, constraints, limits, Some(accept))
}

fn decide(
    g: &Graph,
    budget: SurfaceBudget,
    constraints: &[Interleave],
    limits: &EmbedLimits,
    accept: Option<&dyn Fn(&EmbeddingScheme) -> bool>,
) -> Result<EmbedOutcome> {
    if !g.is_connected() {
        return invalid("embedding search requires a connected graph");
    }
    let mut partner = vec![usize::MAX; 2 * g.edge_count()];
    for c in constraints {
        if c.vertex >= g.vertex_count() || g.degree(c.vertex) != 4 {
            return invalid(format!("interleave constraint at vertex {} needs degree 4", c.vertex));
        }
        let [e, f] = c.strand;
        if e == f || e >= g.edge_count() || f >= g.edge_count() {
            return invalid("interleave strand must name two distinct edges");
        }
        let (a, b) = (g.edge(e), g.edge(f));
        if (a.0 != c.vertex && a.1 != c.vertex) || (b.0 != c.vertex && b.1 != c.vertex) {
            return invalid(format!("strand edges are not incident to vertex {}", c.vertex));
        }
        let (da, db) = (g.dart_at(e, c.vertex), g.dart_at(f, c.vertex));
        partner[da] = db;
        partner[db] = da;
    }
    if g.edge_count() == 0 {
        let empty = EmbeddingScheme {
            rotations: vec![Vec::new(); g.vertex_count()],
            signatures: Vec::new(),
        };
        if accept.is_some_and(|a| !a(&empty)) {
            return Ok(EmbedOutcome::NoEmbedding);
        }
        return Ok(EmbedOutcome::Embedded(empty));
    }
    let mut search = Search::new(g, budget.max_euler_genus, partner, limits, accept);
    let outcome = match search.run() {
        Step::Found => EmbedOutcome::Embedded(search.extract()),
        Step::Exhausted => EmbedOutcome::NoEmbedding,
        Step::Abort => EmbedOutcome::ResourceExhausted,
    };
    Ok(outcome)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Abort,
}

#[derive(Clone, Copy)]
enum Move {
    /// Edge to a vertex not yet in the embedding, inserted after corner `at`.
    Tree { edge: usize, at: usize },
    /// Edge between two present vertices.
    Close {
        edge: usize,
        cu: usize,
        cv: usize,
        sign: i8,
    },
}

struct Undo {
    edge: usize,
    /// Darts inserted after corners (`dart`, `corner`); `corner == usize::MAX`
    /// marks a dart that started a fresh vertex.
    inserted: [(usize, usize); 2],
    relabel_mark: usize,
    genus: u32,
    faces: u32,
    next_face: u32,
}

struct Search<'a> {
    g: &'a Graph,
    budget: u32,
    /// Opposite-dart requirement at constrained vertices.
    partner: Vec<usize>,
    limits: &'a EmbedLimits,
    accept: Option<&'a dyn Fn(&EmbeddingScheme) -> bool>,

    present: Vec<bool>,
    deg: Vec<u32>,
    first: Vec<usize>,
    placed: Vec<bool>,
    unplaced: usize,
    succ: Vec<usize>,
    pred: Vec<usize>,
    sign: Vec<i8>,
    face: Vec<u32>,
    dir: Vec<i8>,
    stamp: Vec<u32>,
    cur_stamp: u32,
    genus: u32,
    faces: u32,
    next_face: u32,
    relabels: Vec<(usize, u32, i8)>,
    nodes: u64,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        budget: u32,
        partner: Vec<usize>,
        limits: &'a EmbedLimits,
        accept: Option<&'a dyn Fn(&EmbeddingScheme) -> bool>,
    ) -> Self {
        let n = g.vertex_count();
        let darts = 2 * g.edge_count();
        Search {
            g,
            budget,
            partner,
            limits,
            accept,
            present: vec![false; n],
            deg: vec![0; n],
            first: vec![NONE; n],
            placed: vec![false; g.edge_count()],
            unplaced: g.edge_count(),
            succ: vec![NONE; darts],
            pred: vec![NONE; darts],
            sign: vec![1; g.edge_count()],
            face: vec![0; darts],
            dir: vec![1; darts],
            stamp: vec![0; darts],
            cur_stamp: 0,
            genus: 0,
            faces: 0,
            next_face: 0,
            relabels: Vec::new(),
            nodes: 0,
        }
    }

    fn run(&mut self) -> Step {
        let g = self.g;
        let root = (0..g.vertex_count())
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let (_, e) = g.incident(root)[0];
        let (a, b) = g.edge(e);
        for (v, d) in [(a, 2 * e), (b, 2 * e + 1)] {
            self.present[v] = true;
            self.deg[v] = 1;
            self.first[v] = d;
            self.succ[d] = d;
            self.pred[d] = d;
            self.face[d] = 0;
            self.dir[d] = 1;
        }
        self.placed[e] = true;
        self.unplaced -= 1;
        self.faces = 1;
        self.next_face = 1;
        self.dfs()
    }

    fn extract(&self) -> EmbeddingScheme {
        let g = self.g;
        let rotations = (0..g.vertex_count())
            .map(|v| {
                let mut rot = Vec::with_capacity(g.degree(v));
                if self.first[v] != NONE {
                    let mut d = self.first[v];
                    loop {
                        rot.push(d);
                        d = self.succ[d];
                        if d == self.first[v] {
                            break;
                        }
                    }
                }
                rot
            })
            .collect();
        EmbeddingScheme {
            rotations,
            signatures: self.sign.clone(),
        }
    }

    fn out_of_resources(&self) -> bool {
        if let Some(limit) = self.limits.node_limit {
            if self.nodes > limit {
                return true;
            }
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    return true;
                }
            }
            if let Some(flag) = &self.limits.cancel {
                if flag.load(Ordering::Relaxed) {
                    return true;
                }
            }
        }
        false
    }

    /// The only corner at `v` that may receive dart `x` when `x` completes a
    /// constrained vertex, or `None` when every corner is allowed.
    fn forced_corner(&self, v: usize, x: usize) -> Option<usize> {
        if self.deg[v] != 3 || self.g.degree(v) != 4 {
            return None;
        }
        let p = self.partner[x];
        if p != NONE {
            // x must land opposite its partner.
            return Some(self.succ[p]);
        }
        // x is a crossing strand; the other strand's darts are both placed
        // and consecutive, x goes between them.
        let mut d = self.first[v];
        loop {
            let q = self.partner[d];
            if q != NONE {
                return Some(if self.succ[d] == q { d } else { q });
            }
            d = self.succ[d];
            if d == self.first[v] {
                return None;
            }
        }
    }

    fn corners(&self, v: usize, x: usize) -> CornerIter<'_> {
        match self.forced_corner(v, x) {
            Some(c) => CornerIter {
                succ: &self.succ,
                start: c,
                cur: c,
                single: true,
                done: false,
            },
            None => {
                let s = self.first[v];
                CornerIter {
                    succ: &self.succ,
                    start: s,
                    cur: s,
                    single: false,
                    done: s == NONE,
                }
            }
        }
    }

    /// Number of placements of `edge`, stopping early once `cap` is reached.
    fn count_options(&self, edge: usize, cap: u32) -> u32 {
        let (a, b) = self.g.edge(edge);
        let (xa, xb) = (2 * edge, 2 * edge + 1);
        match (self.present[a], self.present[b]) {
            (true, true) => {
                let slack = self.budget - self.genus;
                let mut count = 0;
                for cu in self.corners(a, xa) {
                    for cv in self.corners(b, xb) {
                        if self.face[cu] == self.face[cv] {
                            count += if slack >= 1 { 2 } else { 1 };
                        } else if slack >= 2 {
                            count += 2;
                        }
                        if count >= cap {
                            return count;
                        }
                    }
                }
                count
            }
            (true, false) => self.corners(a, xa).count() as u32,
            (false, true) => self.corners(b, xb).count() as u32,
            (false, false) => u32::MAX,
        }
    }

    fn dfs(&mut self) -> Step {
        if self.unplaced == 0 {
            return match self.accept {
                Some(accept) if !accept(&self.extract()) => Step::Exhausted,
                _ => Step::Found,
            };
        }
        self.nodes += 1;
        if self.out_of_resources() {
            return Step::Abort;
        }

        // Most constrained edge first; closing edges win ties.
        let mut best: Option<(u32, bool, usize)> = None;
        for e in 0..self.g.edge_count() {
            if self.placed[e] {
                continue;
            }
            let (a, b) = self.g.edge(e);
            let closing = self.present[a] && self.present[b];
            if !closing && !self.present[a] && !self.present[b] {
                continue;
            }
            let cap = best.map_or(u32::MAX, |(c, _, _)| c + 1);
            let count = self.count_options(e, cap);
            if count == 0 {
                return Step::Exhausted;
            }
            let better = match best {
                None => true,
                Some((c, cl, _)) => count < c || (count == c && closing && !cl),
            };
            if better {
                best = Some((count, closing, e));
            }
        }
        let (_, closing, edge) = best.expect("connected graph always has a frontier edge");

        let mut moves: Vec<Move> = Vec::new();
        let (a, b) = self.g.edge(edge);
        if closing {
            let slack = self.budget - self.genus;
            let (xa, xb) = (2 * edge, 2 * edge + 1);
            let mut twists = Vec::new();
            for cu in self.corners(a, xa) {
                for cv in self.corners(b, xb) {
                    if self.face[cu] == self.face[cv] {
                        let split = self.dir[cu] * self.dir[cv];
                        moves.push(Move::Close {
                            edge,
                            cu,
                            cv,
                            sign: split,
                        });
                        if slack >= 1 {
                            twists.push(Move::Close {
                                edge,
                                cu,
                                cv,
                                sign: -split,
                            });
                        }
                    } else if slack >= 2 {
                        twists.push(Move::Close { edge, cu, cv, sign: 1 });
                        twists.push(Move::Close { edge, cu, cv, sign: -1 });
                    }
                }
            }
            moves.extend(twists);
        } else {
            let (u, x) = if self.present[a] {
                (a, 2 * edge)
            } else {
                (b, 2 * edge + 1)
            };
            moves.extend(self.corners(u, x).map(|at| Move::Tree { edge, at }));
        }

        for mv in moves {
            let undo = self.apply(mv);
            let step = self.dfs();
            if step == Step::Found {
                return step;
            }
            self.revert(undo);
            if step == Step::Abort {
                return step;
            }
        }
        Step::Exhausted
    }

    fn insert_after(&mut self, x: usize, corner: usize) {
        let next = self.succ[corner];
        self.succ[x] = next;
        self.pred[next] = x;
        self.succ[corner] = x;
        self.pred[x] = corner;
    }

    fn apply(&mut self, mv: Move) -> Undo {
        let mark = self.relabels.len();
        let (genus, faces, next_face) = (self.genus, self.faces, self.next_face);
        match mv {
            Move::Tree { edge, at } => {
                let x = if self.g.dart_vertex(at) == self.g.edge(edge).0 {
                    2 * edge
                } else {
                    2 * edge + 1
                };
                let y = x ^ 1;
                let u = self.g.dart_vertex(x);
                let w = self.g.dart_vertex(y);
                self.insert_after(x, at);
                self.deg[u] += 1;
                self.present[w] = true;
                self.deg[w] = 1;
                self.first[w] = y;
                self.succ[y] = y;
                self.pred[y] = y;
                let (f, s) = (self.face[at], self.dir[at]);
                self.face[x] = f;
                self.dir[x] = s;
                self.face[y] = f;
                self.dir[y] = s;
                self.sign[edge] = 1;
                self.placed[edge] = true;
                self.unplaced -= 1;
                Undo {
                    edge,
                    inserted: [(x, at), (y, NONE)],
                    relabel_mark: mark,
                    genus,
                    faces,
                    next_face,
                }
            }
            Move::Close { edge, cu, cv, sign } => {
                let x = if self.g.dart_vertex(cu) == self.g.edge(edge).0 {
                    2 * edge
                } else {
                    2 * edge + 1
                };
                let y = x ^ 1;
                let same = self.face[cu] == self.face[cv];
                let split = same && sign == self.dir[cu] * self.dir[cv];
                let (fu, fv, su) = (self.face[cu], self.face[cv], self.dir[cu]);
                self.insert_after(x, cu);
                self.insert_after(y, cv);
                self.deg[self.g.dart_vertex(x)] += 1;
                self.deg[self.g.dart_vertex(y)] += 1;
                self.sign[edge] = sign;
                self.placed[edge] = true;
                self.unplaced -= 1;

                self.cur_stamp += 1;
                self.retrace(cu, su, fu);
                if split {
                    debug_assert_ne!(self.stamp[x], self.cur_stamp, "predicted split did not split");
                    let id = self.next_face;
                    self.next_face += 1;
                    self.retrace(x, 1, id);
                    self.faces += 1;
                } else if same {
                    debug_assert_eq!(self.stamp[x], self.cur_stamp);
                    self.genus += 1;
                } else {
                    debug_assert_eq!(self.stamp[cv], self.cur_stamp);
                    let _ = fv;
                    self.faces -= 1;
                    self.genus += 2;
                }
                Undo {
                    edge,
                    inserted: [(x, cu), (y, cv)],
                    relabel_mark: mark,
                    genus,
                    faces,
                    next_face,
                }
            }
        }
    }

    fn retrace(&mut self, start: usize, start_dir: i8, id: u32) {
        let (mut c, mut s) = (start, start_dir);
        loop {
            self.relabels.push((c, self.face[c], self.dir[c]));
            self.face[c] = id;
            self.dir[c] = s;
            self.stamp[c] = self.cur_stamp;
            let leave = if s > 0 { self.succ[c] } else { c };
            let twin = leave ^ 1;
            let s2 = s * self.sign[leave / 2];
            let (nc, ns) = if s2 > 0 { (twin, 1) } else { (self.pred[twin], -1) };
            if nc == start {
                debug_assert_eq!(ns, start_dir);
                break;
            }
            c = nc;
            s = ns;
        }
    }

    fn revert(&mut self, undo: Undo) {
        while self.relabels.len() > undo.relabel_mark {
            let (c, f, s) = self.relabels.pop().unwrap();
            self.face[c] = f;
            self.dir[c] = s;
        }
        // Remove in reverse insertion order.
        for &(x, corner) in undo.inserted.iter().rev() {
            let v = self.g.dart_vertex(x);
            if corner == NONE {
                self.present[v] = false;
                self.deg[v] = 0;
                self.first[v] = NONE;
                self.succ[x] = NONE;
                self.pred[x] = NONE;
            } else {
                let next = self.succ[x];
                self.succ[corner] = next;
                self.pred[next] = corner;
                self.succ[x] = NONE;
                self.pred[x] = NONE;
                self.deg[v] -= 1;
            }
        }
        self.placed[undo.edge] = false;
        self.unplaced += 1;
        self.sign[undo.edge] = 1;
        self.genus = undo.genus;
        self.faces = undo.faces;
        self.next_face = undo.next_face;
    }
}

struct CornerIter<'a> {
    succ: &'a [usize],
    start: usize,
    cur: usize,
    single: bool,
    done: bool,
}

impl Iterator for CornerIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        let c = self.cur;
        if self.single {
            self.done = true;
        } else {
            self.cur = self.succ[c];
            if self.cur == self.start {
                self.done = true;
            }
        }
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::euler_genus;

    fn decide(g: &Graph, budget: SurfaceBudget) -> EmbedOutcome {
        embed_decide(g, budget, &[], &EmbedLimits::unlimited()).unwrap()
    }

    #[test]
    fn k5_and_k33() {
        for g in [Graph::complete(5), Graph::complete_bipartite(3, 3)] {
            assert_eq!(decide(&g, SurfaceBudget::SPHERE), EmbedOutcome::NoEmbedding);
            let s = decide(&g, SurfaceBudget::PROJECTIVE_PLANE);
            let s = s.scheme().expect("projective embedding");
            assert_eq!(euler_genus(&g, s).unwrap(), 1);
        }
    }

    #[test]
    fn k4_is_planar() {
        let g = Graph::complete(4);
        let s = decide(&g, SurfaceBudget::SPHERE);
        assert_eq!(euler_genus(&g, s.scheme().unwrap()).unwrap(), 0);
    }

    #[test]
    fn k7_needs_more_than_a_crosscap() {
        let g = Graph::complete(7);
        assert_eq!(decide(&g, SurfaceBudget::PROJECTIVE_PLANE), EmbedOutcome::NoEmbedding);
        assert!(decide(&Graph::complete(6), SurfaceBudget::PROJECTIVE_PLANE)
            .scheme()
            .is_some());
    }

    #[test]
    fn node_limit_is_reported_as_exhaustion() {
        let g = Graph::complete(7);
        let limits = EmbedLimits {
            node_limit: Some(10),
            ..Default::default()
        };
        let out = embed_decide(&g, SurfaceBudget::PROJECTIVE_PLANE, &[], &limits).unwrap();
        assert_eq!(out, EmbedOutcome::ResourceExhausted);
    }

    #[test]
    fn interleaving_is_enforced() {
        // A 4-cycle 1-2-3-4 around hub 0: the hub's rotation follows the
        // cycle in every planar embedding, so strands 0-1/0-3 alternate
        // with 0-2/0-4, while strands 0-1/0-2 cannot be opposite.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let e = |a, b| g.edge_index(a, b).unwrap();
        let ok = [Interleave {
            vertex: 0,
            strand: [e(0, 1), e(0, 3)],
        }];
        let bad = [Interleave {
            vertex: 0,
            strand: [e(0, 1), e(0, 2)],
        }];
        let lim = EmbedLimits::unlimited();
        let s = embed_decide(&g, SurfaceBudget::SPHERE, &ok, &lim).unwrap();
        let s = s.scheme().unwrap();
        let rot = &s.rotations[0];
        let pos = |d| rot.iter().position(|&x| x == d).unwrap();
        let (p, q) = (pos(g.dart_at(e(0, 1), 0)), pos(g.dart_at(e(0, 3), 0)));
        assert_eq!((p + 2) % 4, q);
        assert_eq!(
            embed_decide(&g, SurfaceBudget::SPHERE, &bad, &lim).unwrap(),
            EmbedOutcome::NoEmbedding
        );
        assert!(embed_decide(&g, SurfaceBudget::PROJECTIVE_PLANE, &bad, &lim)
            .unwrap()
            .scheme()
            .is_some());
    }

    #[test]
    fn filtered_search_sees_one_sided_cycles() {
        let g = Graph::cycle(3).unwrap();
        let one_sided = |s: &EmbeddingScheme| crate::embed::cycle_one_sided(&g, s, &[0, 1, 2]).unwrap();
        let lim = EmbedLimits::unlimited();
        let sphere = embed_decide_where(&g, SurfaceBudget::SPHERE, &[], &lim, &one_sided).unwrap();
        assert_eq!(sphere, EmbedOutcome::NoEmbedding);
        let pp = embed_decide_where(&g, SurfaceBudget::PROJECTIVE_PLANE, &[], &lim, &one_sided).unwrap();
        assert!(one_sided(pp.scheme().unwrap()));
        let k4 = Graph::complete(4);
        let two = |s: &EmbeddingScheme| {
            crate::embed::cycle_one_sided(&k4, s, &[0, 1, 2]).unwrap()
                && crate::embed::cycle_one_sided(&k4, s, &[0, 1, 3]).unwrap()
        };
        assert!(
            embed_decide_where(&k4, SurfaceBudget::PROJECTIVE_PLANE, &[], &lim, &two)
                .unwrap()
                .scheme()
                .is_some()
        );
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(embed_decide(&g, SurfaceBudget::SPHERE, &[], &EmbedLimits::unlimited()).is_err());
    }
}
