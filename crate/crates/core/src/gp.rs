//! Generalized Petersen graphs `P(n, k)` and the block structure of the
//! `P(3k, k)` family.
//!
//! Vertex `u_i` is stored at index `i - 1` and `v_i` at `n + i - 1`; paper
//! subscripts are 1-based and read modulo `n`.

use crate::canon::is_automorphism;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpGraph {
    n: usize,
    k: usize,
    graph: Graph,
}

/// Builds `P(n, k)`: rim `u_i u_{i+1}`, spokes `u_i v_i`, inner edges
/// `v_i v_{i+k}`.
pub fn build_generalized_petersen(n: usize, k: usize) -> Result<GpGraph> {
    if n < 3 {
        return invalid(format!("P(n, k) needs n >= 3, got n = {n}"));
    }
    if k == 0 || k >= n {
        return invalid(format!("P(n, k) needs 1 <= k < n, got k = {k}"));
    }
    if 2 * k == n {
        return invalid(format!("P({n}, {k}) has doubled inner edges"));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    let graph = Graph::new(2 * n, edges)?;
    Ok(GpGraph { n, k, graph })
}

impl GpGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Whether this is a member of the `P(3k, k)` family.
    pub fn is_triple_family(&self) -> bool {
        self.n == 3 * self.k && self.k >= 3
    }

    fn wrap(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n as i64) as usize
    }

    /// Vertex index of `u_i`, subscript modulo `n`.
    pub fn u(&self, i: i64) -> usize {
        self.wrap(i)
    }

    /// Vertex index of `v_i`, subscript modulo `n`.
    pub fn v(&self, i: i64) -> usize {
        self.n + self.wrap(i)
    }

    /// Paper name of a vertex, e.g. `u1` or `v12`.
    pub fn name(&self, vertex: usize) -> String {
        if vertex < self.n {
            format!("u{}", vertex + 1)
        } else {
            format!("v{}", vertex - self.n + 1)
        }
    }

    pub fn edge_name(&self, e: usize) -> String {
        let (a, b) = self.graph.edge(e);
        format!("{}{}", self.name(a), self.name(b))
    }

    /// Edge index between two vertices, which must be adjacent.
    pub fn edge(&self, a: usize, b: usize) -> usize {
        self.graph
            .edge_index(a, b)
            .unwrap_or_else(|| panic!("{} and {} are not adjacent", self.name(a), self.name(b)))
    }

    fn require_family(&self) -> Result<usize> {
        if self.n != 3 * self.k {
            return invalid(format!("P({}, {}) is not of the form P(3k, k)", self.n, self.k));
        }
        Ok(self.k)
    }

    /// `EC_i = v_i v_{k+i} v_{2k+i}`, for `1 <= i <= k`.
    pub fn inner_triangle(&self, i: usize) -> Result<[usize; 3]> {
        let k = self.require_family()?;
        if i == 0 || i > k {
            return invalid(format!("triangle index {i} outside 1..={k}"));
        }
        let i = i as i64;
        let k = k as i64;
        Ok([self.v(i), self.v(k + i), self.v(2 * k + i)])
    }

    /// Rotation `u_i -> u_{i+1}, v_i -> v_{i+1}` and reflection
    /// `u_i -> u_{-i}, v_i -> v_{-i}`, as `perm[old] = new`.
    pub fn symmetry_generators(&self) -> Vec<Vec<usize>> {
        let n = self.n as i64;
        let rotation: Vec<usize> = (0..2 * self.n)
            .map(|x| {
                let (ring, i) = ((x / self.n) as i64, (x % self.n) as i64 + 1);
                if ring == 0 {
                    self.u(i + 1)
                } else {
                    self.v(i + 1)
                }
            })
            .collect();
        let reflection: Vec<usize> = (0..2 * self.n)
            .map(|x| {
                let (ring, i) = ((x / self.n) as i64, (x % self.n) as i64 + 1);
                if ring == 0 {
                    self.u(n - i)
                } else {
                    self.v(n - i)
                }
            })
            .collect();
        let gens = vec![rotation, reflection];
        debug_assert!(gens.iter().all(|p| is_automorphism(&self.graph, p)));
        gens
    }
}

/// The block structure `E_i`, `H_i`, `E'`, `EC_i` and `R_i` of `P(3k, k)`.
/// Block accessors take the 1-based block index `i` in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    k: usize,
    spoke_blocks: Vec<[usize; 6]>,
    rim_blocks: Vec<[usize; 3]>,
    triangles: Vec<[usize; 3]>,
    e_prime: Vec<usize>,
}

pub fn edge_partition(gp: &GpGraph) -> Result<EdgePartition> {
    let k = gp.require_family()?;
    let mut spoke_blocks = Vec::with_capacity(k);
    let mut rim_blocks = Vec::with_capacity(k);
    let mut triangles = Vec::with_capacity(k);
    let kk = k as i64;
    for i in 1..=kk {
        let (a, b, c) = (i, kk + i, 2 * kk + i);
        let mut block = [
            gp.edge(gp.v(a), gp.v(b)),
            gp.edge(gp.v(b), gp.v(c)),
            gp.edge(gp.v(c), gp.v(a)),
            gp.edge(gp.u(a), gp.v(a)),
            gp.edge(gp.u(b), gp.v(b)),
            gp.edge(gp.u(c), gp.v(c)),
        ];
        block.sort_unstable();
        spoke_blocks.push(block);
        let mut rim = [
            gp.edge(gp.u(a), gp.u(a + 1)),
            gp.edge(gp.u(b), gp.u(b + 1)),
            gp.edge(gp.u(c), gp.u(c + 1)),
        ];
        rim.sort_unstable();
        rim_blocks.push(rim);
        triangles.push([gp.v(a), gp.v(b), gp.v(c)]);
    }
    let mut e_prime: Vec<usize> = spoke_blocks.iter().flatten().copied().collect();
    e_prime.sort_unstable();
    Ok(EdgePartition {
        k,
        spoke_blocks,
        rim_blocks,
        triangles,
        e_prime,
    })
}

impl EdgePartition {
    pub fn k(&self) -> usize {
        self.k
    }

    fn slot(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.k {
            return Err(Error::InvalidInput(format!("block index {i} outside 1..={}", self.k)));
        }
        Ok(i - 1)
    }

    /// `E_i`: the inner triangle `EC_i` plus its three spokes.
    pub fn e(&self, i: usize) -> Result<&[usize; 6]> {
        Ok(&self.spoke_blocks[self.slot(i)?])
    }

    /// `H_i = {u_i u_{i+1}, u_{k+i} u_{k+i+1}, u_{2k+i} u_{2k+i+1}}`.
    pub fn h(&self, i: usize) -> Result<&[usize; 3]> {
        Ok(&self.rim_blocks[self.slot(i)?])
    }

    /// Vertex cycle of `EC_i`.
    pub fn triangle(&self, i: usize) -> Result<&[usize; 3]> {
        Ok(&self.triangles[self.slot(i)?])
    }

    /// `E' = E_1 ∪ ... ∪ E_k`, sorted.
    pub fn e_prime(&self) -> &[usize] {
        &self.e_prime
    }

    /// `R_i = E_i ∪ H_i ∪ E_{i+1}`, with `E_{k+1} = E_1`; sorted.
    pub fn r(&self, i: usize) -> Result<Vec<usize>> {
        let s = self.slot(i)?;
        let next = (s + 1) % self.k;
        let mut out: Vec<usize> = self.spoke_blocks[s]
            .iter()
            .chain(self.rim_blocks[s].iter())
            .chain(self.spoke_blocks[next].iter())
            .copied()
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn rim_blocks(&self) -> &[[usize; 3]] {
        &self.rim_blocks
    }

    pub fn spoke_blocks(&self) -> &[[usize; 6]] {
        &self.spoke_blocks
    }

    /// 1-based index of the rim block containing edge `e`, if any.
    pub fn rim_block_of(&self, e: usize) -> Option<usize> {
        self.rim_blocks.iter().position(|b| b.contains(&e)).map(|s| s + 1)
    }
}

/// `P(3k, k)` with the edges of `E_i` removed.
#[derive(Clone, Debug)]
pub struct DeletedClass {
    /// The graph right after deletion, same vertex set.
    pub graph: Graph,
    /// After dropping isolated vertices and suppressing degree-2 vertices.
    pub suppressed: Graph,
    /// True when `k >= 4`, where the suppressed graph is `P(3(k-1), k-1)`.
    pub reduces_to_family: bool,
}

pub fn delete_partition_class(gp: &GpGraph, i: usize) -> Result<DeletedClass> {
    let part = edge_partition(gp)?;
    let block = part.e(i)?;
    let graph = gp.graph().without_edges(block);
    let suppressed = graph.suppress_degree_two()?.graph;
    Ok(DeletedClass {
        graph,
        suppressed,
        reduces_to_family: gp.k() >= 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{isomorphic, PermGroup};

    fn names(gp: &GpGraph, edges: &[usize]) -> Vec<String> {
        let mut v: Vec<String> = edges.iter().map(|&e| gp.edge_name(e)).collect();
        v.sort();
        v
    }

    #[test]
    fn sizes() {
        let p = build_generalized_petersen(9, 3).unwrap();
        assert_eq!((p.graph().vertex_count(), p.graph().edge_count()), (18, 27));
        let p = build_generalized_petersen(12, 4).unwrap();
        assert_eq!((p.graph().vertex_count(), p.graph().edge_count()), (24, 36));
        assert!(p.graph().is_regular(3));
    }

    #[test]
    fn parameter_checks() {
        assert!(build_generalized_petersen(2, 1).is_err());
        assert!(build_generalized_petersen(5, 0).is_err());
        assert!(build_generalized_petersen(5, 5).is_err());
        assert!(build_generalized_petersen(6, 3).is_err());
        assert!(build_generalized_petersen(5, 2).is_ok());
    }

    #[test]
    fn neighbours_of_v1() {
        let p = build_generalized_petersen(9, 3).unwrap();
        let mut nb: Vec<String> = p.graph().neighbors(p.v(1)).map(|w| p.name(w)).collect();
        nb.sort();
        assert_eq!(nb, ["u1", "v4", "v7"]);
    }

    #[test]
    fn blocks_of_p93() {
        let p = build_generalized_petersen(9, 3).unwrap();
        let part = edge_partition(&p).unwrap();
        let mut e1 = vec!["v1v4", "v4v7", "v1v7", "u1v1", "u4v4", "u7v7"];
        e1.sort();
        assert_eq!(names(&p, part.e(1).unwrap()), e1);
        assert_eq!(names(&p, part.h(1).unwrap()), ["u1u2", "u4u5", "u7u8"]);
        assert_eq!(part.e_prime().len(), 18);
        let total: usize = (1..=3)
            .map(|i| part.e(i).unwrap().len() + part.h(i).unwrap().len())
            .sum();
        assert_eq!(total, 27);
        assert!(part.e(4).is_err());
        assert!(part.h(0).is_err());
    }

    #[test]
    fn partition_requires_triple_family() {
        let p = build_generalized_petersen(10, 3).unwrap();
        assert!(edge_partition(&p).is_err());
        assert!(p.inner_triangle(1).is_err());
    }

    #[test]
    fn triangles() {
        let p = build_generalized_petersen(9, 3).unwrap();
        let t1 = p.inner_triangle(1).unwrap();
        assert_eq!(t1.map(|v| p.name(v)), ["v1", "v4", "v7"]);
        let t2 = p.inner_triangle(2).unwrap();
        assert!(t1.iter().all(|v| !t2.contains(v)));
        let q = build_generalized_petersen(12, 4).unwrap();
        assert_eq!(q.inner_triangle(2).unwrap().map(|v| q.name(v)), ["v2", "v6", "v10"]);
        assert!(q.inner_triangle(5).is_err());
        let part = edge_partition(&q).unwrap();
        for i in 1..=4 {
            let t = q.inner_triangle(i).unwrap();
            for j in 0..3 {
                let e = q.edge(t[j], t[(j + 1) % 3]);
                assert!(part.e(i).unwrap().contains(&e));
            }
        }
    }

    #[test]
    fn r_blocks_have_fifteen_edges() {
        let p = build_generalized_petersen(15, 5).unwrap();
        let part = edge_partition(&p).unwrap();
        for i in 1..=5 {
            let r = part.r(i).unwrap();
            assert_eq!(r.len(), 15);
            let mut d = r.clone();
            d.dedup();
            assert_eq!(d.len(), 15);
        }
        // R_k wraps around to E_1.
        let rk = part.r(5).unwrap();
        assert!(part.e(1).unwrap().iter().all(|e| rk.contains(e)));
    }

    #[test]
    fn generators() {
        let p = build_generalized_petersen(9, 3).unwrap();
        let [rot, refl] = <[Vec<usize>; 2]>::try_from(p.symmetry_generators()).unwrap();
        let e = p.edge(p.u(1), p.u(2));
        let (a, b) = p.graph().edge(e);
        assert_eq!(p.graph().edge_index(rot[a], rot[b]), Some(p.edge(p.u(2), p.u(3))));
        let mut pow: Vec<usize> = (0..18).collect();
        for _ in 0..9 {
            pow = pow.iter().map(|&x| rot[x]).collect();
        }
        assert_eq!(pow, (0..18).collect::<Vec<_>>());
        assert!(is_automorphism(p.graph(), &refl));

        let q = build_generalized_petersen(12, 4).unwrap();
        let refl = &q.symmetry_generators()[1];
        let (a, b) = (refl[q.v(1)], refl[q.v(5)]);
        assert_eq!((q.name(a), q.name(b)), ("v11".into(), "v7".into()));
        assert!(q.graph().has_edge(a, b));
        let group = PermGroup::generate(24, &q.symmetry_generators());
        assert_eq!(group.order(), 24);
    }

    #[test]
    fn deleting_a_block_leaves_the_smaller_member() {
        let q = build_generalized_petersen(12, 4).unwrap();
        let d = delete_partition_class(&q, 1).unwrap();
        assert_eq!((d.graph.vertex_count(), d.graph.edge_count()), (24, 30));
        assert!(d.reduces_to_family);
        let p93 = build_generalized_petersen(9, 3).unwrap();
        assert!(isomorphic(&d.suppressed, p93.graph()));

        let r = build_generalized_petersen(15, 5).unwrap();
        let d = delete_partition_class(&r, 3).unwrap();
        assert_eq!((d.suppressed.vertex_count(), d.suppressed.edge_count()), (24, 36));
        assert!(isomorphic(&d.suppressed, q.graph()));
    }

    #[test]
    fn deleting_from_p93_is_flagged() {
        let p = build_generalized_petersen(9, 3).unwrap();
        let d = delete_partition_class(&p, 2).unwrap();
        assert!(!d.reduces_to_family);
    }
}
