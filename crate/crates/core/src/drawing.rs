//! Combinatorial drawings: a set of pairwise edge crossings, the planarized
//! graph it induces, and an embedding of that planarization.
//!
//! Crossing counts follow the usual conventions: `v_D(A, B)` counts crossings
//! with one edge in `A` and the other in `B`, each crossing once, and
//! `v_D(A) = v_D(A, A)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::embed::{
    cycle_one_sided, embed_decide, euler_genus, EmbedLimits, EmbedOutcome, EmbeddingScheme, Interleave, SurfaceBudget,
};
use crate::error::{invalid, Error, Result};
use crate::gp::EdgePartition;
use crate::graph::Graph;

/// Pairwise crossings between edges of a base graph.
///
/// Pairs are stored as `(e, f)` with `e < f`, sorted. For every edge crossed
/// more than once, `edge_order` lists the partner edges in the order the
/// crossings occur walking from the edge's smaller endpoint to its larger
/// one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossingConfig {
    crossings: Vec<(usize, usize)>,
    edge_order: BTreeMap<usize, Vec<usize>>,
}

impl CrossingConfig {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a config from crossing pairs. Edges crossed several times get
    /// the ascending partner order; override it with [`Self::with_order`].
    /// Pairs are normalised but not validated; see [`validate_config`].
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut crossings: Vec<(usize, usize)> = pairs.into_iter().map(|(e, f)| (e.min(f), e.max(f))).collect();
        crossings.sort_unstable();
        let mut partners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(e, f) in &crossings {
            partners.entry(e).or_default().push(f);
            partners.entry(f).or_default().push(e);
        }
        let edge_order = partners
            .into_iter()
            .filter(|(_, p)| p.len() > 1)
            .map(|(e, mut p)| {
                p.sort_unstable();
                (e, p)
            })
            .collect();
        CrossingConfig { crossings, edge_order }
    }

    /// Replaces the crossing order along `edge`.
    pub fn with_order(mut self, edge: usize, order: Vec<usize>) -> Self {
        self.edge_order.insert(edge, order);
        self
    }

    /// Builds a config from its raw parts without normalising the order map.
    pub fn from_parts(
        pairs: impl IntoIterator<Item = (usize, usize)>,
        edge_order: BTreeMap<usize, Vec<usize>>,
    ) -> Self {
        let mut c = Self::new(pairs);
        c.edge_order = edge_order;
        c
    }

    pub fn crossings(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    pub fn edge_order(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.edge_order
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Partner edges along `e`, from its smaller endpoint.
    pub fn crossings_along(&self, e: usize) -> Vec<usize> {
        if let Some(order) = self.edge_order.get(&e) {
            return order.clone();
        }
        self.crossings
            .iter()
            .filter_map(|&(a, b)| {
                if a == e {
                    Some(b)
                } else if b == e {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// `v_D(A, B)`: crossings with one edge in `a` and the other in `b`.
    pub fn crossings_between(&self, a: &[usize], b: &[usize]) -> usize {
        self.crossings
            .iter()
            .filter(|&&(e, f)| (a.contains(&e) && b.contains(&f)) || (a.contains(&f) && b.contains(&e)))
            .count()
    }

    /// True iff no crossing involves an edge of `set`.
    pub fn is_clean(&self, set: &[usize]) -> bool {
        !self
            .crossings
            .iter()
            .any(|&(e, f)| set.contains(&e) || set.contains(&f))
    }

    pub fn is_eprime_clean(&self, p: &EdgePartition) -> bool {
        self.is_clean(p.e_prime())
    }

    /// `f_D(H_i) = v_D(H_i, H_i) + 1/2 * sum over j != i of v_D(H_i, H_j)`.
    pub fn f_value(&self, p: &EdgePartition, i: usize) -> Result<HalfInteger> {
        let hi = p.h(i)?;
        let mut doubled = 2 * self.crossings_between(hi, hi) as i64;
        for j in (1..=p.k()).filter(|&j| j != i) {
            doubled += self.crossings_between(hi, p.h(j)?) as i64;
        }
        Ok(HalfInteger::from_doubled(doubled))
    }

    /// Whether `sum_i f_D(H_i) = v(D)`. Only meaningful for E'-clean
    /// configurations; anything else is a precondition error.
    pub fn check_lemma2(&self, p: &EdgePartition) -> Result<bool> {
        if !self.is_eprime_clean(p) {
            return Err(Error::Precondition("configuration is not E'-clean".into()));
        }
        let mut total = HalfInteger::ZERO;
        for i in 1..=p.k() {
            total += self.f_value(p, i)?;
        }
        Ok(total == HalfInteger::from_int(self.len() as i64))
    }
}

/// Exact multiple of one half.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInteger {
    pub doubled: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { doubled: 0 };
    pub const HALF: HalfInteger = HalfInteger { doubled: 1 };
    pub const ONE: HalfInteger = HalfInteger { doubled: 2 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInteger { doubled }
    }

    pub fn from_int(v: i64) -> Self {
        HalfInteger { doubled: 2 * v }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        HalfInteger {
            doubled: self.doubled + rhs.doubled,
        }
    }
}

impl AddAssign for HalfInteger {
    fn add_assign(&mut self, rhs: Self) {
        self.doubled += rhs.doubled;
    }
}

impl std::iter::Sum for HalfInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(HalfInteger::ZERO, Add::add)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EdgeOutOfRange(usize),
    SelfCrossing(usize),
    AdjacentEdges(usize, usize),
    PairMultiplicity(usize, usize),
    /// The recorded order along an edge does not list exactly its crossings.
    OrderMismatch(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeOutOfRange(e) => write!(f, "edge {e} out of range"),
            Violation::SelfCrossing(e) => write!(f, "edge {e} crosses itself"),
            Violation::AdjacentEdges(e, g) => write!(f, "adjacent edges {e} and {g} cross"),
            Violation::PairMultiplicity(e, g) => write!(f, "edges {e} and {g} cross more than once"),
            Violation::OrderMismatch(e) => write!(f, "crossing order along edge {e} is inconsistent"),
        }
    }
}

/// Lists every way the configuration fails to describe a good drawing.
pub fn validate_config(g: &Graph, c: &CrossingConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = g.edge_count();
    for &(e, f) in &c.crossings {
        for x in [e, f] {
            if x >= m {
                out.push(Violation::EdgeOutOfRange(x));
            }
        }
        if e >= m || f >= m {
            continue;
        }
        if e == f {
            out.push(Violation::SelfCrossing(e));
        } else if g.adjacent_edges(e, f) {
            out.push(Violation::AdjacentEdges(e, f));
        }
    }
    for w in c.crossings.windows(2) {
        if w[0] == w[1] {
            out.push(Violation::PairMultiplicity(w[0].0, w[0].1));
        }
    }
    let fresh = CrossingConfig::new(c.crossings.iter().copied());
    for (&e, order) in &c.edge_order {
        let mut listed = order.clone();
        listed.sort_unstable();
        let expected = fresh.edge_order.get(&e);
        if expected != Some(&listed) {
            out.push(Violation::OrderMismatch(e));
        }
    }
    for &e in fresh.edge_order.keys() {
        if !c.edge_order.contains_key(&e) {
            out.push(Violation::OrderMismatch(e));
        }
    }
    out.dedup();
    out
}

fn require_valid(g: &Graph, c: &CrossingConfig) -> Result<()> {
    let v = validate_config(g, c);
    if v.is_empty() {
        Ok(())
    } else {
        let msg: Vec<String> = v.iter().map(ToString::to_string).collect();
        invalid(msg.join("; "))
    }
}

/// The graph obtained by turning every crossing into a degree-4 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    pub graph: Graph,
    /// Original vertex count; original vertices keep their indices.
    pub base_vertices: usize,
    /// Planarized edges replacing each original edge, from its smaller
    /// endpoint.
    pub edge_chains: Vec<Vec<usize>>,
    /// Vertex standing for crossing `j` of the configuration.
    pub crossing_vertex: Vec<usize>,
    /// Opposite-strand requirement at every crossing vertex.
    pub constraints: Vec<Interleave>,
}

pub fn planarize(g: &Graph, c: &CrossingConfig) -> Result<Planarization> {
    require_valid(g, c)?;
    let n = g.vertex_count();
    let index_of: BTreeMap<(usize, usize), usize> = c.crossings.iter().enumerate().map(|(j, &p)| (p, j)).collect();
    let crossing_vertex: Vec<usize> = (0..c.len()).map(|j| n + j).collect();
    let mut chains_v: Vec<Vec<usize>> = Vec::with_capacity(g.edge_count());
    let mut edges = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let mut chain = vec![a];
        for f in c.crossings_along(e) {
            chain.push(n + index_of[&(e.min(f), e.max(f))]);
        }
        chain.push(b);
        for w in chain.windows(2) {
            edges.push((w[0], w[1]));
        }
        chains_v.push(chain);
    }
    let graph = Graph::new(n + c.len(), edges)?;
    let edge_chains: Vec<Vec<usize>> = chains_v
        .iter()
        .map(|ch| ch.windows(2).map(|w| graph.edge_index(w[0], w[1]).unwrap()).collect())
        .collect();
    let mut constraints = Vec::with_capacity(c.len());
    for (j, &(e, _)) in c.crossings.iter().enumerate() {
        let x = n + j;
        let pos = chains_v[e].iter().position(|&v| v == x).unwrap();
        constraints.push(Interleave {
            vertex: x,
            strand: [edge_chains[e][pos - 1], edge_chains[e][pos]],
        });
    }
    Ok(Planarization {
        graph,
        base_vertices: n,
        edge_chains,
        crossing_vertex,
        constraints,
    })
}

impl Planarization {
    /// Rebuilds the base graph and configuration by walking through the
    /// crossing vertices along opposite strands.
    pub fn recover(&self) -> Result<(Graph, CrossingConfig)> {
        let n = self.base_vertices;
        let pg = &self.graph;
        let mut opposite: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in &self.constraints {
            let [s, t] = c.strand;
            let others: Vec<usize> = pg
                .incident(c.vertex)
                .iter()
                .map(|&(_, e)| e)
                .filter(|&e| e != s && e != t)
                .collect();
            if others.len() != 2 {
                return invalid("crossing vertex is not of degree four");
            }
            opposite.insert((c.vertex, s), t);
            opposite.insert((c.vertex, t), s);
            opposite.insert((c.vertex, others[0]), others[1]);
            opposite.insert((c.vertex, others[1]), others[0]);
        }
        let other_end = |e: usize, v: usize| {
            let (a, b) = pg.edge(e);
            if a == v {
                b
            } else {
                a
            }
        };
        let mut base_edges = Vec::new();
        // Each traced edge: (endpoints, crossing vertices along it).
        let mut traced: Vec<((usize, usize), Vec<usize>)> = Vec::new();
        for a in 0..n {
            for &(_, e0) in pg.incident(a) {
                let (mut v, mut e) = (a, e0);
                let mut through = Vec::new();
                let b = loop {
                    let w = other_end(e, v);
                    if w < n {
                        break w;
                    }
                    through.push(w);
                    e = *opposite
                        .get(&(w, e))
                        .ok_or_else(|| Error::InvalidInput("crossing vertex without strands".into()))?;
                    v = w;
                };
                if a < b {
                    base_edges.push((a, b));
                    traced.push(((a, b), through));
                }
            }
        }
        let g = Graph::new(n, base_edges)?;
        let mut at_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut orders = BTreeMap::new();
        for ((a, b), through) in &traced {
            let e = g.edge_index(*a, *b).unwrap();
            for &x in through {
                at_vertex.entry(x).or_default().push(e);
            }
            if through.len() > 1 {
                orders.insert(e, through.clone());
            }
        }
        let mut pairs = Vec::new();
        let mut pair_of: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (x, es) in &at_vertex {
            if es.len() != 2 {
                return invalid(format!("crossing vertex {x} is not shared by two edges"));
            }
            let p = (es[0].min(es[1]), es[0].max(es[1]));
            pairs.push(p);
            pair_of.insert(*x, p);
        }
        let edge_order = orders
            .into_iter()
            .map(|(e, xs)| {
                let partners = xs
                    .iter()
                    .map(|x| {
                        let (p, q) = pair_of[x];
                        if p == e {
                            q
                        } else {
                            p
                        }
                    })
                    .collect();
                (e, partners)
            })
            .collect();
        Ok((g, CrossingConfig::from_parts(pairs, edge_order)))
    }
}

/// A realized drawing: configuration plus an embedding of its planarization
/// whose Euler genus is within the budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub base: Graph,
    pub config: CrossingConfig,
    pub planarization: Planarization,
    pub scheme: EmbeddingScheme,
    pub budget: SurfaceBudget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Drawn(Box<Drawing>),
    Unrealizable,
    ResourceExhausted,
}

impl Realization {
    pub fn drawing(&self) -> Option<&Drawing> {
        match self {
            Realization::Drawn(d) => Some(d),
            _ => None,
        }
    }
}

pub fn realize_drawing(
    g: &Graph,
    c: &CrossingConfig,
    budget: SurfaceBudget,
    limits: &EmbedLimits,
) -> Result<Realization> {
    let planarization = planarize(g, c)?;
    let outcome = embed_decide(&planarization.graph, budget, &planarization.constraints, limits)?;
    Ok(match outcome {
        EmbedOutcome::Embedded(scheme) => Realization::Drawn(Box::new(Drawing {
            base: g.clone(),
            config: c.clone(),
            planarization,
            scheme,
            budget,
        })),
        EmbedOutcome::NoEmbedding => Realization::Unrealizable,
        EmbedOutcome::ResourceExhausted => Realization::ResourceExhausted,
    })
}

impl Drawing {
    /// `v(D)`, the number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.config.len()
    }

    pub fn crossings_between(&self, a: &[usize], b: &[usize]) -> usize {
        self.config.crossings_between(a, b)
    }

    pub fn is_clean(&self, set: &[usize]) -> bool {
        self.config.is_clean(set)
    }

    pub fn is_eprime_clean(&self, p: &EdgePartition) -> bool {
        self.config.is_eprime_clean(p)
    }

    pub fn f_value(&self, p: &EdgePartition, i: usize) -> Result<HalfInteger> {
        self.config.f_value(p, i)
    }

    pub fn check_lemma2(&self, p: &EdgePartition) -> Result<bool> {
        self.config.check_lemma2(p)
    }

    pub fn euler_genus(&self) -> Result<i64> {
        euler_genus(&self.planarization.graph, &self.scheme)
    }

    /// One-sidedness of each inner triangle `EC_i` in the embedding. The
    /// drawing must be E'-clean so that every triangle survives intact in the
    /// planarization.
    pub fn ec_contractibility_profile(&self, p: &EdgePartition) -> Result<Vec<bool>> {
        if !self.is_eprime_clean(p) {
            return Err(Error::Precondition("drawing is not E'-clean".into()));
        }
        (1..=p.k())
            .map(|i| cycle_one_sided(&self.planarization.graph, &self.scheme, p.triangle(i)?))
            .collect()
    }

    /// Indices `i` where `EC_i` or `EC_{i+1}` is one-sided but
    /// `f_D(H_i) < 1`. Empty for every valid E'-clean drawing.
    pub fn one_sided_charge_violations(&self, p: &EdgePartition) -> Result<Vec<usize>> {
        let profile = self.ec_contractibility_profile(p)?;
        let k = p.k();
        let mut out = Vec::new();
        for i in 1..=k {
            let next = i % k;
            if (profile[i - 1] || profile[next]) && self.f_value(p, i)? < HalfInteger::ONE {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Re-derives everything a drawing claims: good-drawing conditions, a
    /// consistent planarization, the embedding's genus, and the crossing
    /// count.
    pub fn verify(&self) -> DrawingCheck {
        let violations = validate_config(&self.base, &self.config);
        let planarization_ok = match planarize(&self.base, &self.config) {
            Ok(p) => p == self.planarization,
            Err(_) => false,
        };
        let scheme_ok = self.scheme.validate(&self.planarization.graph).is_ok();
        let genus = if scheme_ok { self.euler_genus().ok() } else { None };
        let interleaving_ok = scheme_ok
            && self.planarization.constraints.iter().all(|c| {
                let rot = &self.scheme.rotations[c.vertex];
                let pg = &self.planarization.graph;
                let (a, b) = (pg.dart_at(c.strand[0], c.vertex), pg.dart_at(c.strand[1], c.vertex));
                rot.len() == 4
                    && rot
                        .iter()
                        .position(|&d| d == a)
                        .zip(rot.iter().position(|&d| d == b))
                        .is_some_and(|(i, j)| (i + 2) % 4 == j)
            });
        let recount = self.planarization.graph.vertex_count() - self.base.vertex_count();
        DrawingCheck {
            violations,
            planarization_ok,
            scheme_ok,
            interleaving_ok,
            euler_genus: genus,
            budget: self.budget,
            crossing_count: self.crossing_count(),
            recounted_crossings: recount,
        }
    }
}

/// Outcome of [`Drawing::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawingCheck {
    pub violations: Vec<Violation>,
    pub planarization_ok: bool,
    pub scheme_ok: bool,
    pub interleaving_ok: bool,
    pub euler_genus: Option<i64>,
    pub budget: SurfaceBudget,
    pub crossing_count: usize,
    pub recounted_crossings: usize,
}

impl DrawingCheck {
    pub fn genus_ok(&self) -> bool {
        self.euler_genus
            .is_some_and(|g| g <= self.budget.max_euler_genus as i64)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.planarization_ok
            && self.scheme_ok
            && self.interleaving_ok
            && self.genus_ok()
            && self.crossing_count == self.recounted_crossings
    }
}
