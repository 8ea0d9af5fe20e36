//! Exact crossing numbers by sweeping the number of crossings upward.
//!
//! For `c = 0, 1, ...` every configuration of `c` crossing pairs (one per
//! symmetry orbit) is planarized and handed to the embedder. The first `c`
//! with a realizable configuration is the crossing number, provided every
//! smaller `c` was refuted completely.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_colored, CanonicalForm, EdgeAction, PermGroup};
use crate::drawing::{planarize, realize_drawing, CrossingConfig, Drawing, Realization};
use crate::embed::{EmbedLimits, SurfaceBudget};
use crate::error::{invalid, Result};
use crate::gp::EdgePartition;
use crate::graph::Graph;

/// Configurations tested per parallel batch.
const BATCH: usize = 512;

/// A group of automorphisms together with its action on edges.
#[derive(Clone, Debug)]
pub struct Symmetry {
    group: PermGroup,
    action: EdgeAction,
}

impl Symmetry {
    pub fn trivial(g: &Graph) -> Self {
        let group = PermGroup::trivial(g.vertex_count());
        let action = group.edge_action(g).expect("identity preserves edges");
        Symmetry { group, action }
    }

    /// The group generated by `generators`, each of which must be an
    /// automorphism of `g`.
    pub fn generated(g: &Graph, generators: &[Vec<usize>]) -> Result<Self> {
        for p in generators {
            if p.len() != g.vertex_count() || !crate::canon::is_automorphism(g, p) {
                return invalid("symmetry generator is not an automorphism");
            }
        }
        let group = PermGroup::generate(g.vertex_count(), generators);
        match group.edge_action(g) {
            Some(action) => Ok(Symmetry { group, action }),
            None => invalid("symmetry group does not preserve the edge set"),
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Image of a configuration under group element `i`.
    pub fn apply(&self, i: usize, c: &CrossingConfig) -> CrossingConfig {
        let img = &self.action.images[i];
        let rev = &self.action.reversed[i];
        let pairs = c.crossings().iter().map(|&(e, f)| (img[e], img[f]));
        let orders = c
            .edge_order()
            .iter()
            .map(|(&e, order)| {
                let mut o: Vec<usize> = order.iter().map(|&f| img[f]).collect();
                if rev[e] {
                    o.reverse();
                }
                (img[e], o)
            })
            .collect();
        CrossingConfig::from_parts(pairs, orders)
    }

    /// Orbit representative: the smallest image over the whole group.
    pub fn canonicalize(&self, c: &CrossingConfig) -> CrossingConfig {
        (0..self.order())
            .map(|i| self.apply(i, c))
            .min()
            .unwrap_or_else(|| c.clone())
    }

    pub fn is_canonical(&self, c: &CrossingConfig) -> bool {
        (0..self.order()).all(|i| self.apply(i, c) >= *c)
    }
}

/// Unordered pairs of non-adjacent distinct edges, in lexicographic order.
pub fn crossable_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            if !g.adjacent_edges(e, f) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Every way to order the crossings along multiply crossed edges, most
/// significant edge first, each in lexicographic order.
fn order_variants(pairs: &[(usize, usize)]) -> Vec<CrossingConfig> {
    let base = CrossingConfig::new(pairs.iter().copied());
    let multi: Vec<(usize, Vec<usize>)> = base.edge_order().iter().map(|(&e, o)| (e, o.clone())).collect();
    let mut out = vec![base];
    for (e, partners) in multi.iter().rev() {
        let perms = permutations(partners);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for p in &perms {
            for c in &out {
                next.push(c.clone().with_order(*e, p.clone()));
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Lexicographic stream of all `c`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, c: usize) -> Self {
        Combinations {
            n,
            idx: (0..c).collect(),
            done: c > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let c = self.idx.len();
        let mut i = c;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - c + i {
                self.idx[i] += 1;
                for j in i + 1..c {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All valid configurations with exactly `c` crossings, including every
/// crossing order along multiply crossed edges, in lexicographic order.
pub fn enumerate_all_configs(g: &Graph, c: usize) -> impl Iterator<Item = CrossingConfig> {
    configs_from_pairs(crossable_pairs(g), c)
}

/// Configurations made of `c` distinct pairs from `pairs` (which should be
/// sorted), with every crossing order, in lexicographic order.
pub fn configs_from_pairs(pairs: Vec<(usize, usize)>, c: usize) -> impl Iterator<Item = CrossingConfig> {
    Combinations::new(pairs.len(), c).flat_map(move |idx| {
        let chosen: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        order_variants(&chosen)
    })
}

/// One canonical representative per symmetry orbit of the configurations
/// with exactly `c` crossings, in lexicographic order.
pub fn enumerate_configs<'a>(g: &Graph, c: usize, sym: &'a Symmetry) -> impl Iterator<Item = CrossingConfig> + 'a {
    enumerate_all_configs(g, c).filter(move |cfg| sym.is_canonical(cfg))
}

/// Tie-breaking order in which candidates are tried. It never changes which
/// values are reported, only how soon a witness turns up.
#[derive(Clone, Debug, Default)]
pub enum CandidateOrder {
    #[default]
    Lexicographic,
    /// Configurations whose crossings touch fewer rim classes `H_i` first.
    FewRimClassesFirst(EdgePartition),
}

impl CandidateOrder {
    fn passes(&self) -> usize {
        match self {
            CandidateOrder::Lexicographic => 1,
            CandidateOrder::FewRimClassesFirst(p) => p.k() + 1,
        }
    }

    fn pass_of(&self, c: &CrossingConfig) -> usize {
        match self {
            CandidateOrder::Lexicographic => 0,
            CandidateOrder::FewRimClassesFirst(p) => {
                let mut touched: Vec<usize> = c
                    .crossings()
                    .iter()
                    .flat_map(|&(e, f)| [e, f])
                    .filter_map(|e| p.rim_block_of(e))
                    .collect();
                touched.sort_unstable();
                touched.dedup();
                touched.len()
            }
        }
    }
}

/// Knobs shared by the exhaustive routines.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub deadline: Option<Instant>,
    pub order: CandidateOrder,
    /// Skip planarizations isomorphic to ones already refuted.
    pub memoize: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub crossings: usize,
    /// Configurations generated, before orbit reduction.
    pub enumerated: u64,
    /// Orbit representatives among them.
    pub canonical: u64,
    /// Representatives whose planarization was handed to the embedder.
    pub tested: u64,
    /// Representatives shown unrealizable (tested or via the memo).
    pub refuted: u64,
    pub memo_hits: u64,
    /// Representatives whose test ran out of time.
    pub exhausted: u64,
}

#[derive(Clone, Debug)]
pub enum Decision {
    Witness(Box<Drawing>),
    Refuted,
    Inconclusive,
}

/// Decides whether some `c`-crossing configuration is realizable in the
/// budget. The result only implies a crossing-number value when every
/// smaller count was refuted first.
pub fn decide_crossing_bound(
    g: &Graph,
    budget: SurfaceBudget,
    c: usize,
    sym: &Symmetry,
    opts: &SearchOptions,
) -> Result<(Decision, LevelStats)> {
    if !g.is_connected() {
        return invalid("crossing numbers are computed for connected graphs");
    }
    let mut stats = LevelStats {
        crossings: c,
        ..LevelStats::default()
    };
    let limits = EmbedLimits {
        deadline: opts.deadline,
        ..EmbedLimits::default()
    };
    let mut refuted_forms: HashSet<CanonicalForm> = HashSet::new();
    let mut any_exhausted = false;

    for pass in 0..opts.order.passes() {
        let mut stream = enumerate_all_configs(g, c).filter(|cfg| opts.order.pass_of(cfg) == pass);
        loop {
            let raw: Vec<CrossingConfig> = stream.by_ref().take(BATCH * 8).collect();
            if raw.is_empty() {
                break;
            }
            if pass == 0 {
                stats.enumerated += raw.len() as u64;
            }
            let reps: Vec<CrossingConfig> = raw.into_par_iter().filter(|cfg| sym.is_canonical(cfg)).collect();
            stats.canonical += reps.len() as u64;

            let keyed: Vec<(CrossingConfig, Option<CanonicalForm>)> = if opts.memoize {
                reps.into_par_iter()
                    .map(|cfg| {
                        let key = strand_form(g, &cfg);
                        (cfg, Some(key))
                    })
                    .collect()
            } else {
                reps.into_iter().map(|cfg| (cfg, None)).collect()
            };
            // Within a batch, later copies of a strand form follow the
            // verdict of the first.
            let mut todo: Vec<&CrossingConfig> = Vec::with_capacity(keyed.len());
            let mut copy_of: Vec<Option<usize>> = Vec::with_capacity(keyed.len());
            let mut first_with: HashMap<&CanonicalForm, usize> = HashMap::new();
            for (cfg, key) in &keyed {
                match key {
                    Some(k) if refuted_forms.contains(k) => {
                        stats.memo_hits += 1;
                        stats.refuted += 1;
                    }
                    Some(k) if first_with.contains_key(k) => {
                        stats.memo_hits += 1;
                        copy_of.push(Some(first_with[k]));
                    }
                    _ => {
                        if let Some(k) = key {
                            first_with.insert(k, todo.len());
                        }
                        todo.push(cfg);
                    }
                }
            }
            stats.tested += todo.len() as u64;
            let verdicts: Vec<Realization> = todo
                .par_iter()
                .map(|cfg| realize_drawing(g, cfg, budget, &limits).expect("enumerated configurations are valid"))
                .collect();
            let verdicts_refuted: Vec<bool> = verdicts
                .iter()
                .map(|v| matches!(v, Realization::Unrealizable))
                .collect();
            for first in copy_of.into_iter().flatten() {
                match verdicts[first] {
                    Realization::Unrealizable => stats.refuted += 1,
                    Realization::ResourceExhausted => stats.exhausted += 1,
                    Realization::Drawn(_) => {}
                }
            }
            let mut witness = None;
            for verdict in verdicts {
                match verdict {
                    Realization::Drawn(d) => {
                        if witness.is_none() {
                            witness = Some(d);
                        }
                    }
                    Realization::Unrealizable => stats.refuted += 1,
                    Realization::ResourceExhausted => {
                        stats.exhausted += 1;
                        any_exhausted = true;
                    }
                }
            }
            for (k, &i) in &first_with {
                if matches!(verdicts_refuted.get(i), Some(true)) {
                    refuted_forms.insert((*k).clone());
                }
            }
            if let Some(d) = witness {
                return Ok((Decision::Witness(d), stats));
            }
            if any_exhausted {
                return Ok((Decision::Inconclusive, stats));
            }
        }
    }
    Ok((Decision::Refuted, stats))
}

/// Canonical form of the planarization with each crossing vertex split into
/// two adjacent marked vertices, one per strand. Two configurations with the
/// same form are realizable together or not at all.
fn strand_form(g: &Graph, cfg: &CrossingConfig) -> CanonicalForm {
    let pl = planarize(g, cfg).expect("enumerated configurations are valid");
    let pg = &pl.graph;
    let n = pl.base_vertices;
    let x = cfg.len();
    // Crossing j becomes vertices n + 2j (first strand) and n + 2j + 1.
    let split = |v: usize, e: usize| -> usize {
        if v < n {
            return v;
        }
        let j = v - n;
        let c = &pl.constraints[j];
        n + 2 * j + usize::from(!c.strand.contains(&e))
    };
    let mut edges: Vec<(usize, usize)> = pg
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (split(a, e), split(b, e)))
        .collect();
    for j in 0..x {
        edges.push((n + 2 * j, n + 2 * j + 1));
    }
    let h = Graph::new(n + 2 * x, edges).expect("split planarization is simple");
    let mut colors = vec![0u32; n + 2 * x];
    for c in colors.iter_mut().skip(n) {
        *c = 1;
    }
    canonical_form_colored(&h, &colors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    LowerBoundOnly,
    UpperBoundOnly,
    Inconclusive,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Exact => "exact",
            SolveStatus::LowerBoundOnly => "lower_bound_only",
            SolveStatus::UpperBoundOnly => "upper_bound_only",
            SolveStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub enum Strategy {
    #[default]
    Exhaustive,
    Randomized {
        seed: u64,
    },
}

#[derive(Clone, Debug)]
pub struct SolveRequest {
    pub graph: Graph,
    pub budget: SurfaceBudget,
    /// Largest crossing count tried, inclusive.
    pub max_c: usize,
    /// Automorphism generators used for orbit reduction.
    pub symmetry: Vec<Vec<usize>>,
    pub strategy: Strategy,
    pub time_budget: Option<Duration>,
    pub order: CandidateOrder,
    pub memoize: bool,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub jobs: Option<usize>,
}

impl SolveRequest {
    pub fn new(graph: Graph, budget: SurfaceBudget, max_c: usize) -> Self {
        SolveRequest {
            graph,
            budget,
            max_c,
            symmetry: Vec::new(),
            strategy: Strategy::Exhaustive,
            time_budget: None,
            order: CandidateOrder::Lexicographic,
            memoize: false,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub status: SolveStatus,
    /// Every count below this was refuted exhaustively.
    pub lower_bound: usize,
    /// Crossings of the witness, if one was found.
    pub upper_bound: Option<usize>,
    pub witness: Option<Drawing>,
    pub levels: Vec<LevelStats>,
    pub budget: SurfaceBudget,
    pub max_c: usize,
    pub seed: Option<u64>,
    pub group_order: usize,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn value(&self) -> Option<usize> {
        (self.status == SolveStatus::Exact).then_some(self.lower_bound)
    }

    pub fn summary(&self) -> String {
        match self.status {
            SolveStatus::Exact => format!("exact {}", self.lower_bound),
            SolveStatus::LowerBoundOnly => format!("lower_bound_only >= {}", self.lower_bound),
            SolveStatus::UpperBoundOnly => format!(
                "upper_bound_only <= {} (>= {})",
                self.upper_bound.unwrap_or_default(),
                self.lower_bound
            ),
            SolveStatus::Inconclusive => format!("inconclusive >= {}", self.lower_bound),
        }
    }
}

pub fn solve_crossing_number(req: &SolveRequest) -> Result<SolveReport> {
    match req.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| crate::error::Error::InvalidInput(e.to_string()))?;
            pool.install(|| solve_inner(req))
        }
        None => solve_inner(req),
    }
}

fn solve_inner(req: &SolveRequest) -> Result<SolveReport> {
    let start = Instant::now();
    let g = &req.graph;
    if !g.is_connected() {
        return invalid("crossing numbers are computed for connected graphs");
    }
    let sym = Symmetry::generated(g, &req.symmetry)?;
    let deadline = req.time_budget.map(|d| start + d);
    let mut report = SolveReport {
        status: SolveStatus::Inconclusive,
        lower_bound: 0,
        upper_bound: None,
        witness: None,
        levels: Vec::new(),
        budget: req.budget,
        max_c: req.max_c,
        seed: None,
        group_order: sym.order(),
        elapsed: Duration::ZERO,
    };
    match req.strategy {
        Strategy::Exhaustive => {
            let opts = SearchOptions {
                deadline,
                order: req.order.clone(),
                memoize: req.memoize,
            };
            for c in 0..=req.max_c {
                let (decision, stats) = decide_crossing_bound(g, req.budget, c, &sym, &opts)?;
                report.levels.push(stats);
                match decision {
                    Decision::Witness(d) => {
                        report.upper_bound = Some(c);
                        report.witness = Some(*d);
                        break;
                    }
                    Decision::Refuted => report.lower_bound = c + 1,
                    Decision::Inconclusive => break,
                }
            }
        }
        Strategy::Randomized { seed } => {
            report.seed = Some(seed);
            for c in 0..=req.max_c {
                let remaining = deadline.map(|d| d.saturating_duration_since(Instant::now()));
                let share = remaining.map(|r| r / (req.max_c - c + 1) as u32);
                let probe = randomized_probe(g, c, req.budget, &sym, seed, share)?;
                if let Some(d) = probe.witness {
                    report.upper_bound = Some(c);
                    report.witness = Some(d);
                    break;
                }
            }
        }
    }
    report.status = match report.upper_bound {
        Some(u) if u == report.lower_bound => SolveStatus::Exact,
        Some(_) => SolveStatus::UpperBoundOnly,
        None if report.lower_bound > 0 => SolveStatus::LowerBoundOnly,
        None => SolveStatus::Inconclusive,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub crossings: usize,
    pub seed: u64,
    pub witness: Option<Drawing>,
    pub samples: u64,
    /// Distinct orbit representatives tested.
    pub tested: u64,
    pub elapsed: Duration,
}

impl ProbeReport {
    /// `upper_bound_only` when a witness was found; a failed probe proves
    /// nothing and is `inconclusive`.
    pub fn status(&self) -> SolveStatus {
        if self.witness.is_some() {
            SolveStatus::UpperBoundOnly
        } else {
            SolveStatus::Inconclusive
        }
    }
}

/// Samples random `c`-crossing configurations (uniform over sets of
/// crossable pairs, then uniform crossing orders) until one is realizable or
/// the time runs out. Without a time limit the probe runs until it finds a
/// witness or has tried every orbit.
pub fn randomized_probe(
    g: &Graph,
    c: usize,
    budget: SurfaceBudget,
    sym: &Symmetry,
    seed: u64,
    time: Option<Duration>,
) -> Result<ProbeReport> {
    let start = Instant::now();
    let deadline = time.map(|t| start + t);
    if !g.is_connected() {
        return invalid("crossing numbers are computed for connected graphs");
    }
    let pairs = crossable_pairs(g);
    let mut report = ProbeReport {
        crossings: c,
        seed,
        witness: None,
        samples: 0,
        tested: 0,
        elapsed: Duration::ZERO,
    };
    if c > pairs.len() {
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = EmbedLimits {
        deadline,
        ..EmbedLimits::default()
    };
    let mut seen: HashSet<CrossingConfig> = HashSet::new();
    let mut stale = 0u32;
    loop {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        let mut batch = Vec::with_capacity(BATCH);
        while batch.len() < BATCH && stale < 64 {
            let chosen: Vec<(usize, usize)> = pairs.choose_multiple(&mut rng, c).copied().collect();
            let mut cfg = CrossingConfig::new(chosen);
            let multi: Vec<(usize, Vec<usize>)> = cfg.edge_order().iter().map(|(&e, o)| (e, o.clone())).collect();
            for (e, mut order) in multi {
                order.shuffle(&mut rng);
                cfg = cfg.with_order(e, order);
            }
            report.samples += 1;
            let rep = sym.canonicalize(&cfg);
            if seen.insert(rep.clone()) {
                batch.push(rep);
                stale = 0;
            } else {
                stale += 1;
            }
        }
        if batch.is_empty() {
            break;
        }
        report.tested += batch.len() as u64;
        let verdicts: Vec<Realization> = batch
            .par_iter()
            .map(|cfg| realize_drawing(g, cfg, budget, &limits).expect("sampled configurations are valid"))
            .collect();
        if let Some(d) = verdicts.into_iter().find_map(|v| match v {
            Realization::Drawn(d) => Some(d),
            _ => None,
        }) {
            let check = d.verify();
            if check.passed() && check.recounted_crossings == c {
                report.witness = Some(*d);
                break;
            }
        }
        if stale >= 64 {
            // Every recent sample repeated an earlier orbit: stop rather than
            // spin on a small, fully tested space.
            break;
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
