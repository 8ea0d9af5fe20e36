//! Versioned JSON files: `graph/1`, `drawing/1` (with an embedded
//! `scheme/1`) and `report/1`.
//!
//! Vertices and edges are 1-based in files. Edge `i` is the `i`-th pair of
//! the graph's sorted edge list. Rotations list neighbour vertices, which is
//! unambiguous because planarizations are simple graphs. Writers emit fields
//! in a fixed order, so equal inputs give equal bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::drawing::{planarize, validate_config, CrossingConfig, Drawing};
use crate::embed::{EmbeddingScheme, SurfaceBudget};
use crate::error::{invalid, Error, Result};
use crate::gp::{build_generalized_petersen, GpGraph};
use crate::graph::Graph;
use crate::solver::{LevelStats, ProbeReport, SolveReport, Strategy};

/// A graph as read from a file or a `gp:n,k` spec, remembering its
/// generalized Petersen parameters when it has them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub gp: Option<GpGraph>,
}

impl LoadedGraph {
    pub fn plain(graph: Graph) -> Self {
        LoadedGraph { graph, gp: None }
    }

    pub fn from_gp(gp: GpGraph) -> Self {
        LoadedGraph {
            graph: gp.graph().clone(),
            gp: Some(gp),
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        match &self.gp {
            Some(gp) => gp.name(v),
            None => format!("{}", v + 1),
        }
    }

    pub fn edge_name(&self, e: usize) -> String {
        let (a, b) = self.graph.edge(e);
        match &self.gp {
            Some(gp) => gp.edge_name(e),
            None => format!("{}-{}", a + 1, b + 1),
        }
    }

    /// Known automorphism generators (none for plain graphs).
    pub fn symmetry_generators(&self) -> Vec<Vec<usize>> {
        self.gp.as_ref().map(GpGraph::symmetry_generators).unwrap_or_default()
    }

    pub fn label(&self) -> String {
        match &self.gp {
            Some(gp) => format!("P({},{})", gp.n(), gp.k()),
            None => format!("graph on {} vertices", self.graph.vertex_count()),
        }
    }
}

/// Parses `gp:n,k`.
pub fn parse_gp_spec(spec: &str) -> Result<GpGraph> {
    let body = spec
        .strip_prefix("gp:")
        .ok_or_else(|| Error::InvalidInput(format!("expected gp:n,k, got {spec:?}")))?;
    let (n, k) = body
        .split_once(',')
        .ok_or_else(|| Error::InvalidInput(format!("expected gp:n,k, got {spec:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidInput(format!("not a number in {spec:?}: {s:?}")))
    };
    build_generalized_petersen(parse(n)?, parse(k)?)
}

/// A `gp:n,k` spec or a path to a `graph/1` file.
pub fn load_graph_arg(arg: &str) -> Result<LoadedGraph> {
    if arg.starts_with("gp:") {
        Ok(LoadedGraph::from_gp(parse_gp_spec(arg)?))
    } else {
        read_graph(arg)
    }
}

fn check_format(found: &str, kind: &str) -> Result<()> {
    match found.split_once('/') {
        Some((k, "1")) if k == kind => Ok(()),
        Some((k, v)) if k == kind => Err(Error::Format(format!("unsupported {kind} version {v}"))),
        _ => Err(Error::Format(format!("expected a {kind}/1 document, found {found:?}"))),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub format: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub names: BTreeMap<String, String>,
}

impl GraphFile {
    pub fn from_loaded(g: &LoadedGraph) -> Self {
        GraphFile {
            format: "graph/1".into(),
            n: g.graph.vertex_count(),
            edges: g.graph.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            family: g.gp.as_ref().map(|gp| format!("gp:{},{}", gp.n(), gp.k())),
            names: match &g.gp {
                Some(gp) => (0..g.graph.vertex_count())
                    .map(|v| ((v + 1).to_string(), gp.name(v)))
                    .collect(),
                None => BTreeMap::new(),
            },
        }
    }

    pub fn to_loaded(&self) -> Result<LoadedGraph> {
        check_format(&self.format, "graph")?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            if a == 0 || b == 0 {
                return invalid("vertex numbers in graph files start at 1");
            }
            edges.push((a - 1, b - 1));
        }
        let graph = Graph::new(self.n, edges)?;
        let gp = match &self.family {
            Some(spec) => {
                let gp = parse_gp_spec(spec)?;
                if gp.graph() != &graph {
                    return invalid(format!("edges do not match declared family {spec}"));
                }
                Some(gp)
            }
            None => None,
        };
        Ok(LoadedGraph { graph, gp })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub max_euler_genus: u32,
    pub name: String,
}

impl From<SurfaceBudget> for SurfaceFile {
    fn from(b: SurfaceBudget) -> Self {
        SurfaceFile {
            max_euler_genus: b.max_euler_genus,
            name: b.name().into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeFile {
    pub format: String,
    /// Vertex count of the planarization; crossing vertices follow the base
    /// vertices.
    pub vertices: usize,
    /// Neighbours of each vertex in rotation order.
    pub rotations: Vec<Vec<usize>>,
    /// Signature of each planarization edge, in sorted edge order.
    pub signatures: Vec<i8>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DrawingFile {
    pub format: String,
    pub graph: GraphFile,
    pub surface: SurfaceFile,
    pub crossings: Vec<[usize; 2]>,
    #[serde(default)]
    pub edge_order: BTreeMap<String, Vec<usize>>,
    pub scheme: SchemeFile,
}

impl DrawingFile {
    pub fn from_drawing(d: &Drawing, g: &LoadedGraph) -> Self {
        let pg = &d.planarization.graph;
        let rotations = d
            .scheme
            .rotations
            .iter()
            .map(|rot| rot.iter().map(|&dart| pg.dart_vertex(dart ^ 1) + 1).collect())
            .collect();
        DrawingFile {
            format: "drawing/1".into(),
            graph: GraphFile::from_loaded(g),
            surface: d.budget.into(),
            crossings: d.config.crossings().iter().map(|&(e, f)| [e + 1, f + 1]).collect(),
            edge_order: d
                .config
                .edge_order()
                .iter()
                .map(|(&e, o)| ((e + 1).to_string(), o.iter().map(|f| f + 1).collect()))
                .collect(),
            scheme: SchemeFile {
                format: "scheme/1".into(),
                vertices: pg.vertex_count(),
                rotations,
                signatures: d.scheme.signatures.clone(),
            },
        }
    }

    /// The parts of the document that can be read without judging them.
    pub fn decode(&self) -> Result<DecodedDrawing> {
        check_format(&self.format, "drawing")?;
        check_format(&self.scheme.format, "scheme")?;
        let graph = self.graph.to_loaded()?;
        let one_based = |x: usize| {
            x.checked_sub(1)
                .ok_or_else(|| Error::InvalidInput("edge numbers in drawing files start at 1".into()))
        };
        let mut pairs = Vec::with_capacity(self.crossings.len());
        for &[e, f] in &self.crossings {
            pairs.push((one_based(e)?, one_based(f)?));
        }
        let mut orders = BTreeMap::new();
        for (key, order) in &self.edge_order {
            let e: usize = key
                .parse()
                .map_err(|_| Error::InvalidInput(format!("edge_order key {key:?} is not an edge number")))?;
            let order = order.iter().map(|&f| one_based(f)).collect::<Result<Vec<_>>>()?;
            orders.insert(one_based(e)?, order);
        }
        let config = CrossingConfig::from_parts(pairs, orders);
        let budget = SurfaceBudget::new(self.surface.max_euler_genus as i64)?;
        let rotations = self
            .scheme
            .rotations
            .iter()
            .map(|r| r.iter().map(|&w| one_based(w)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(DecodedDrawing {
            graph,
            config,
            budget,
            vertices: self.scheme.vertices,
            rotations,
            signatures: self.scheme.signatures.clone(),
        })
    }
}

/// A drawing file's contents before any consistency checks.
#[derive(Clone, Debug)]
pub struct DecodedDrawing {
    pub graph: LoadedGraph,
    pub config: CrossingConfig,
    pub budget: SurfaceBudget,
    pub vertices: usize,
    /// 0-based neighbour lists.
    pub rotations: Vec<Vec<usize>>,
    pub signatures: Vec<i8>,
}

impl DecodedDrawing {
    /// Rebuilds the drawing. Fails when the configuration is not a good
    /// drawing or the rotations do not fit the planarization; the embedding
    /// itself is not judged here (see [`verify_drawing`]).
    pub fn to_drawing(&self) -> Result<Drawing> {
        let planarization = planarize(&self.graph.graph, &self.config)?;
        let pg = &planarization.graph;
        if self.vertices != pg.vertex_count() || self.rotations.len() != pg.vertex_count() {
            return invalid("scheme vertex count does not match the planarization");
        }
        let mut rotations = Vec::with_capacity(self.rotations.len());
        for (v, nbrs) in self.rotations.iter().enumerate() {
            let mut rot = Vec::with_capacity(nbrs.len());
            for &w in nbrs {
                let e = pg.edge_index(v, w).ok_or_else(|| {
                    Error::InvalidInput(format!("rotation at {} names non-neighbour {}", v + 1, w + 1))
                })?;
                rot.push(pg.dart_at(e, v));
            }
            rotations.push(rot);
        }
        Ok(Drawing {
            base: self.graph.graph.clone(),
            config: self.config.clone(),
            planarization,
            scheme: EmbeddingScheme {
                rotations,
                signatures: self.signatures.clone(),
            },
            budget: self.budget,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub checks: Vec<CheckLine>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == CheckOutcome::Pass)
    }

    fn push(&mut self, name: &'static str, ok: Option<bool>, detail: impl Into<String>) {
        let outcome = match ok {
            Some(true) => CheckOutcome::Pass,
            Some(false) => CheckOutcome::Fail,
            None => CheckOutcome::Skipped,
        };
        self.checks.push(CheckLine {
            name,
            outcome,
            detail: detail.into(),
        });
    }
}

/// Re-derives every claim a drawing file makes.
pub fn verify_drawing(doc: &DecodedDrawing) -> Verdict {
    let mut v = Verdict { checks: Vec::new() };
    let violations = validate_config(&doc.graph.graph, &doc.config);
    let detail: Vec<String> = violations.iter().map(ToString::to_string).collect();
    v.push("good_drawing", Some(violations.is_empty()), detail.join("; "));
    let drawing = match doc.to_drawing() {
        Ok(d) => {
            v.push(
                "planarization",
                Some(true),
                format!("{} vertices", d.planarization.graph.vertex_count()),
            );
            d
        }
        Err(e) => {
            v.push("planarization", Some(false), e.to_string());
            for name in ["scheme", "interleaving", "euler_genus", "crossing_count"] {
                v.push(name, None, "needs a planarization");
            }
            return v;
        }
    };
    let check = drawing.verify();
    let scheme_detail = match drawing.scheme.validate(&drawing.planarization.graph) {
        Ok(()) => String::new(),
        Err(e) => e.to_string(),
    };
    v.push("scheme", Some(check.scheme_ok), scheme_detail);
    v.push("interleaving", Some(check.interleaving_ok), "");
    match check.euler_genus {
        Some(g) => v.push(
            "euler_genus",
            Some(check.genus_ok()),
            format!("{g} against budget {}", doc.budget.max_euler_genus),
        ),
        None => v.push("euler_genus", Some(false), "could not trace faces"),
    }
    v.push(
        "crossing_count",
        Some(check.crossing_count == check.recounted_crossings),
        format!("{} crossings", check.recounted_crossings),
    );
    v
}

fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    fs::write(path, to_json_string(value)?)?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<LoadedGraph> {
    read_json::<GraphFile>(path)?.to_loaded()
}

pub fn write_graph(path: impl AsRef<Path>, g: &LoadedGraph) -> Result<()> {
    write_json(path, &GraphFile::from_loaded(g))
}

pub fn read_drawing(path: impl AsRef<Path>) -> Result<DecodedDrawing> {
    read_json::<DrawingFile>(path)?.decode()
}

pub fn write_drawing(path: impl AsRef<Path>, d: &Drawing, g: &LoadedGraph) -> Result<()> {
    write_json(path, &DrawingFile::from_drawing(d, g))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveReportFile {
    pub format: String,
    pub kind: String,
    pub graph: GraphFile,
    pub surface: SurfaceFile,
    pub strategy: String,
    pub seed: Option<u64>,
    pub max_c: usize,
    pub time_budget_ms: Option<u64>,
    pub group_order: usize,
    pub status: String,
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    pub levels: Vec<LevelStats>,
    pub elapsed_ms: u64,
    pub witness: Option<DrawingFile>,
}

impl SolveReportFile {
    pub fn new(
        r: &SolveReport,
        g: &LoadedGraph,
        strategy: &Strategy,
        time_budget: Option<std::time::Duration>,
    ) -> Self {
        SolveReportFile {
            format: "report/1".into(),
            kind: "solve".into(),
            graph: GraphFile::from_loaded(g),
            surface: r.budget.into(),
            strategy: match strategy {
                Strategy::Exhaustive => "exhaustive".into(),
                Strategy::Randomized { .. } => "randomized".into(),
            },
            seed: r.seed,
            max_c: r.max_c,
            time_budget_ms: time_budget.map(|d| d.as_millis() as u64),
            group_order: r.group_order,
            status: r.status.as_str().into(),
            value: r.value(),
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            levels: r.levels.clone(),
            elapsed_ms: r.elapsed.as_millis() as u64,
            witness: r.witness.as_ref().map(|d| DrawingFile::from_drawing(d, g)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProbeReportFile {
    pub format: String,
    pub kind: String,
    pub graph: GraphFile,
    pub surface: SurfaceFile,
    pub crossings: usize,
    pub seed: u64,
    pub time_budget_ms: Option<u64>,
    pub status: String,
    pub samples: u64,
    pub tested: u64,
    pub elapsed_ms: u64,
    pub witness: Option<DrawingFile>,
}

impl ProbeReportFile {
    pub fn new(
        r: &ProbeReport,
        g: &LoadedGraph,
        budget: SurfaceBudget,
        time_budget: Option<std::time::Duration>,
    ) -> Self {
        ProbeReportFile {
            format: "report/1".into(),
            kind: "probe".into(),
            graph: GraphFile::from_loaded(g),
            surface: budget.into(),
            crossings: r.crossings,
            seed: r.seed,
            time_budget_ms: time_budget.map(|d| d.as_millis() as u64),
            status: r.status().as_str().into(),
            samples: r.samples,
            tested: r.tested,
            elapsed_ms: r.elapsed.as_millis() as u64,
            witness: r.witness.as_ref().map(|d| DrawingFile::from_drawing(d, g)),
        }
    }
}

/// Reads any `report/1` document, checking only the header.
pub fn read_report(path: impl AsRef<Path>) -> Result<serde_json::Value> {
    let value: serde_json::Value = read_json(path)?;
    let format = value.get("format").and_then(|f| f.as_str()).unwrap_or_default();
    check_format(format, "report")?;
    Ok(value)
}

pub fn write_report<T: Serialize>(path: impl AsRef<Path>, report: &T) -> Result<()> {
    write_json(path, report)
}
