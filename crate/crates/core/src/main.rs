use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use gpcross::embed::SurfaceBudget;
use gpcross::error::{Error, Result};
use gpcross::io::{
    load_graph_arg, read_drawing, to_json_string, verify_drawing, write_graph, write_report, CheckOutcome,
    DecodedDrawing, DrawingFile, LoadedGraph, ProbeReportFile, SolveReportFile,
};
use gpcross::repro::{run_suite, ClaimStatus, ReproOptions, Suite};
use gpcross::solver::{randomized_probe, solve_crossing_number, SolveRequest, SolveStatus, Strategy, Symmetry};
use gpcross::svg::render_svg;

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gpcross",
    version,
    about = "Crossing numbers of generalized Petersen graphs in the sphere and the projective plane"
)]
struct Cli {
    /// Worker threads (default: GPCROSS_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Sphere,
    Projective,
}

impl From<Surface> for SurfaceBudget {
    fn from(s: Surface) -> Self {
        match s {
            Surface::Sphere => SurfaceBudget::SPHERE,
            Surface::Projective => SurfaceBudget::PROJECTIVE_PLANE,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Randomized,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Default,
    Extended,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph/1 file for gp:n,k.
    Gen {
        spec: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute the crossing number of a graph file or gp:n,k.
    Solve {
        graph: String,
        #[arg(long, value_enum, default_value = "projective")]
        surface: Surface,
        #[arg(long, default_value_t = 8)]
        max_c: usize,
        /// Time budget in seconds (default: GPCROSS_TIME_BUDGET or 3600).
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip planarizations isomorphic to refuted ones.
        #[arg(long)]
        memoize: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the witness as a drawing/1 file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Re-check a drawing/1 file, or the witness inside a report/1 file.
    Verify { drawing: PathBuf },
    /// Run the reproduction suite.
    Repro {
        #[arg(long, value_enum, default_value = "default")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Time budget per claim in seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Look for a drawing of P(3k,k) with c crossings by random sampling.
    Probe {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, value_enum, default_value = "projective")]
        surface: Surface,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw a drawing/1 file as SVG.
    Render {
        drawing: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn env_number<T: std::str::FromStr>(name: &str) -> Result<Option<T>> {
    match std::env::var(name) {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidInput(format!("{name} is not a number: {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn time_budget(flag: Option<f64>) -> Result<Duration> {
    let secs = match flag {
        Some(s) => s,
        None => env_number::<f64>("GPCROSS_TIME_BUDGET")?.unwrap_or(3600.0),
    };
    if !secs.is_finite() || secs <= 0.0 {
        return Err(Error::InvalidInput(format!("time budget must be positive, got {secs}")));
    }
    Ok(Duration::from_secs_f64(secs))
}

fn file_stem(g: &LoadedGraph) -> String {
    match &g.gp {
        Some(gp) => format!("p{}_{}", gp.n(), gp.k()),
        None => "graph".into(),
    }
}

/// A drawing file, or the witness of a report file.
fn load_drawing(path: &PathBuf) -> Result<DecodedDrawing> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let format = value.get("format").and_then(|f| f.as_str()).unwrap_or_default();
    if format.starts_with("report/") {
        gpcross::io::read_report(path)?;
        let witness = value
            .get("witness")
            .filter(|w| !w.is_null())
            .ok_or_else(|| Error::InvalidInput("report has no witness".into()))?;
        return serde_json::from_value::<DrawingFile>(witness.clone())?.decode();
    }
    read_drawing(path)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { spec, out } => {
            let g = LoadedGraph::from_gp(gpcross::io::parse_gp_spec(&spec)?);
            let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.graph.json", file_stem(&g))));
            write_graph(&path, &g)?;
            let regular = if g.graph.is_regular(3) {
                "3-regular"
            } else {
                "not regular"
            };
            println!(
                "{}: {} vertices, {} edges, {regular}",
                g.label(),
                g.graph.vertex_count(),
                g.graph.edge_count()
            );
            println!("wrote {}", path.display());
            Ok(0)
        }
        Command::Solve {
            graph,
            surface,
            max_c,
            budget,
            strategy,
            seed,
            memoize,
            out,
            witness,
        } => {
            let g = load_graph_arg(&graph)?;
            let time = time_budget(budget)?;
            let mut req = SolveRequest::new(g.graph.clone(), surface.into(), max_c);
            req.symmetry = g.symmetry_generators();
            req.time_budget = Some(time);
            req.memoize = memoize;
            req.strategy = match strategy {
                StrategyArg::Exhaustive => Strategy::Exhaustive,
                StrategyArg::Randomized => Strategy::Randomized { seed },
            };
            let report = solve_crossing_number(&req)?;
            let path =
                out.unwrap_or_else(|| PathBuf::from(format!("{}-{}.report.json", file_stem(&g), req.budget.name())));
            write_report(
                &path,
                &SolveReportFile::new(&report, &g, &req.strategy, req.time_budget),
            )?;
            for l in &report.levels {
                println!(
                    "c={} configs={} orbits={} refuted={} exhausted={}",
                    l.crossings, l.enumerated, l.canonical, l.refuted, l.exhausted
                );
            }
            if let (Some(w), Some(p)) = (&report.witness, &witness) {
                std::fs::write(p, to_json_string(&DrawingFile::from_drawing(w, &g))?)?;
            }
            if let Some(w) = &report.witness {
                let names: Vec<String> = w
                    .config
                    .crossings()
                    .iter()
                    .map(|&(e, f)| format!("{} x {}", g.edge_name(e), g.edge_name(f)))
                    .collect();
                println!(
                    "witness: {}",
                    if names.is_empty() {
                        "no crossings".into()
                    } else {
                        names.join(", ")
                    }
                );
            }
            println!("{} {}: {}", g.label(), req.budget.name(), report.summary());
            println!("wrote {}", path.display());
            let exhausted = report.levels.iter().any(|l| l.exhausted > 0);
            Ok(match report.status {
                SolveStatus::Exact => 0,
                SolveStatus::LowerBoundOnly if !exhausted => 0,
                _ => EXIT_INCONCLUSIVE,
            })
        }
        Command::Verify { drawing } => {
            let doc = load_drawing(&drawing)?;
            let verdict = verify_drawing(&doc);
            for c in &verdict.checks {
                let outcome = match c.outcome {
                    CheckOutcome::Pass => "pass",
                    CheckOutcome::Fail => "FAIL",
                    CheckOutcome::Skipped => "skipped",
                };
                if c.detail.is_empty() {
                    println!("{:<16} {outcome}", c.name);
                } else {
                    println!("{:<16} {outcome}  {}", c.name, c.detail);
                }
            }
            println!("verdict: {}", if verdict.passed() { "valid" } else { "invalid" });
            Ok(if verdict.passed() { 0 } else { EXIT_FAILED })
        }
        Command::Repro {
            suite,
            seed,
            budget,
            samples,
            out,
        } => {
            let opts = ReproOptions {
                suite: match suite {
                    SuiteArg::Default => Suite::Default,
                    SuiteArg::Extended => Suite::Extended,
                },
                seed,
                claim_budget: Some(time_budget(budget)?),
                samples,
            };
            let report = run_suite(&opts)?;
            print!("{}", report.table());
            let path = out.unwrap_or_else(|| PathBuf::from("repro.report.json"));
            write_report(&path, &report)?;
            println!("wrote {}", path.display());
            Ok(match report.verdict {
                ClaimStatus::Pass | ClaimStatus::NotApplicable => 0,
                ClaimStatus::Fail => EXIT_FAILED,
                ClaimStatus::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Probe {
            k,
            c,
            seed,
            budget,
            surface,
            out,
        } => {
            let g = LoadedGraph::from_gp(gpcross::gp::build_generalized_petersen(3 * k, k)?);
            let time = time_budget(budget)?;
            let sym = Symmetry::generated(&g.graph, &g.symmetry_generators())?;
            let probe = randomized_probe(&g.graph, c, surface.into(), &sym, seed, Some(time))?;
            let path = out.unwrap_or_else(|| PathBuf::from(format!("{}-c{c}.probe.json", file_stem(&g))));
            write_report(&path, &ProbeReportFile::new(&probe, &g, surface.into(), Some(time)))?;
            println!(
                "{} c={c} seed={seed}: {} after {} samples, {} orbits tested",
                g.label(),
                probe.status().as_str(),
                probe.samples,
                probe.tested
            );
            println!("wrote {}", path.display());
            Ok(if probe.witness.is_some() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Command::Render { drawing, out } => {
            let doc = load_drawing(&drawing)?;
            let d = doc.to_drawing()?;
            let svg = render_svg(&d, doc.graph.gp.as_ref());
            let path = out.unwrap_or_else(|| drawing.with_extension("svg"));
            std::fs::write(&path, svg)?;
            println!("{} crossing markers", d.crossing_count());
            println!("wrote {}", path.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = match cli
        .jobs
        .map(Ok)
        .or_else(|| env_number::<usize>("GPCROSS_JOBS").transpose())
    {
        Some(Ok(j)) => Some(j),
        Some(Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
        None => None,
    };
    if let Some(j) = jobs {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
