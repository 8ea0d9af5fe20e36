//! Solves P(9,3) in the projective plane, round-trips the graph and witness
//! through their JSON files, re-verifies the witness and renders it as SVG.
//!
//! `cargo run --example files_and_render -- out_dir`

use std::path::PathBuf;

use gpcross::embed::SurfaceBudget;
use gpcross::gp::build_generalized_petersen;
use gpcross::io::{read_drawing, read_graph, verify_drawing, write_drawing, write_graph, LoadedGraph};
use gpcross::solver::{solve_crossing_number, SolveRequest};
use gpcross::svg::render_svg;

fn main() -> gpcross::error::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/gpcross-demo".into()));
    std::fs::create_dir_all(&dir)?;

    let g = LoadedGraph::from_gp(build_generalized_petersen(9, 3)?);
    write_graph(dir.join("p9_3.graph.json"), &g)?;
    let g = read_graph(dir.join("p9_3.graph.json"))?;

    let mut req = SolveRequest::new(g.graph.clone(), SurfaceBudget::PROJECTIVE_PLANE, 4);
    req.symmetry = g.symmetry_generators();
    let report = solve_crossing_number(&req)?;
    let witness = report.witness.expect("P(9,3) has a one-crossing projective drawing");
    write_drawing(dir.join("p9_3.drawing.json"), &witness, &g)?;

    let doc = read_drawing(dir.join("p9_3.drawing.json"))?;
    for line in verify_drawing(&doc).checks {
        println!("{:<16} {:?} {}", line.name, line.outcome, line.detail);
    }
    let svg = render_svg(&doc.to_drawing()?, doc.graph.gp.as_ref());
    std::fs::write(dir.join("p9_3.svg"), svg)?;
    println!("wrote {}", dir.display());
    Ok(())
}
