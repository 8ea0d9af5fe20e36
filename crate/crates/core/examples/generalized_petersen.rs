//! Builds P(n, k), prints its edge partition and symmetry group.
//!
//! `cargo run --example generalized_petersen -- 12 4`

use gpcross::canon::PermGroup;
use gpcross::gp::{build_generalized_petersen, edge_partition};

fn main() -> gpcross::error::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (9, 3),
    };
    let p = build_generalized_petersen(n, k)?;
    let g = p.graph();
    println!("P({n},{k}): {} vertices, {} edges", g.vertex_count(), g.edge_count());
    let group = PermGroup::generate(g.vertex_count(), &p.symmetry_generators());
    println!("symmetry group of order {}", group.order());

    if !p.is_triple_family() {
        return Ok(());
    }
    let part = edge_partition(&p)?;
    let names = |es: &[usize]| es.iter().map(|&e| p.edge_name(e)).collect::<Vec<_>>().join(" ");
    for i in 1..=part.k() {
        println!("H{i}  = {}", names(part.h(i)?));
        println!("E{i}  = {}", names(part.e(i)?));
    }
    println!("E'  has {} edges", part.e_prime().len());
    Ok(())
}
