//! Schematic SVG pictures of drawings.
//!
//! Generalized Petersen graphs put `u_i` on an outer circle and `v_i` on an
//! inner one; other graphs use a single circle. Each registered crossing gets
//! a marker, placed where the two straight edges meet when they do and
//! between their midpoints otherwise. The picture is not a faithful
//! embedding; it only shows which edges cross.

use std::fmt::Write;

use crate::drawing::Drawing;
use crate::gp::{edge_partition, GpGraph};

const SIZE: f64 = 480.0;
const CENTER: f64 = SIZE / 2.0;

fn layout(vertices: usize, gp: Option<&GpGraph>) -> Vec<(f64, f64)> {
    let at = |radius: f64, i: usize, count: usize| {
        let angle = std::f64::consts::TAU * i as f64 / count as f64 - std::f64::consts::FRAC_PI_2;
        (CENTER + radius * angle.cos(), CENTER + radius * angle.sin())
    };
    match gp {
        Some(gp) => (0..vertices)
            .map(|x| {
                if x < gp.n() {
                    at(200.0, x, gp.n())
                } else {
                    at(110.0, x - gp.n(), gp.n())
                }
            })
            .collect(),
        None => (0..vertices).map(|x| at(200.0, x, vertices)).collect(),
    }
}

fn intersection(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> Option<(f64, f64)> {
    let r = (b.0 - a.0, b.1 - a.1);
    let s = (d.0 - c.0, d.1 - c.1);
    let denom = r.0 * s.1 - r.1 * s.0;
    if denom.abs() < 1e-9 {
        return None;
    }
    let t = ((c.0 - a.0) * s.1 - (c.1 - a.1) * s.0) / denom;
    let u = ((c.0 - a.0) * r.1 - (c.1 - a.1) * r.0) / denom;
    ((0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)).then_some((a.0 + t * r.0, a.1 + t * r.1))
}

/// Renders the drawing. `gp` selects the two-circle layout and enables the
/// highlighting of one-sided inner triangles on E'-clean drawings of
/// `P(3k, k)`.
pub fn render_svg(d: &Drawing, gp: Option<&GpGraph>) -> String {
    let g = &d.base;
    let gp = gp.filter(|p| p.graph() == g);
    let pos = layout(g.vertex_count(), gp);
    let name = |v: usize| gp.map_or_else(|| (v + 1).to_string(), |p| p.name(v));

    let mut one_sided_edges = Vec::new();
    if let Some(p) = gp.filter(|p| p.is_triple_family()) {
        if let Ok(part) = edge_partition(p) {
            if let Ok(profile) = d.ec_contractibility_profile(&part) {
                for (i, &flag) in profile.iter().enumerate() {
                    if flag {
                        let t = part.triangle(i + 1).expect("index in range");
                        for j in 0..3 {
                            if let Some(e) = g.edge_index(t[j], t[(j + 1) % 3]) {
                                one_sided_edges.push(e);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        "<title>{} crossings, Euler genus budget {}</title>",
        d.crossing_count(),
        d.budget.max_euler_genus
    );
    out.push_str(
        "<style>line{stroke:#444;stroke-width:1.5}line.one-sided{stroke:#c0392b;stroke-width:3}\
         circle.vertex{fill:#fff;stroke:#222}circle.crossing{fill:#e67e22;stroke:none}\
         text{font:10px sans-serif;text-anchor:middle}</style>\n",
    );
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let class = if one_sided_edges.contains(&e) {
            r#" class="one-sided""#
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r#"<line{class} x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            pos[a].0, pos[a].1, pos[b].0, pos[b].1
        );
    }
    for &(e, f) in d.config.crossings() {
        let (a, b) = g.edge(e);
        let (c, dd) = g.edge(f);
        let p = intersection(pos[a], pos[b], pos[c], pos[dd]).unwrap_or_else(|| {
            let m1 = ((pos[a].0 + pos[b].0) / 2.0, (pos[a].1 + pos[b].1) / 2.0);
            let m2 = ((pos[c].0 + pos[dd].0) / 2.0, (pos[c].1 + pos[dd].1) / 2.0);
            ((m1.0 + m2.0) / 2.0, (m1.1 + m2.1) / 2.0)
        });
        let _ = writeln!(
            out,
            r#"<circle class="crossing" cx="{:.2}" cy="{:.2}" r="5"/>"#,
            p.0, p.1
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let _ = writeln!(out, r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="9"/>"#);
        let _ = writeln!(out, r#"<text x="{x:.2}" y="{:.2}">{}</text>"#, y + 3.5, name(v));
    }
    out.push_str("</svg>\n");
    out
}
