//! Realizes a hand-picked crossing configuration of P(9,3) in the projective
//! plane and inspects the resulting drawing.

use gpcross::drawing::{realize_drawing, CrossingConfig, Realization};
use gpcross::embed::{EmbedLimits, SurfaceBudget};
use gpcross::gp::{build_generalized_petersen, edge_partition};

fn main() -> gpcross::error::Result<()> {
    let p = build_generalized_petersen(9, 3)?;
    let part = edge_partition(&p)?;
    let rim = |i: i64| p.edge(p.u(i), p.u(i + 1));
    let config = CrossingConfig::new([(rim(1), rim(3))]);

    for budget in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
        let d = match realize_drawing(p.graph(), &config, budget, &EmbedLimits::unlimited())? {
            Realization::Drawn(d) => d,
            other => {
                println!("{}: {:?}", budget.name(), other);
                continue;
            }
        };
        let check = d.verify();
        println!(
            "{}: {} crossing(s), Euler genus {:?}, verified {}",
            budget.name(),
            d.crossing_count(),
            check.euler_genus,
            check.passed()
        );
        println!("  E'-clean {}", d.is_eprime_clean(&part));
        for i in 1..=part.k() {
            println!("  f(H{i}) = {}", d.f_value(&part, i)?);
        }
        println!("  charges sum to crossing count: {}", d.check_lemma2(&part)?);
        println!(
            "  one-sided inner triangles: {:?}",
            d.ec_contractibility_profile(&part)?
        );
    }
    Ok(())
}
