//! Acceptance criteria 1 to 9, one line each.
//!
//! The planar value of P(12,4) (part of criterion 3, about 12 minutes on one
//! core) runs only with `GPCROSS_EXTENDED=1`.

mod common;

use std::time::{Duration, Instant};

use gpcross::drawing::Drawing;
use gpcross::embed::{brute_force_embed_oracle, embed_decide, EmbedLimits, EmbedOutcome, SurfaceBudget};
use gpcross::gp::{build_generalized_petersen, GpGraph};
use gpcross::io::{read_report, write_report, LoadedGraph, ProbeReportFile};
use gpcross::repro::{build_f13_candidate, lemma_properties, wilson_check, ClaimStatus};
use gpcross::solver::{randomized_probe, solve_crossing_number, SolveReport, SolveRequest, SolveStatus, Symmetry};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PROBE_SEED: u64 = 1;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

#[derive(Default)]
struct Solved {
    values: Vec<(String, Option<usize>, Option<usize>)>,
    witnesses: Vec<(GpGraph, Drawing)>,
}

fn solve(p: &GpGraph, budget: SurfaceBudget, time: Duration) -> SolveReport {
    let mut req = SolveRequest::new(p.graph().clone(), budget, 8);
    req.symmetry = p.symmetry_generators();
    req.time_budget = Some(time);
    solve_crossing_number(&req).expect("valid request")
}

fn exact_with_witness(r: &SolveReport, expected: usize) -> Result<(), String> {
    if r.status != SolveStatus::Exact || r.value() != Some(expected) {
        return Err(format!("got {}", r.summary()));
    }
    let w = r.witness.as_ref().ok_or("no witness")?;
    let check = w.verify();
    if !check.passed() || check.recounted_crossings != expected {
        return Err(format!("witness check failed: {check:?}"));
    }
    if r.levels
        .iter()
        .take(expected)
        .any(|l| l.refuted != l.canonical || l.exhausted > 0)
    {
        return Err("a lower level was not fully refuted".into());
    }
    Ok(())
}

fn record(solved: &mut Solved, label: &str, sphere: Option<usize>, projective: Option<usize>) {
    match solved.values.iter_mut().find(|v| v.0 == label) {
        Some(v) => {
            v.1 = v.1.or(sphere);
            v.2 = v.2.or(projective);
        }
        None => solved.values.push((label.to_string(), sphere, projective)),
    }
}

fn criterion1(solved: &mut Solved) -> Outcome {
    let p = build_generalized_petersen(9, 3).unwrap();
    let r = solve(&p, SurfaceBudget::PROJECTIVE_PLANE, Duration::from_secs(60));
    let fast = r.elapsed < Duration::from_secs(60);
    match exact_with_witness(&r, 1) {
        Ok(()) => {
            record(solved, "P(9,3)", None, r.value());
            solved.witnesses.push((p, r.witness.clone().unwrap()));
            outcome(fast, format!("P(9,3) projective {} in {:.2?}", r.summary(), r.elapsed))
        }
        Err(e) => outcome(false, e),
    }
}

fn criterion2(solved: &mut Solved) -> Outcome {
    let p = build_generalized_petersen(12, 4).unwrap();
    let r = solve(&p, SurfaceBudget::PROJECTIVE_PLANE, Duration::from_secs(1800));
    if let Err(e) = exact_with_witness(&r, 2) {
        return outcome(false, e);
    }
    let singles = &r.levels[1];
    record(solved, "P(12,4)", None, r.value());
    solved.witnesses.push((p, r.witness.clone().unwrap()));
    outcome(
        singles.enumerated == 558 && r.elapsed < Duration::from_secs(1800),
        format!(
            "P(12,4) projective {} in {:.2?}; {} single pairs in {} orbits refuted",
            r.summary(),
            r.elapsed,
            singles.enumerated,
            singles.refuted
        ),
    )
}

fn criterion3(solved: &mut Solved) -> Outcome {
    let p = build_generalized_petersen(9, 3).unwrap();
    let r = solve(&p, SurfaceBudget::SPHERE, Duration::from_secs(600));
    if let Err(e) = exact_with_witness(&r, 2) {
        return outcome(false, format!("P(9,3) sphere: {e}"));
    }
    record(solved, "P(9,3)", r.value(), None);
    let mut detail = format!("P(9,3) sphere {}", r.summary());
    if std::env::var_os("GPCROSS_EXTENDED").is_some() {
        let p = build_generalized_petersen(12, 4).unwrap();
        let r = solve(&p, SurfaceBudget::SPHERE, Duration::from_secs(12 * 3600));
        if let Err(e) = exact_with_witness(&r, 4) {
            return outcome(false, format!("P(12,4) sphere: {e}"));
        }
        record(solved, "P(12,4)", r.value(), None);
        detail.push_str(&format!("; P(12,4) sphere {} in {:.0?}", r.summary(), r.elapsed));
    } else {
        detail.push_str("; P(12,4) sphere not run (extended, set GPCROSS_EXTENDED=1)");
    }
    outcome(true, detail)
}

fn criterion4(solved: &mut Solved) -> Outcome {
    let p = build_generalized_petersen(15, 5).unwrap();
    let sym = Symmetry::generated(p.graph(), &p.symmetry_generators()).unwrap();
    let budget = Duration::from_secs(3600);
    let r = randomized_probe(
        p.graph(),
        3,
        SurfaceBudget::PROJECTIVE_PLANE,
        &sym,
        PROBE_SEED,
        Some(budget),
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("probe.json");
    let g = LoadedGraph::from_gp(p.clone());
    write_report(
        &path,
        &ProbeReportFile::new(&r, &g, SurfaceBudget::PROJECTIVE_PLANE, Some(budget)),
    )
    .unwrap();
    let seed_recorded = read_report(&path).unwrap()["seed"] == PROBE_SEED;
    match &r.witness {
        Some(w) => {
            let check = w.verify();
            let ok = check.passed() && check.recounted_crossings == 3 && seed_recorded && r.elapsed <= budget;
            solved.witnesses.push((p, w.clone()));
            outcome(
                ok,
                format!("P(15,5) witness with 3 crossings, seed {PROBE_SEED}, {:.1?}", r.elapsed),
            )
        }
        None => outcome(false, format!("no witness within {budget:?} (seed {PROBE_SEED})")),
    }
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let g = build_f13_candidate().unwrap();
    let limits = EmbedLimits::unlimited();
    let whole = embed_decide(&g, SurfaceBudget::PROJECTIVE_PLANE, &[], &limits).unwrap();
    let embedded = (0..g.edge_count())
        .filter(|&e| {
            let h = g.without_edges(&[e]);
            matches!(
                embed_decide(&h, SurfaceBudget::PROJECTIVE_PLANE, &[], &limits).unwrap(),
                EmbedOutcome::Embedded(_)
            )
        })
        .count();
    let sizes = (g.vertex_count(), g.edge_count());
    let elapsed = start.elapsed();
    outcome(
        sizes == (12, 18) && whole == EmbedOutcome::NoEmbedding && embedded == 18 && elapsed < Duration::from_secs(300),
        format!(
            "{sizes:?}, budget 1 refuted: {}, {embedded}/18 deletions embed, {elapsed:.2?}",
            whole == EmbedOutcome::NoEmbedding
        ),
    )
}

fn criterion6(solved: &Solved) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (label, sphere, projective) in &solved.values {
        if sphere.is_none() || projective.is_none() {
            continue;
        }
        let rec = wilson_check(label, *sphere, *projective);
        pass &= rec.status == ClaimStatus::Pass;
        parts.push(format!("{label}: {}", rec.computed));
    }
    if parts.is_empty() {
        return outcome(false, "no instance with both values");
    }
    outcome(pass, parts.join("; "))
}

fn criterion7() -> Outcome {
    let mut graphs = common::connected_graphs(6);
    let small = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        graphs.push(common::random_connected(8, i % 9, &mut rng));
    }
    let mut disagreements = 0;
    for g in &graphs {
        for b in [SurfaceBudget::SPHERE, SurfaceBudget::PROJECTIVE_PLANE] {
            let fast = embed_decide(g, b, &[], &EmbedLimits::unlimited()).unwrap();
            let slow = brute_force_embed_oracle(g, b).unwrap();
            if fast.scheme().is_some() != slow.is_some() {
                disagreements += 1;
            }
        }
    }
    outcome(
        disagreements == 0 && small == 143,
        format!("{small} graphs on <= 6 vertices and 100 random 8-vertex graphs, {disagreements} disagreements"),
    )
}

fn criterion8(solved: &Solved) -> Outcome {
    let t = lemma_properties(1000, 1, &solved.witnesses).unwrap();
    let mut detail = format!(
        "{} random configs, {} random schemes, {} E'-clean drawings ({} with a one-sided triangle possible), {} violations",
        t.random_configs,
        t.random_schemes,
        t.eprime_clean_drawings,
        t.one_sided_seen,
        t.counterexamples.len()
    );
    if t.exhausted > 0 {
        detail.push_str(&format!(", {} searches ran out of time", t.exhausted));
    }
    if let Some(c) = t.counterexamples.first() {
        detail.push_str(&format!(", first: {} on {}", c.property, c.graph));
    }
    outcome(
        t.counterexamples.is_empty() && t.exhausted == 0 && t.random_configs >= 1000 && t.random_schemes >= 1000,
        detail,
    )
}

fn criterion9() -> Outcome {
    let p = build_generalized_petersen(24, 8).unwrap();
    let sym = Symmetry::generated(p.graph(), &p.symmetry_generators()).unwrap();
    let budget = Duration::from_secs(60);
    let r = randomized_probe(
        p.graph(),
        6,
        SurfaceBudget::PROJECTIVE_PLANE,
        &sym,
        PROBE_SEED,
        Some(budget),
    )
    .unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("probe.json");
    let g = LoadedGraph::from_gp(p);
    write_report(
        &path,
        &ProbeReportFile::new(&r, &g, SurfaceBudget::PROJECTIVE_PLANE, Some(budget)),
    )
    .unwrap();
    let status = read_report(&path).unwrap()["status"]
        .as_str()
        .unwrap_or_default()
        .to_string();
    let honest = match &r.witness {
        Some(w) => status == "upper_bound_only" && w.verify().passed(),
        None => status == "inconclusive",
    };
    // The deadline is checked between batches of realizations.
    let in_time = r.elapsed <= budget + Duration::from_secs(5);
    outcome(
        honest && in_time,
        format!(
            "P(24,8) c=6: {status} after {} samples in {:.1?} (budget {budget:?})",
            r.samples, r.elapsed
        ),
    )
}

fn main() {
    let mut solved = Solved::default();
    let mut lines: Vec<(usize, Outcome)> = Vec::new();
    let mut run = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let o = f();
        println!("criterion {n}: {}  {}", if o.pass { "pass" } else { "FAIL" }, o.detail);
        lines.push((n, o));
    };
    run(1, &mut || criterion1(&mut solved));
    run(2, &mut || criterion2(&mut solved));
    run(3, &mut || criterion3(&mut solved));
    run(4, &mut || criterion4(&mut solved));
    run(5, &mut criterion5);
    run(6, &mut || criterion6(&solved));
    run(7, &mut criterion7);
    run(8, &mut || criterion8(&solved));
    run(9, &mut criterion9);
    let failed: Vec<usize> = lines.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
    } else {
        println!("acceptance: failed {failed:?}");
        std::process::exit(1);
    }
}
