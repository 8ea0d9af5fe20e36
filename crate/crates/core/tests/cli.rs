use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gpcross(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpcross"))
        .args(args)
        .current_dir(dir)
        .env_remove("GPCROSS_JOBS")
        .env_remove("GPCROSS_TIME_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_json(path: &Path, v: &Value) {
    std::fs::write(path, serde_json::to_string_pretty(v).unwrap()).unwrap();
}

#[test]
fn gen_then_solve_then_verify_then_render() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = gpcross(d, &["gen", "gp:9,3", "--out", "g.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P(9,3): 18 vertices, 27 edges, 3-regular"));
    assert_eq!(read_json(&d.join("g.json"))["format"], "graph/1");

    let o = gpcross(
        d,
        &[
            "solve",
            "g.json",
            "--surface",
            "projective",
            "--out",
            "r.json",
            "--witness",
            "w.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P(9,3) projective: exact 1"));
    let report = read_json(&d.join("r.json"));
    assert_eq!(report["format"], "report/1");
    assert_eq!(report["status"], "exact");

    for file in ["w.json", "r.json"] {
        let o = gpcross(d, &["verify", file]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("verdict: valid"));
    }

    let a = gpcross(d, &["render", "w.json", "--out", "a.svg"]);
    let b = gpcross(d, &["render", "w.json", "--out", "b.svg"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let svg = std::fs::read(d.join("a.svg")).unwrap();
    assert_eq!(svg, std::fs::read(d.join("b.svg")).unwrap());
    assert_eq!(
        String::from_utf8(svg).unwrap().matches(r#"class="crossing""#).count(),
        1
    );
}

#[test]
fn lower_bound_only_when_max_c_is_too_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = gpcross(dir.path(), &["solve", "gp:9,3", "--max-c", "0", "--out", "r.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lower_bound_only >= 1"));
}

#[test]
fn corrupted_drawings_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = gpcross(
        d,
        &[
            "solve",
            "gp:9,3",
            "--surface",
            "sphere",
            "--out",
            "r.json",
            "--witness",
            "w.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let good = read_json(&d.join("w.json"));

    let mut flipped = good.clone();
    let sig = &mut flipped["scheme"]["signatures"][0];
    *sig = Value::from(-sig.as_i64().unwrap());
    write_json(&d.join("flipped.json"), &flipped);
    let o = gpcross(d, &["verify", "flipped.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("euler_genus") && l.contains("FAIL")));

    let mut adjacent = good.clone();
    adjacent["crossings"] = serde_json::json!([[1, 2]]);
    adjacent["edge_order"] = serde_json::json!({});
    write_json(&d.join("adjacent.json"), &adjacent);
    let o = gpcross(d, &["verify", "adjacent.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("good_drawing") && l.contains("FAIL")));

    let mut future = good;
    future["format"] = Value::from("drawing/2");
    write_json(&d.join("future.json"), &future);
    assert_eq!(gpcross(d, &["verify", "future.json"]).status.code(), Some(2));
}

#[test]
fn invalid_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(gpcross(d, &["gen", "gp:8,4"]).status.code(), Some(2));
    assert_eq!(
        gpcross(d, &["solve", "gp:9,3", "--no-such-flag"]).status.code(),
        Some(2)
    );
    assert_eq!(gpcross(d, &["solve", "missing.json"]).status.code(), Some(2));
    assert_eq!(
        gpcross(d, &["solve", "gp:9,3", "--budget", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(gpcross(d, &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn probe_finds_small_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = gpcross(
        dir.path(),
        &[
            "probe", "--k", "3", "--c", "1", "--seed", "2", "--budget", "60", "--out", "p.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("upper_bound_only"));
    let report = read_json(&dir.path().join("p.json"));
    assert_eq!(report["seed"], 2);
    assert_eq!(report["status"], "upper_bound_only");
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = gpcross(
        dir.path(),
        &["solve", "gp:15,5", "--max-c", "3", "--budget", "0.5", "--out", "r.json"],
    );
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}
