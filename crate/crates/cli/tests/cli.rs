use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gallery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallery"))
        .args(args)
        .env_remove("GALLERY_MAX_VERTICES")
        .env_remove("GALLERY_MAX_CHAMBERS")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = gallery(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const A3: &str = r#"{"rank": 3, "m": [[1,3,2],[3,1,3],[2,3,1]]}"#;

#[test]
fn coxeter_paths_between_two_generators() {
    let dir = TempDir::new().unwrap();
    let a3 = write(&dir, "a3.json", A3);
    let doc = ok_json(&["paths", "--coxeter", s(&a3), "--from", "s1", "--to", "s2"]);
    assert_eq!(doc["certificate"]["accepted"], true);
    let paths = doc["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 3);
    let lengths: BTreeSet<usize> = paths.iter().map(|p| p.as_array().unwrap().len() - 1).collect();
    assert_eq!(lengths, BTreeSet::from([2, 4, 6]));
    assert_eq!(doc["names"][0][0], "s1");
}

#[test]
fn exact_connectivity_of_the_smallest_thick_building() {
    let doc = ok_json(&["connectivity", "--building", "3,2", "--mode", "exact"]);
    assert_eq!(doc["kappa"], 4);
    assert_eq!(doc["separating_set"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_rejects_overlapping_family() {
    let dir = TempDir::new().unwrap();
    let graph = ok_json(&["build", "--building", "3,2"]);
    let g = write(&dir, "g.json", &graph.to_string());
    let good = ok_json(&["paths", "--graph", s(&g), "--from", "0", "--to", "5"]);
    let good_path = write(&dir, "good.json", &good.to_string());
    let accepted = ok_json(&["verify", "--graph", s(&g), "--family", s(&good_path)]);
    assert_eq!(accepted["accepted"], true);

    // duplicate a path with interior vertices
    let mut bad = good.clone();
    let paths = bad["paths"].as_array_mut().unwrap();
    let long = paths.iter().find(|p| p.as_array().unwrap().len() > 2).unwrap().clone();
    paths.push(long);
    let bad_path = write(&dir, "bad.json", &bad.to_string());
    let out = gallery(&["verify", "--graph", s(&g), "--family", s(&bad_path)]);
    assert_eq!(out.status.code(), Some(4));
    let report: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(report["error"], "verification");
    assert!(report["detail"]["violation"].as_str().unwrap().contains("share interior vertex"));
}

#[test]
fn same_seed_same_bytes() {
    for obj in [["--building", "3,3"], ["--lattice", "partition:5"]] {
        let run = |seed: &str| gallery(&["paths", obj[0], obj[1], "--seed", seed]).stdout;
        assert_eq!(run("42"), run("42"));
        let doc: Value = serde_json::from_slice(&run("42")).unwrap();
        assert_eq!(doc["seed"], 42);
        assert_eq!(doc["certificate"]["accepted"], true);
    }
    let export = |seed: &str| gallery(&["export", "--lattice", "subspace:3,2", "--seed", seed]).stdout;
    assert_eq!(export("7"), export("7"));
    assert!(String::from_utf8(export("7")).unwrap().starts_with("// seed 7\n"));
}

/// Vertices and labelled edges of the DOT this tool writes.
fn parse_dot(text: &str) -> (usize, BTreeSet<(usize, usize, Option<u32>)>) {
    let mut vertices = 0;
    let mut edges = BTreeSet::new();
    for line in text.lines().map(str::trim) {
        let Some(stmt) = line.strip_suffix(';') else { continue };
        if stmt.starts_with("graph ") {
            continue;
        }
        let (head, attrs) = match stmt.split_once(" [") {
            Some((h, a)) => (h, Some(a.trim_end_matches(']'))),
            None => (stmt, None),
        };
        if let Some((a, b)) = head.split_once(" -- ") {
            let label = attrs.map(|a| a.trim_start_matches("label=\"").trim_end_matches('"').parse().unwrap());
            edges.insert((a.parse().unwrap(), b.parse().unwrap(), label));
        } else {
            head.parse::<usize>().unwrap();
            vertices += 1;
        }
    }
    (vertices, edges)
}

#[test]
fn dot_and_json_exports_agree() {
    for obj in [["--building", "3,2"], ["--lattice", "boolean:4"], ["--lattice", "subspace:3,2"]] {
        let dot = String::from_utf8(gallery(&["export", obj[0], obj[1]]).stdout).unwrap();
        let json = ok_json(&["export", obj[0], obj[1], "--format", "json"]);
        let (n, edges) = parse_dot(&dot);
        assert_eq!(n, json["vertices"].as_array().unwrap().len());
        let from_json: BTreeSet<(usize, usize, Option<u32>)> = json["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                let e = e.as_array().unwrap();
                let num = |i: usize| e[i].as_u64().unwrap();
                (num(0) as usize, num(1) as usize, e.get(2).map(|l| l.as_u64().unwrap() as u32))
            })
            .collect();
        assert_eq!(edges, from_json);
    }
}

#[test]
fn graph_json_round_trip() {
    let dir = TempDir::new().unwrap();
    let a3 = write(&dir, "a3.json", A3);
    let first = gallery(&["build", "--coxeter", s(&a3)]).stdout;
    let g = write(&dir, "g.json", std::str::from_utf8(&first).unwrap());
    let second = gallery(&["build", "--graph", s(&g)]).stdout;
    assert_eq!(first, second);
}

#[test]
fn lattice_and_complex_documents() {
    let dir = TempDir::new().unwrap();
    let object = gallery(&["export", "--lattice", "partition:4", "--format", "object"]).stdout;
    let file = write(&dir, "p4.json", std::str::from_utf8(&object).unwrap());
    let from_file = format!("file:{}", s(&file));
    let direct = gallery(&["build", "--lattice", "partition:4"]).stdout;
    assert_eq!(gallery(&["build", "--lattice", &from_file]).stdout, direct);

    let fano = write(&dir, "fano.json", r#"{"p": 2, "matrix": [[1,0,0,1,1,0,1],[0,1,0,1,0,1,1],[0,0,1,0,1,1,1]]}"#);
    let params = ok_json(&["params", "--lattice", &format!("flats:{}", s(&fano))]);
    assert_eq!(params["q"], 2);
    assert_eq!(params["local_width_from_rank_two"], true);

    let pentagon = write(&dir, "n5.json", r#"{"elements": 5, "rank": [0,1,2,1,3], "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]]}"#);
    let out = gallery(&["build", "--lattice", &format!("file:{}", s(&pentagon))]);
    assert_eq!(out.status.code(), Some(2));

    let octahedron = write(
        &dir,
        "oct.json",
        r#"{"dimension": 2, "chambers": [[0,2,4],[0,2,5],[0,3,4],[0,3,5],[1,2,4],[1,2,5],[1,3,4],[1,3,5]]}"#,
    );
    let doc = ok_json(&["connectivity", "--complex", s(&octahedron), "--mode", "exact"]);
    assert_eq!(doc["kappa"], 3);
}

#[test]
fn building_chambers_by_flag_matrices() {
    let a = "[[[1,0,0]],[[1,0,0],[0,1,0]]]";
    let b = "[[[0,0,1]],[[0,1,0],[0,0,1]]]";
    let out = gallery(&["paths", "--building", "3,2", "--from", a, "--to", b]);
    // opposite flags are at distance three
    assert_eq!(out.status.code(), Some(1));
    let c = "[[[0,1,0]],[[1,0,0],[0,1,0]]]";
    let d = "[[[0,1,0]],[[0,1,0],[0,0,1]]]";
    let doc = ok_json(&["paths", "--building", "3,2", "--from", a, "--to", d]);
    assert_eq!(doc["paths"].as_array().unwrap().len(), 4);
    let out = gallery(&["paths", "--building", "3,2", "--from", a, "--to", c]);
    assert_eq!(out.status.code(), Some(1), "adjacent chambers are rejected");
}

#[test]
fn liu_is_independent_of_jobs() {
    let one = gallery(&["connectivity", "--building", "4,2", "--jobs", "1"]).stdout;
    let four = gallery(&["connectivity", "--building", "4,2", "--jobs", "4"]).stdout;
    assert_eq!(one, four);
    let doc: Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["kappa"], 6);
}

#[test]
fn truncated_balls_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let infinite = write(&dir, "inf.json", r#"{"rank": 2, "m": [[1,0],[0,1]]}"#);
    let out = gallery(&["build", "--coxeter", s(&infinite)]);
    assert_eq!(out.status.code(), Some(1));

    let args = ["connectivity", "--coxeter", s(&infinite), "--radius", "5", "--k", "2"];
    assert_eq!(gallery(&args).status.code(), Some(1), "truncated ball needs --allow-incomplete");
    let mut with = args.to_vec();
    with.push("--allow-incomplete");
    let doc = ok_json(&with);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["bound"], "lower-bound");

    let capped = Command::new(env!("CARGO_BIN_EXE_gallery"))
        .args(["build", "--building", "3,3"])
        .env("GALLERY_MAX_CHAMBERS", "20")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&capped.stderr).unwrap();
    assert_eq!(report["error"], "cap");

    let broken = write(&dir, "broken.json", "{\"rank\": 2");
    assert_eq!(gallery(&["build", "--coxeter", s(&broken)]).status.code(), Some(2));
    assert_eq!(gallery(&["build"]).status.code(), Some(2));
    assert_eq!(gallery(&["build", "--building", "3,4"]).status.code(), Some(2));
}
