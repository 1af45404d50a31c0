use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use twisted_cli::format::{FlipPathJson, GraphJson};
use twisted_core::TwistedGraph;

fn twisted(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twisted")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

const MINUS_14: &str = r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[2,4],[3,4]]}"#;
const MINUS_23: &str = r#"{"n":4,"edges":[[1,2],[1,3],[1,4],[2,4],[3,4]]}"#;

fn path_json(args: &[&str]) -> FlipPathJson {
    let out = twisted(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn enumerate_counts() {
    for (kind, n, expected) in [("max-plane", "4", "2"), ("matchings", "4", "2"), ("max-plane", "3", "1")] {
        let out = twisted(&["enumerate", "--kind", kind, "--n", n, "--format", "count"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
}

#[test]
fn enumerate_json_and_dot() {
    let out = twisted(&["enumerate", "--kind", "max-plane", "--n", "4"]);
    assert_eq!(stdout(&out).trim(), format!("[{MINUS_23},{MINUS_14}]"));
    let out = twisted(&["enumerate", "--kind", "matchings", "--n", "4", "--format", "dot"]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("graph matching_").count(), 2);
    assert!(dot.contains("v1 -- v3;"));
}

#[test]
fn limit_guard_and_override() {
    let out = twisted(&["enumerate", "--kind", "max-plane", "--n", "10", "--format", "count"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "LimitExceeded");

    let out = twisted(&["enumerate", "--kind", "max-plane", "--n", "10", "--format", "count", "--allow-large"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1430");

    let out = twisted(&["enumerate", "--kind", "matchings", "--n", "5", "--format", "count"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "OddVertexCount");
}

#[test]
fn theorem2_path_between_t4_subgraphs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (write(dir.path(), "a.json", MINUS_23), write(dir.path(), "b.json", MINUS_14));
    let fixed = write(dir.path(), "f.json", r#"{"n":4,"edges":[[1,2],[1,3],[2,4],[3,4]]}"#);
    let json = path_json(&[
        "path", "--mode", "theorem2",
        "--from", a.to_str().unwrap(), "--to", b.to_str().unwrap(), "--fixed", fixed.to_str().unwrap(),
    ]);
    assert_eq!(json.moves.len(), 1);
    assert_eq!((json.moves[0].remove, json.moves[0].add), ([1, 4], [2, 3]));
    assert!(json.constructive);
    // The serialization alone is enough to revalidate the path.
    let path = json.to_path().unwrap();
    assert_eq!(FlipPathJson::from(&path), json);

    // Without --fixed the intersection is used.
    let implicit = path_json(&["path", "--mode", "theorem2", "--from", a.to_str().unwrap(), "--to", b.to_str().unwrap()]);
    assert_eq!(implicit, json);
}

#[test]
fn theorem3_and_bfs_paths() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (write(dir.path(), "a.json", MINUS_14), write(dir.path(), "b.json", MINUS_23));
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let tg = TwistedGraph::new(4).unwrap();
    for mode in ["theorem3", "bfs"] {
        let json = path_json(&["path", "--mode", mode, "--from", a, "--to", b]);
        let path = json.to_path().unwrap();
        assert!(path.nodes.iter().all(|g| tg.has_perfect_matching(g)));
        assert_eq!(path.constructive, mode == "theorem3");
    }
    for mode in ["theorem2", "theorem3", "bfs"] {
        let json = path_json(&["path", "--mode", mode, "--from", a, "--to", a]);
        assert!(json.moves.is_empty());
        assert_eq!(json.nodes.len(), 1);
    }
}

#[test]
fn path_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", MINUS_14);
    let cases = [
        (r#"{"n":4,"edges":[[1,4],[2,3]]}"#, "NotPlane"),
        (r#"{"n":4,"edges":[[1,2]]}"#, "NotMaximal"),
        (r#"{"n":4,"edges":[[3,3]]}"#, "Loop"),
        (r#"{"n":4,"edges":[[1,7]]}"#, "VertexOutOfRange"),
        (r#"{"n":4,"edges":"#, "MalformedJson"),
    ];
    for (json, code) in cases {
        let bad = write(dir.path(), "bad.json", json);
        let out = twisted(&["path", "--mode", "bfs", "--from", good.to_str().unwrap(), "--to", bad.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{json}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["code"], code);
    }
    let fixed = write(dir.path(), "fixed.json", r#"{"n":4,"edges":[[2,3]]}"#);
    let other = write(dir.path(), "other.json", MINUS_23);
    let out = twisted(&[
        "path", "--mode", "theorem2", "--from", good.to_str().unwrap(), "--to", other.to_str().unwrap(),
        "--fixed", fixed.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "FixedSetViolation");

    let missing = dir.path().join("missing.json");
    let out = twisted(&["path", "--mode", "bfs", "--from", missing.to_str().unwrap(), "--to", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theorem3_rejects_subgraph_without_matching() {
    let dir = tempfile::tempdir().unwrap();
    let fan = write(
        dir.path(),
        "fan.json",
        r#"{"n":6,"edges":[[1,2],[1,3],[1,4],[1,5],[1,6],[2,6],[3,6],[4,6],[5,6]]}"#,
    );
    let out = twisted(&["path", "--mode", "theorem3", "--from", fan.to_str().unwrap(), "--to", fan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "NoPerfectMatching");
}

#[test]
fn verify_examples() {
    for (suite, n_max) in [("theorem2", "6"), ("fig3", "6"), ("crossing", "9")] {
        let out = twisted(&["verify", "--suite", suite, "--n-max", n_max]);
        assert!(out.status.success(), "{suite}");
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["passed"], true);
        assert_eq!(report["suite"], suite);
        if suite == "fig3" {
            assert!(report["checks"][0]["counts"]["witnesses"].as_u64().unwrap() >= 1);
        }
    }
    let out = twisted(&["verify", "--suite", "theorem2", "--n-max", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_graphs() {
    let out = twisted(&["export", "--graph", "flip", "--n", "5"]);
    let g: GraphJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g.nodes.len(), 5);
    assert_eq!(g.constraint, Some(vec![]));
    assert!(g.links.iter().all(|l| l.2.is_some()));

    let dir = tempfile::tempdir().unwrap();
    let fixed = write(dir.path(), "f.json", r#"{"n":4,"edges":[[1,4]]}"#);
    let out = twisted(&["export", "--graph", "flip", "--n", "4", "--fixed", fixed.to_str().unwrap()]);
    let g: GraphJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((g.nodes.len(), g.links.len()), (1, 0));

    let out = twisted(&["export", "--graph", "matching", "--n", "6"]);
    let g: GraphJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g.constraint, None);
    assert_eq!(g.nodes.len(), 5);
    assert!(g.links.iter().all(|l| l.2.is_none()));

    let out = twisted(&["export", "--graph", "flip", "--n", "4", "--format", "dot"]);
    assert!(stdout(&out).starts_with("graph flip_graph {"));
}
