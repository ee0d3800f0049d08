use std::path::Path;
use std::process::{Command, Output};

fn tanglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanglab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tight_face_has_a_twelve_edge_face() {
    let dir = tempfile::tempdir().unwrap();
    let gen = tanglab(&[
        "generate",
        "--kind",
        "tight-face",
        "--h",
        "2",
        "--v",
        "2",
        "--out",
        path(dir.path()),
    ]);
    assert!(gen.status.success());
    let inst = dir.path().join("instance.txt");
    let arr = tanglab(&["arrange", "--input", path(&inst), "--report", "faces"]);
    assert_eq!(arr.status.code(), Some(0));
    let text = stdout(&arr);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let headers = rows.headers().unwrap().clone();
    let col = headers.iter().position(|h| h == "distinct_edges").unwrap();
    assert!(rows.records().any(|r| &r.unwrap()[col] == "12"));
}

#[test]
fn exhaustive_ds_reports_five_for_three_symbols() {
    let o = tanglab(&["bounds", "--check", "ds", "--n", "3", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("3,5,5,"), "{row}");
}

#[test]
fn sweeps_are_byte_identical() {
    let args = [
        "sweep",
        "--check",
        "grounded-delaunay",
        "--n",
        "64..1024",
        "--trials",
        "20",
        "--seed",
        "7",
    ];
    let a = tanglab(&args);
    let b = tanglab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 5 * 20);
}

#[test]
fn sweep_files_match_stdout_and_json_parses() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "sweep", "--check", "cf", "--n", "16,32", "--trials", "3", "--seed", "2",
    ];
    let printed = tanglab(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path(dir.path())]);
    assert!(tanglab(&with_out).status.success());
    let written = std::fs::read(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(written, printed.stdout);
    let mut json = args.to_vec();
    json.extend(["--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&tanglab(&json).stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
    assert_eq!(rows[0]["status"], "pass");
}

#[test]
fn non_grounded_grid_is_a_precondition_failure() {
    let o = tanglab(&[
        "bounds", "--check", "grounded", "--kind", "grid", "--n", "136",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(",4624,1757,"), "{text}");
    assert!(text.contains("precondition-failed"));
}

#[test]
fn bad_input_exits_with_two_and_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "red;0,0 1,1\nblue;0,1 x,0\n").unwrap();
    let o = tanglab(&["arrange", "--input", path(&file)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(tanglab(&["generate"]).status.code(), Some(2));
    let guard = tanglab(&["bounds", "--check", "ds", "--n", "6", "--exhaustive"]);
    assert_eq!(guard.status.code(), Some(2));
    assert!(String::from_utf8(guard.stderr)
        .unwrap()
        .contains("ds_max_length"));
}

#[test]
fn color_cf_writes_its_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let o = tanglab(&[
        "color-cf",
        "--kind",
        "grounded-lshapes",
        "--n",
        "50",
        "--seed",
        "3",
        "--svg",
        "--out",
        path(dir.path()),
    ]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["coloring.csv", "levels.json", "coloring.svg"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let log: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("levels.json")).unwrap())
            .unwrap();
    assert_eq!(log["verified"], true);
    assert_eq!(log["colors"].as_array().unwrap().len(), 50);
}

#[test]
fn analyze_reads_hypergraph_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.txt");
    std::fs::write(&file, "1 2\n2 3\n1 3\n1 2 3\n").unwrap();
    let o = tanglab(&[
        "analyze",
        "--hyperedges",
        path(&file),
        "--exhaustive",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[0]["vertices"], 3);
    assert_eq!(rows[0]["c_pairs"], 3);
    assert_eq!(rows[0]["proper"], true);
    assert_eq!(rows[0]["cf"], true);
}
