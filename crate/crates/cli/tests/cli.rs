//! End-to-end tests driving the `pwalk` binary through temp directories.

use std::fs;
use std::path::Path;
use std::process::Command;

use permissible_walks::fixtures::{forum_posts_csv, meetings};
use permissible_walks::json::{graph_from_json, hypergraph_from_json, hypergraph_to_json};
use permissible_walks::{Hypergraph, WalkGraph};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pwalk(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pwalk"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("binary not killed by signal"),
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    }
}

fn pwalk_ok(dir: &Path, args: &[&str]) -> Run {
    let run = pwalk(dir, args);
    assert_eq!(
        run.code, 0,
        "pwalk {args:?} failed\nstdout: {}\nstderr: {}",
        run.stdout, run.stderr
    );
    run
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

fn write_toy(dir: &Path) {
    fs::write(dir.join("toy.json"), hypergraph_to_json(&meetings())).unwrap();
}

fn named_arcs(p: &WalkGraph) -> Vec<(String, String)> {
    p.arcs()
        .iter()
        .map(|(a, b)| {
            (
                p.node(*a).unwrap().name.clone(),
                p.node(*b).unwrap().name.clone(),
            )
        })
        .collect()
}

#[test]
fn build_ingests_post_table() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("posts.csv"), forum_posts_csv()).unwrap();

    let run = pwalk_ok(dir.path(), &["build", "posts.csv", "--format", "posts-csv"]);
    assert!(
        run.stdout.contains("3 vertices, 3 edges, 6 incidences"),
        "summary was: {}",
        run.stdout
    );

    let h: Hypergraph = hypergraph_from_json(&read(dir.path(), "posts.hypergraph.json")).unwrap();
    assert_eq!(h.edge_count(), 3);
    let thread1 = h.edge_id("thread1").unwrap();
    let members: Vec<&str> = h
        .members(thread1)
        .iter()
        .map(|v| h.vertex_name(*v))
        .collect();
    assert_eq!(members, ["user1", "user2", "userN"]);
}

#[test]
fn build_rejects_empty_posts() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("empty.csv"),
        "user_id,thread_id,class,timestamp\n",
    )
    .unwrap();

    let run = pwalk(dir.path(), &["build", "empty.csv", "--format", "posts-csv"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("no posts"), "stderr: {}", run.stderr);
}

#[test]
fn build_requires_explicit_format_for_csv() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("posts.csv"), forum_posts_csv()).unwrap();

    let run = pwalk(dir.path(), &["build", "posts.csv"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("--format"), "stderr: {}", run.stderr);
}

#[test]
fn build_reduces_arc_list_to_two_uniform_hypergraph() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("arcs.csv"),
        "source,target,timestamp\na,b,1\nb,c,2\na,c,5\n",
    )
    .unwrap();

    pwalk_ok(dir.path(), &["build", "arcs.csv", "--format", "arcs-csv"]);
    let h: Hypergraph = hypergraph_from_json(&read(dir.path(), "arcs.hypergraph.json")).unwrap();
    assert_eq!(h.edge_count(), 3);
    for e in h.edge_ids() {
        assert_eq!(h.members(e).len(), 2);
        assert!(h.edge_attrs(e).contains_key("direction"));
        assert!(h.edge_attrs(e).contains_key("time"));
    }
}

#[test]
fn build_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("posts.csv"), forum_posts_csv()).unwrap();

    pwalk_ok(dir.path(), &["build", "posts.csv", "--format", "posts-csv"]);
    // Format inference: a .json input needs no --format.
    pwalk_ok(
        dir.path(),
        &["build", "posts.hypergraph.json", "--out", "again.json"],
    );

    let first: Hypergraph =
        hypergraph_from_json(&read(dir.path(), "posts.hypergraph.json")).unwrap();
    let second: Hypergraph = hypergraph_from_json(&read(dir.path(), "again.json")).unwrap();
    assert_eq!(first, second);
}

#[test]
fn permissible_builds_conjunction_graph_with_roll_up() {
    let dir = tempfile::tempdir().unwrap();
    write_toy(dir.path());

    let run = pwalk_ok(
        dir.path(),
        &[
            "permissible",
            "toy.json",
            "--predicate",
            "time:strong-order",
            "--predicate",
            "topics:set-intersects:t=1",
        ],
    );
    // Topics live on the incidences of the input; the CLI rolls them up.
    assert!(run.stdout.contains("rolled up"), "stdout: {}", run.stdout);
    assert!(
        run.stdout.contains("4 nodes, 2 arcs"),
        "stdout: {}",
        run.stdout
    );

    let p: WalkGraph = graph_from_json(&read(dir.path(), "toy.permissible.json")).unwrap();
    assert_eq!(
        named_arcs(&p),
        [
            ("M1".to_string(), "M3".to_string()),
            ("M3".to_string(), "M4".to_string())
        ]
    );

    let dot = read(dir.path(), "toy.permissible.dot");
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"M1\" -> \"M3\""));
}

#[test]
fn permissible_flag_behaviors() {
    let dir = tempfile::tempdir().unwrap();
    write_toy(dir.path());

    // --min-edge-size keeps only the two three-member meetings.
    let run = pwalk_ok(
        dir.path(),
        &[
            "permissible",
            "toy.json",
            "--min-edge-size",
            "3",
            "--attr",
            "time",
            "--out",
            "big",
        ],
    );
    assert!(run.stdout.contains("2 nodes"), "stdout: {}", run.stdout);

    // --drop-isolated removes M2, which no conjunction arc touches.
    let run = pwalk_ok(
        dir.path(),
        &[
            "permissible",
            "toy.json",
            "--predicate",
            "time:strong-order",
            "--predicate",
            "topics:set-intersects:t=1",
            "--drop-isolated",
            "--out",
            "trimmed",
        ],
    );
    assert!(
        run.stdout.contains("removed 1 isolated"),
        "stdout: {}",
        run.stdout
    );
    let p: WalkGraph = graph_from_json(&read(dir.path(), "trimmed.json")).unwrap();
    assert_eq!(p.node_count(), 3);
    assert!(p.node_by_name("M2").is_none());

    // s = 0 is legal but loud.
    let run = pwalk_ok(
        dir.path(),
        &[
            "permissible",
            "toy.json",
            "--s",
            "0",
            "--attr",
            "time",
            "--out",
            "full",
        ],
    );
    assert!(run.stderr.contains("complete"), "stderr: {}", run.stderr);
    let p: WalkGraph = graph_from_json(&read(dir.path(), "full.json")).unwrap();
    assert_eq!(p.arc_count(), 12);
}

/// Builds the toy conjunction graph and returns its JSON path.
fn toy_walk_graph(dir: &Path) -> String {
    write_toy(dir);
    pwalk_ok(
        dir,
        &[
            "permissible",
            "toy.json",
            "--predicate",
            "time:strong-order",
            "--predicate",
            "topics:set-intersects:t=1",
        ],
    );
    "toy.permissible.json".to_string()
}

#[test]
fn analyze_components_and_downstream() {
    let dir = tempfile::tempdir().unwrap();
    let graph = toy_walk_graph(dir.path());

    pwalk_ok(dir.path(), &["analyze", &graph, "components"]);
    let components: serde_json::Value =
        serde_json::from_str(&read(dir.path(), "toy.permissible.components.json")).unwrap();
    assert_eq!(components[0]["size"], 3);
    assert_eq!(components[1]["members"], serde_json::json!(["M2"]));

    pwalk_ok(
        dir.path(),
        &["analyze", &graph, "downstream", "--node", "M1"],
    );
    let report: serde_json::Value =
        serde_json::from_str(&read(dir.path(), "toy.permissible.downstream.json")).unwrap();
    assert_eq!(report["neighbors"], serde_json::json!(["M3"]));
    assert_eq!(report["reachable"], serde_json::json!(["M3", "M4"]));
}

#[test]
fn analyze_trace_counts_active_meetings() {
    let dir = tempfile::tempdir().unwrap();
    write_toy(dir.path());
    // Constant-true predicate: the graph keeps all four nodes, each
    // carrying its time interval.
    pwalk_ok(
        dir.path(),
        &["permissible", "toy.json", "--attr", "time", "--out", "all"],
    );

    pwalk_ok(
        dir.path(),
        &["analyze", "all.json", "trace", "--samples", "5"],
    );
    assert_eq!(
        read(dir.path(), "all.trace.csv"),
        "t,T\n0,1\n1.25,0\n2.5,2\n3.75,0\n5,1\n"
    );
}

#[test]
fn analyze_interaction_and_sweep_on_synthetic_migration() {
    let dir = tempfile::tempdir().unwrap();
    pwalk_ok(
        dir.path(),
        &[
            "synth",
            "--users",
            "50",
            "--seed",
            "3",
            "--out",
            "posts.csv",
        ],
    );
    pwalk_ok(dir.path(), &["build", "posts.csv", "--format", "posts-csv"]);
    pwalk_ok(
        dir.path(),
        &[
            "permissible",
            "posts.hypergraph.json",
            "--predicate",
            "time:strong-order",
            "--class-attr",
            "class",
            "--out",
            "walks",
        ],
    );

    pwalk_ok(dir.path(), &["analyze", "walks.json", "interaction"]);
    let csv = read(dir.path(), "walks.interaction.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "A,B");
    let a_row: Vec<u64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
    let b_row: Vec<u64> = lines[2].split(',').map(|v| v.parse().unwrap()).collect();
    assert!(a_row[1] > 0, "expected A->B arcs, matrix:\n{csv}");
    assert_eq!(b_row[0], 0, "B->A must be empty, matrix:\n{csv}");

    pwalk_ok(
        dir.path(),
        &["analyze", "walks.json", "interaction", "--s-sweep", "1..2"],
    );
    for name in [
        "walks.s1.interaction.csv",
        "walks.s1.components.json",
        "walks.s2.interaction.csv",
        "walks.s2.components.json",
    ] {
        assert!(dir.path().join(name).exists(), "missing {name}");
    }
    // Thresholding at the build s changes nothing.
    assert_eq!(read(dir.path(), "walks.s1.interaction.csv"), csv);
}

#[test]
fn synth_is_reproducible_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["synth", "--users", "30", "--seed", "11", "--out"];
    pwalk_ok(dir.path(), &[&args[..], &["a.csv"]].concat());
    pwalk_ok(dir.path(), &[&args[..], &["b.csv"]].concat());
    pwalk_ok(
        dir.path(),
        &["synth", "--users", "30", "--seed", "12", "--out", "c.csv"],
    );

    assert_eq!(read(dir.path(), "a.csv"), read(dir.path(), "b.csv"));
    assert_ne!(read(dir.path(), "a.csv"), read(dir.path(), "c.csv"));
}

#[test]
fn configuration_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let graph = toy_walk_graph(dir.path());

    let run = pwalk(
        dir.path(),
        &["permissible", "toy.json", "--predicate", "time:bogus"],
    );
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("bogus"), "stderr: {}", run.stderr);

    let run = pwalk(
        dir.path(),
        &["analyze", &graph, "interaction", "--s-sweep", "nope"],
    );
    assert_eq!(run.code, 2);

    let run = pwalk(
        dir.path(),
        &["analyze", &graph, "trace", "--s-sweep", "1..2"],
    );
    assert_eq!(run.code, 2);

    let run = pwalk(dir.path(), &["synth", "--users", "1"]);
    assert_eq!(run.code, 2);
}
