use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpetersen"))
        .args(args)
        .env_remove("GPETERSEN_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn oddgirth_examples() {
    let o = run(&["oddgirth", "--n", "11", "--k", "3", "--method", "all"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "7 7 7 match"));
    assert_eq!(stdout(&run(&["oddgirth", "--n", "6", "--k", "3"])).trim(), "bipartite");
    assert_eq!(stdout(&run(&["oddgirth", "--n", "6", "--k", "2"])).trim(), "3");
    for method in ["formula", "ip", "bfs"] {
        assert_eq!(stdout(&run(&["oddgirth", "--n", "25", "--k", "3", "--method", method])).trim(), "11");
    }
    let v = json(&["oddgirth", "--n", "11", "--k", "3"]);
    assert_eq!(v["odd_girth"], 7);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["oddgirth", "--n", "5", "--k", "3"][..],
        &["oddgirth", "--n", "7", "--k", "1"],
        &["oddgirth", "--n", "seven", "--k", "2"],
        &["bounds", "--n", "6", "--k", "3"],
        &["hom", "pb-circ", "--n", "9", "--k", "4"],
        &["hom", "pet-cnk", "--n", "7", "--k", "3"],
        &["search", "--n", "7", "--k", "3", "--target", "c4x"],
        &["nonsense"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote to stdout");
    }
    assert!(stderr(&run(&["hom", "pb-circ", "--n", "9", "--k", "4"])).contains("mod k−1"));
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn scan_tsv_and_edge_cases() {
    let o = run(&["--format", "tsv", "scan", "--n-max", "7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tk\tformula\tip\tbfs\tmatch");
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"6\t3\tbipartite\tbipartite\tbipartite\tyes"));
    assert!(lines[1..].iter().all(|l| l.ends_with("\tyes")));
    let o = run(&["--format", "tsv", "scan", "--n-max", "4"]);
    assert_eq!((code(&o), stdout(&o).lines().count()), (0, 1));
    let rows = json(&["scan", "--n-max", "30"]);
    assert!(rows["rows"].as_array().unwrap().iter().all(|r| r["match"] == true));
}

#[test]
fn bounds_report() {
    let o = run(&["bounds", "--n", "11", "--k", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("2+8/21"));
    assert!(out.contains("C5-colorable: no"));
    let out = stdout(&run(&["bounds", "--n", "25", "--k", "3"]));
    assert!(out.contains("C5-colorable: yes"));

    let v = json(&["bounds", "--n", "5", "--k", "2"]);
    assert_eq!(v["best_upper"], serde_json::json!({"num": 3, "den": 1}));
    let compk_b = v["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "compk_b").unwrap();
    assert_eq!(compk_b["value"], serde_json::json!({"num": 30, "den": 11}));
    assert_eq!(compk_b["kind"], "lower");
    let report: gpetersen::bounds::BoundReport = serde_json::from_value(v).unwrap();
    assert!(report.is_consistent());
}

#[test]
fn hom_witnesses_reverify() {
    use gpetersen::graph::make_circular_complete;
    use gpetersen::hom::Witness;
    use gpetersen::petersen::{build_pb, build_petersen};
    use gpetersen::GPParams;

    let p = GPParams::new(7, 2).unwrap();
    let w: Witness = serde_json::from_value(json(&["hom", "pet-pb", "--n", "7", "--k", "2"])).unwrap();
    assert!(w.verified);
    assert!(w.against(&build_petersen(p), &build_pb(p)).unwrap().is_verified());

    let p = GPParams::new(15, 3).unwrap();
    let w: Witness = serde_json::from_value(json(&["hom", "c5", "--n", "15", "--k", "3"])).unwrap();
    assert!(w.against(&build_petersen(p), &make_circular_complete(5, 2).unwrap()).unwrap().is_verified());

    let v = json(&["hom", "clique", "--n", "11", "--k", "3"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["solution"]["u"], 2);
    assert_eq!(v["solution"]["v"], 3);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);

    let v = json(&["hom", "interleave", "--n", "9", "--k", "2"]);
    assert_eq!((v["verified"].clone(), v["q"].clone()), (Value::Bool(true), Value::from(6)));

    let v = json(&["hom", "pb-circ", "--n", "13", "--k", "6"]);
    assert_eq!(v["threshold"], serde_json::json!({"num": 18, "den": 5}));
}

#[test]
fn search_exit_codes() {
    let o = run(&["search", "--n", "7", "--k", "3", "--target", "c5"]);
    assert_eq!((code(&o), stdout(&o).lines().next()), (3, Some("none")));
    let o = run(&["search", "--n", "15", "--k", "3", "--target", "c5"]);
    assert_eq!((code(&o), stdout(&o).lines().next()), (0, Some("found")));
    let o = run(&["search", "--n", "11", "--k", "3", "--target", "c7", "--budget", "1"]);
    assert_eq!((code(&o), stdout(&o).lines().next()), (4, Some("budget")));
    let o = run(&["search", "--n", "9", "--k", "3", "--target", "cycle:5"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("OddGirth"));
    assert_eq!(code(&run(&["search", "--n", "5", "--k", "2", "--target", "circ:3/1"])), 0);
}

#[test]
fn export_writes_edge_lists() {
    use gpetersen::graph::read_edge_list;
    use gpetersen::petersen::build_petersen;
    use gpetersen::GPParams;

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pet.txt");
    let o = run(&["export", "pet", "--n", "12", "--k", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let g = read_edge_list(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).unwrap();
    assert!(g.same_edges(&build_petersen(GPParams::new(12, 5).unwrap())));

    let out = stdout(&run(&["export", "power:3", "--n", "5", "--k", "2"]));
    assert_eq!(out.lines().next(), Some("p 10 45"));

    let bad = dir.path().join("missing").join("x.txt");
    assert_eq!(code(&run(&["export", "pb", "--n", "9", "--k", "2", "-o", bad.to_str().unwrap()])), 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "bounds", "--n", "21", "--k", "5"][..],
        &["hom", "clique", "--n", "21", "--k", "5"],
        &["search", "--n", "17", "--k", "3", "--target", "c5"],
        &["--format", "tsv", "scan", "--n-max", "25"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gpetersen"))
        .args(["oddgirth", "--n", "11", "--k", "3"])
        .env("GPETERSEN_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["odd_girth"], 7);
}
