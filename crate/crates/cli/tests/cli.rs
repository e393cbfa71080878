use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn twcol(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twcol"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_files_round_trip_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = twcol(d, &["gen", "cograph", "--n", "14", "--seed", "9", "--out", "a.gr"]);
    assert!(out.status.success());
    let out = twcol(d, &["gen", "cograph", "--n", "14", "--seed", "9", "--out", "b.gr"]);
    assert!(out.status.success());
    let a = fs::read(d.join("a.gr")).unwrap();
    let b = fs::read(d.join("b.gr")).unwrap();
    assert_eq!(a, b, "same seed, same bytes");

    // reload and rewrite reproduces the file exactly
    let text = fs::read_to_string(d.join("a.gr")).unwrap();
    let loaded = twcol::graph::parse_graph(&text).unwrap();
    assert_eq!(twcol::graph::write_graph(&loaded.graph), text);
}

#[test]
fn p4_pipeline_verifies_clean() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("p4.gr"), "p tww 4 3\n1 2\n2 3\n3 4\n").unwrap();

    let out = twcol(d, &["tww", "--graph", "p4.gr", "--witness-out", "p4.tww"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("tww 1"));

    let out = twcol(d, &["order", "--graph", "p4.gr", "--witness", "p4.tww", "--out", "p4.ord", "--r", "1..3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // the order file is a permutation of 1..=4, reloadable
    let text = fs::read_to_string(d.join("p4.ord")).unwrap();
    let ord = twcol::order::parse_order(4, &text).unwrap();
    assert_eq!(twcol::order::write_order(&ord), text);

    let out = twcol(d, &["verify", "--graph", "p4.gr", "--witness", "p4.tww", "--r", "1..3", "--out", "p4.json"]);
    assert!(out.status.success(), "verify should exit 0 on P_4");
    let report = fs::read_to_string(d.join("p4.json")).unwrap();
    assert!(report.contains("\"instance\": \"p4\""));
    assert!(!report.contains("\"violated\""));
}

#[test]
fn order_matches_the_worked_path_example() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("p3.gr"), "p tww 3 2\n1 2\n2 3\n").unwrap();
    // contract the endpoints, then the middle
    fs::write(d.join("p3.tww"), "1 3\n1 2\n").unwrap();
    let out = twcol(d, &["order", "--graph", "p3.gr", "--witness", "p3.tww", "--out", "p3.ord", "--r", "1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(d.join("p3.ord")).unwrap(), "2\n1\n3\n");
}

#[test]
fn corrupted_witness_fails() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("k3.gr"), "p tww 3 3\n1 2\n1 3\n2 3\n").unwrap();
    fs::write(d.join("bad.tww"), "1 2\n2 3\n").unwrap(); // 2 is merged away
    let out = twcol(d, &["verify", "--graph", "k3.gr", "--witness", "bad.tww", "--r", "1"]);
    assert!(!out.status.success());
}

#[test]
fn order_without_witness_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("p4.gr"), "p tww 4 3\n1 2\n2 3\n3 4\n").unwrap();
    let out = twcol(d, &["order", "--graph", "p4.gr", "--out", "x.ord"]);
    assert!(!out.status.success());
}

#[test]
fn cograph_flag_orders_without_witness() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // star: join of the center with three isolated vertices
    fs::write(d.join("star.gr"), "p tww 4 3\n1 2\n1 3\n1 4\n").unwrap();
    let out = twcol(d, &["order", "--graph", "star.gr", "--cograph", "--out", "star.ord", "--r", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(d.join("star.ord")).unwrap();
    assert_eq!(text.lines().next(), Some("1"), "center first");
}

#[test]
fn gen_summaries_match_construction_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = twcol(d, &["gen", "subdivided-clique", "--n", "6", "--k", "3", "--out", "s.gr"]);
    assert!(stdout(&out).contains("n 51 m 60"));
    let out = twcol(d, &["gen", "theta-lift", "--base", "k4", "--out", "t.gr", "--girth"]);
    assert!(stdout(&out).contains("n 256"));
    let out = twcol(d, &["gen", "complete", "--n", "5", "--out", "k5.gr"]);
    assert!(stdout(&out).contains("n 5 m 10"));
    // guard refusal is an error, not a truncated file
    let out = twcol(d, &["gen", "theta-lift", "--base", "petersen", "--guard", "1000", "--out", "x.gr"]);
    assert!(!out.status.success());
    assert!(!d.join("x.gr").exists());
}

#[test]
fn tower_witness_verifies_within_twice_degree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = twcol(
        d,
        &["gen", "two-lift-tower", "--base", "k4", "--levels", "4", "--seed", "11", "--out", "tw.gr", "--witness-out", "tw.tww"],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("witness width"));
    let g = twcol::graph::parse_graph(&fs::read_to_string(d.join("tw.gr")).unwrap()).unwrap().graph;
    let seq = twcol::trigraph::parse_witness(&g, &fs::read_to_string(d.join("tw.tww")).unwrap()).unwrap();
    assert!(seq.width().unwrap() <= 6);
}

#[test]
fn exact_params_table() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("p5.gr"), "p tww 5 4\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    let out = twcol(d, &["params", "--graph", "p5.gr", "--exact", "--r", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2,3,2,1"), "wcol_2 = 3, scol_2 = 2, adm_2 = 1:\n{}", stdout(&out));
}

#[test]
fn profile_files_use_the_fixed_columns() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("p5.gr"), "p tww 5 4\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    fs::write(d.join("id.ord"), "1\n2\n3\n4\n5\n").unwrap();
    let out = twcol(
        d,
        &["params", "--graph", "p5.gr", "--order", "id.ord", "--r", "1..2", "--format", "csv", "--out", "prof.csv"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    // several radii: one file per radius
    let r2 = fs::read_to_string(d.join("prof.r2.csv")).unwrap();
    assert!(r2.starts_with("vertex,rank,wreach,sreach,backconn\n"));
    assert!(d.join("prof.r1.csv").exists());
}

#[test]
fn sweep_exits_clean() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = twcol(d, &["verify", "--all-connected", "--max-n", "5", "--r", "1..3", "--format", "csv", "--out", "sweep.csv"]);
    assert!(out.status.success());
    let csv = fs::read_to_string(d.join("sweep.csv")).unwrap();
    assert!(!csv.contains(",violated,"));
    // K_3 (and K_5) exercise the documented width-0 fallback
    assert!(csv.contains("holds_fallback"));
}

#[test]
fn girth_and_bomega_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c7.gr"), "p tww 7 7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 1\n").unwrap();
    let out = twcol(d, &["girth", "--graph", "c7.gr"]);
    assert!(stdout(&out).contains("girth 7"));
    fs::write(d.join("p5.gr"), "p tww 5 4\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    let out = twcol(d, &["girth", "--graph", "p5.gr"]);
    assert!(stdout(&out).contains("girth inf"));
    let out = twcol(d, &["bomega", "--graph", "c7.gr"]);
    assert!(stdout(&out).contains("bomega 1"));
}

#[test]
fn budget_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c8.gr"), "p tww 8 8\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_twcol"))
        .current_dir(d)
        .env("TWW_BUDGET", "3")
        .args(["tww", "--graph", "c8.gr"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
