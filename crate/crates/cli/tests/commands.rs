use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hivenet_cli::format::{write_json, MultipathFile, NetworkFile, TableauFile, WeightingFile};
use tempfile::TempDir;

fn hivenet(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hivenet")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(dir: &Path, args: &[&str]) -> i32 {
    let out = hivenet(dir, args);
    out.status.code().expect("exit code")
}

fn stdout(dir: &Path, args: &[&str]) -> String {
    let out = hivenet(dir, args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(dir: &Path, args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = hivenet(dir, &all);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).expect("report is JSON"))
}

fn write_tableau(dir: &Path, name: &str, rows: &[&[&str]]) -> PathBuf {
    let file = TableauFile {
        n: rows.len() - 1,
        rows: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
    };
    let path = dir.join(name);
    write_json(&path, &file).unwrap();
    path
}

#[test]
fn gamma0_pipeline_yields_a_c2_member() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(d, &["gen", "gamma0", "--n", "4", "-o", "g.json"]), 0);
    assert_eq!(code(d, &["weights", "random", "--net", "g.json", "--seed", "7", "-o", "w.json"]), 0);
    let (c, report) = json(d, &["eval", "tableau", "--net", "g.json", "--weights", "w.json"]);
    assert_eq!(c, 0);
    assert_eq!(report["verdict"], "member");
    assert_eq!(report["witnesses"]["tableau"]["n"], 4);
}

#[test]
fn horn_flags_decide_membership() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0", "--mu", "1,0", "--nu", "3,-1"]), 1);
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0", "--mu", "1,0", "--nu", "2,0"]), 0);
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,1"]), 0);
    // trace defect and unsorted input are outside the cone
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0", "--mu", "1,0", "--nu", "3,0"]), 1);
    assert_eq!(code(d, &["check", "horn", "--lambda", "0,1", "--mu", "1,0", "--nu", "1,1"]), 1);
    // malformed or mismatched input
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,x", "--mu", "1,0", "--nu", "1,1"]), 2);
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0", "--mu", "1", "--nu", "1,0"]), 2);
    assert_eq!(code(d, &["check", "horn", "--lambda", "1,0"]), 2);
}

#[test]
fn horn_triple_file_is_accepted() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    std::fs::write(d.join("t.json"), r#"{"lambda": "1,0", "mu": "1,0", "nu": "3,-1"}"#).unwrap();
    assert_eq!(code(d, &["check", "horn", "--triple", "t.json"]), 1);
}

#[test]
fn cone_checks_on_member_and_non_member_fixtures() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    // l-tableau of the introduction network: a member of C2
    let good = write_tableau(d, "good.json", &[&["0"], &["0", "1"], &["0", "2", "3"]]);
    // first rhombus at (1,1): t^2_1 + t^1_0 >= t^2_0 + t^1_1 fails
    let bad = write_tableau(d, "bad.json", &[&["0"], &["0", "1"], &["0", "-5", "3"]]);
    let g = good.to_str().unwrap();
    let b = bad.to_str().unwrap();
    let matrix: &[(&[&str], i32)] = &[
        (&["check", "c2", "--tableau", g], 0),
        (&["check", "c2", "--tableau", b], 1),
        (&["check", "c2", "--tableau", b, "--slack", "10"], 0),
        (&["check", "c3", "--tableau", b], 1),
        (&["check", "gz", "--tableau", g], 0),
        (&["check", "gz", "--tableau", b], 1),
        (&["invert", "gz", "--tableau", b], 1),
        (&["check", "c2", "--tableau", "missing.json"], 2),
        (&["check", "c2", "--tableau", g, "--slack", "abc"], 2),
        (&["check", "nonsense"], 2),
        (&["--help"], 0),
    ];
    for (args, expected) in matrix {
        assert_eq!(code(d, args), *expected, "{args:?}");
    }
    let (_, report) = json(d, &["check", "c2", "--tableau", b]);
    assert!(!report["violations"].as_array().unwrap().is_empty());
}

#[test]
fn infinite_entries_in_gz_check_are_a_data_error() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let t = write_tableau(d, "t.json", &[&["0"], &["0", "-inf"]]);
    assert_eq!(code(d, &["check", "gz", "--tableau", t.to_str().unwrap()]), 2);
    assert_eq!(code(d, &["check", "c2", "--tableau", t.to_str().unwrap()]), 0);
}

#[test]
fn inversions_reproduce_their_tableaux() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(d, &["gen", "horn", "--n", "3", "-o", "h.json"]), 0);
    assert_eq!(code(d, &["--seed", "3", "weights", "random", "--net", "h.json", "--den", "4", "-o", "w.json"]), 0);
    assert_eq!(code(d, &["eval", "hive", "--net", "h.json", "--weights", "w.json", "-o", "t.json"]), 0);
    let (c, report) = json(d, &["invert", "horn", "--tableau", "t.json", "-o", "w2.json", "--net-out", "h2.json"]);
    assert_eq!(c, 0);
    assert_eq!(report["witnesses"]["round_trip"], true);
    assert_eq!(code(d, &["eval", "hive", "--net", "h2.json", "--weights", "w2.json", "-o", "t2.json"]), 0);
    let t1: TableauFile = serde_json::from_str(&std::fs::read_to_string(d.join("t.json")).unwrap()).unwrap();
    let t2: TableauFile = serde_json::from_str(&std::fs::read_to_string(d.join("t2.json")).unwrap()).unwrap();
    assert_eq!(t1, t2);

    assert_eq!(code(d, &["gen", "gamma0", "--n", "3", "-o", "g.json"]), 0);
    assert_eq!(code(d, &["weights", "random", "--net", "g.json", "-o", "gw.json"]), 0);
    assert_eq!(code(d, &["eval", "tableau", "--net", "g.json", "--weights", "gw.json", "-o", "gt.json"]), 0);
    assert_eq!(code(d, &["invert", "gz", "--tableau", "gt.json", "-o", "gw2.json"]), 0);
}

#[test]
fn eval_l_on_the_introduction_network() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let net = hivenet::fixtures::intro_net();
    write_json(&d.join("n.json"), &NetworkFile::from_network(&net)).unwrap();
    write_json(&d.join("w.json"), &WeightingFile::from_weighting(&hivenet::fixtures::intro_weights(&net))).unwrap();
    let (c, report) = json(d, &["eval", "l", "--net", "n.json", "--weights", "w.json", "--brute"]);
    assert_eq!(c, 0);
    assert_eq!(report["witnesses"]["l"][1], "4");
    let red: Vec<u64> = hivenet::fixtures::intro_red_path().into_iter().map(u64::from).collect();
    assert_eq!(report["witnesses"]["maximizers"][0]["paths"][0], serde_json::json!(red));
    assert_eq!(code(d, &["eval", "l", "--net", "n.json", "--weights", "w.json", "--brute", "--cap", "1"]), 2);
    assert_eq!(code(d, &["eval", "hive", "--net", "n.json", "--weights", "w.json"]), 2);
}

#[test]
fn recombination_commands_conserve_weight() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let net = hivenet::fixtures::intro_net();
    write_json(&d.join("n.json"), &NetworkFile::from_network(&net)).unwrap();
    write_json(&d.join("w.json"), &WeightingFile::from_weighting(&hivenet::fixtures::intro_weights(&net))).unwrap();
    write_json(&d.join("f.json"), &MultipathFile { paths: vec![vec![7, 8]] }).unwrap();
    write_json(&d.join("g.json"), &MultipathFile { paths: vec![vec![0, 1], vec![3, 4, 5]] }).unwrap();
    let args = ["recombine", "shift", "--net", "n.json", "--k", "3", "--f", "f.json", "--g", "g.json"];
    let (c, report) = json(d, &[&args[..], &["--weights", "w.json"]].concat());
    assert_eq!(c, 0);
    assert_eq!(report["witnesses"]["even"]["paths"], serde_json::json!([[3, 4, 5]]));
    assert_eq!(report["witnesses"]["odd"]["paths"], serde_json::json!([[0, 1], [7, 8]]));
    let bad = ["recombine", "balance", "--net", "n.json", "--k", "3", "--f", "f.json", "--g", "g.json"];
    assert_eq!(code(d, &bad), 2);
}

#[test]
fn decompose_reports_classes_and_splits() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let gd = hivenet::network::horn_network(2).unwrap();
    let paths = hivenet::multipath::enumerate_gd_paths(&gd, 1, 1, 1000).unwrap();
    let p = &paths[0];
    write_json(&d.join("gd.json"), &NetworkFile::from_network(&gd)).unwrap();
    write_json(&d.join("a.json"), &hivenet_cli::format::GdPathFile::from_gd_path(p)).unwrap();
    std::fs::write(d.join("empty.json"), r#"{"gamma": [], "delta": []}"#).unwrap();
    let (c, report) = json(
        d,
        &["decompose", "--net", "gd.json", "--alpha", "a.json", "--beta", "empty.json", "--split", "1,1", "--colorings"],
    );
    assert_eq!(c, 0, "{report}");
    assert_eq!(report["witnesses"]["type"], serde_json::json!([1, 1]));
    assert_eq!(report["witnesses"]["alternating_colorings"], "2");
    assert_eq!(report["witnesses"]["colorings"].as_array().unwrap().len(), 2);
    assert_eq!(report["witnesses"]["green"], serde_json::json!({"gamma": [], "delta": []}));
    let doubled = ["decompose", "--net", "gd.json", "--alpha", "a.json", "--beta", "a.json", "--split", "1,1"];
    assert_eq!(code(d, &doubled), 2);
}

#[test]
fn spectra_commands() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let (c, report) = json(d, &["spectra", "sample", "--n", "3", "--seed", "5", "--check"]);
    assert_eq!(c, 0);
    assert_eq!(report["verdict"], "feasible");
    let (_, again) = json(d, &["spectra", "sample", "--n", "3", "--seed", "5", "--check"]);
    assert_eq!(report, again);
    std::fs::write(d.join("m.json"), r#"{"n": 2, "entries": [[2.0, 0.0], [0.0, 1.0]]}"#).unwrap();
    let (c, report) = json(d, &["spectra", "tableau", "--matrix", "m.json"]);
    assert_eq!(c, 0);
    assert_eq!(report["witnesses"]["tableau"]["rows"], serde_json::json!([[0.0], [0.0, 2.0], [0.0, 2.0, 3.0]]));
    std::fs::write(d.join("asym.json"), r#"{"n": 2, "entries": [[2.0, 1.0], [0.0, 1.0]]}"#).unwrap();
    assert_eq!(code(d, &["spectra", "tableau", "--matrix", "asym.json"]), 2);
    assert_eq!(code(d, &["spectra", "sample", "--n", "9"]), 2);
}

#[test]
fn generated_documents_go_to_stdout_without_out_flag() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let text = stdout(d, &["gen", "delta0", "--n", "3"]);
    let file: NetworkFile = serde_json::from_str(&text).unwrap();
    assert_eq!(file.to_network().unwrap().rank(), Some(3));
    assert_eq!(text, stdout(d, &["gen", "delta0", "--n", "3"]));
    let a = stdout(d, &["--seed", "9", "gen", "random", "--rank", "3"]);
    assert_eq!(a, stdout(d, &["--seed", "9", "gen", "random", "--rank", "3"]));
    std::fs::write(d.join("r.json"), &a).unwrap();
    std::fs::write(d.join("l.json"), stdout(d, &["gen", "gamma0", "--n", "3"])).unwrap();
    std::fs::write(d.join("rr.json"), stdout(d, &["gen", "delta0", "--n", "3"])).unwrap();
    let gd: NetworkFile =
        serde_json::from_str(&stdout(d, &["gen", "concat", "--left", "l.json", "--right", "rr.json"])).unwrap();
    assert!(gd.middle.is_some());
}
