use std::path::Path;
use std::process::{Command, Output};

fn egstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_egstab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn formula_table() {
    let o = egstab(&[
        "formulas", "--table", "h_s", "--k", "9", "--a", "3", "--s", "2", "--n", "9..15",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,a,s,h"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 7);
    for r in rows {
        assert_eq!(r[4], 3 * r[0] - 3);
    }
}

#[test]
fn gen_writes_graph6_and_descriptor() {
    let o = egstab(&["gen", "--family", "h", "--n", "12", "--k", "9", "--a", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f2.g6");
    let o = egstab(&["gen", "--family", "F2", "--k", "12", "--r", "3", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 1);
    let desc = std::fs::read_to_string(dir.path().join("f2.g6.desc")).unwrap();
    assert!(desc.contains("special=F2") && desc.contains("label.y1="));
}

#[test]
fn verify_report_and_rerun() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("kl.json");
    let o = egstab(&["verify", "--suite", "kopylov_luo", "--n-max", "8", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["suite"], "kopylov_luo");
    assert_eq!(v["config"]["n_max"], 8);
    assert_eq!(v["counts"]["failures"], 0);

    let o = egstab(&["report", "--in", p(&out), "--rerun", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = egstab(&["verify", "--config", p(&out), "--jobs", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().contains("applied,passes,failures"));
}

#[test]
fn counterexamples_set_exit_one_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pp.json");
    let o = egstab(&[
        "verify",
        "--suite",
        "prop_paths",
        "--k",
        "10",
        "--r",
        "2",
        "--n-max",
        "6",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = egstab(&["report", "--in", p(&out), "--recheck"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(rows.as_array().unwrap().iter().all(|r| r["reproduces"] == true));
}

#[test]
fn solve_and_enumerate() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    let o = egstab(&["enumerate", "--n", "4", "--out", p(&input)]);
    assert_eq!(o.status.code(), Some(0));
    let o = egstab(&["solve", "--op", "circ", "--in", p(&input)]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 3);
    assert!(recs.iter().all(|r| r["result"] == 4 && r["micros"].is_u64()));

    let o = egstab(&["enumerate", "--n", "3..5", "--format", "json"]);
    let counts: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let got: Vec<u64> = counts
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["count"].as_u64().unwrap())
        .collect();
    assert_eq!(got, vec![1, 3, 10]);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(egstab(&["verify", "--suite", "fan", "--bogus"]).status.code(), Some(64));
    assert_eq!(egstab(&["verify", "--suite", "nope"]).status.code(), Some(64));
    assert_eq!(
        egstab(&["verify", "--suite", "fan", "--n-max", "12"]).status.code(),
        Some(64)
    );
    assert_eq!(
        egstab(&["formulas", "--table", "h_s", "--n", "9..5", "--k", "9"])
            .status
            .code(),
        Some(64)
    );
    let o = egstab(&[
        "gen",
        "--family",
        "h",
        "--n",
        "12",
        "--k",
        "9",
        "--a",
        "3",
        "--out",
        "/nonexistent/dir/x",
    ]);
    assert_eq!(o.status.code(), Some(74));
    assert_eq!(
        egstab(&["solve", "--op", "circ", "--in", "/nonexistent/in.g6"])
            .status
            .code(),
        Some(74)
    );
}
