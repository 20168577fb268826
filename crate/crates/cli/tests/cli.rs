use std::io::Write;
use std::process::{Command, Output, Stdio};

fn genpos(args: &[&str], stdin: &str) -> Output {
    genpos_env(args, stdin, &[])
}

fn genpos_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_genpos"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn family_pipes_into_compute() {
    let family = genpos(&["family", "Mk", "4", "--graph6"], "");
    assert!(family.status.success());
    let computed = genpos(&["compute", "--kind", "dual", "--format", "json"], &stdout(&family));
    assert!(computed.status.success());
    let rows = json_lines(&computed);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["size"], 6);
    assert_eq!(rows[0]["kind"], "dual");
    assert_eq!(rows[0]["millis"], 0);
}

#[test]
fn single_vertex_total() {
    let o = genpos(&["compute", "--kind", "total", "--format", "json"], "@\n");
    assert_eq!(stdout(&o), "{\"graph\":\"@\",\"kind\":\"total\",\"size\":1,\"witness\":[0],\"method\":\"simplicial\",\"millis\":0}\n");
}

#[test]
fn star_centre_removal_is_unavailable() {
    let star = stdout(&genpos(&["family", "K1n", "3", "--graph6"], ""));
    let o = genpos(&["remove", "--vertex", "0", "--format", "json"], &star);
    assert!(o.status.success());
    let report = &json_lines(&o)[0];
    assert!(report["after"].is_null());
    assert_eq!(report["premises"]["non_cut"], false);
}

#[test]
fn edge_removal_from_a_family_spec() {
    let o = genpos(&["remove", "--family", "Zn:2", "--edge", "0,4", "--format", "json"], "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = &json_lines(&o)[0];
    assert_eq!(report["after"]["outer"], 4);
    assert_eq!(report["element"]["edge"], serde_json::json!([0, 4]));
    let missing = genpos(&["remove", "--family", "Zn:2", "--edge", "0,1"], "");
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn all_kinds_and_human_output() {
    let o = genpos(&["compute", "--family", "Gn:2"], "");
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("general") && text.contains("dual"));
    let dot = genpos(&["compute", "--family", "Fn:4", "--kind", "outer", "--format", "dot"], "");
    assert!(stdout(&dot).starts_with("graph "));
}

#[test]
fn json_output_is_reproducible() {
    let args = ["compute", "--family", "Yk:3", "--format", "json"];
    assert_eq!(genpos(&args, "").stdout, genpos(&args, "").stdout);
    let remove = ["remove", "--family", "Tk:3", "--vertex", "0", "--format", "json"];
    assert_eq!(genpos(&remove, "").stdout, genpos(&remove, "").stdout);
}

#[test]
fn check_set_reports_a_witness() {
    let o = genpos(&["check-set", "--family", "Fn:5", "--set", "0,1,3", "--kind", "general", "--format", "json"], "");
    let v = &json_lines(&o)[0];
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"], serde_json::json!({"u": 1, "v": 3, "w": 0}));
    let ok = genpos(&["check-set", "--graph", "Cs", "--set", "1,2,3", "--kind", "total", "--format", "json"], "");
    assert_eq!(json_lines(&ok)[0]["holds"], true);
}

#[test]
fn usage_errors_exit_with_two() {
    let bad_g6 = genpos(&["compute"], "D?\n");
    assert_eq!(bad_g6.status.code(), Some(2));
    let err = String::from_utf8(bad_g6.stderr).unwrap();
    assert!(err.contains("line 1") && err.contains("byte 2"), "{err}");

    assert_eq!(genpos(&["compute", "--kind", "outerish"], "@\n").status.code(), Some(2));
    assert_eq!(genpos(&["compute", "--graph", "@", "--family", "Mk:4"], "").status.code(), Some(2));
    assert_eq!(genpos(&["remove", "--graph", "Cs"], "").status.code(), Some(2));
    assert_eq!(genpos(&["compute", "--format", "graph6", "--graph", "@"], "").status.code(), Some(2));
    assert_eq!(genpos(&["compute", "--graph", "C?"], "").status.code(), Some(2), "disconnected input");
    assert_eq!(genpos(&["family", "Mk", "3"], "").status.code(), Some(2));
    assert_eq!(genpos(&["compute"], "").status.code(), Some(2), "empty stdin");
    let threads = genpos_env(&["compute", "--graph", "@"], "", &[("GENPOS_THREADS", "zero")]);
    assert_eq!(threads.status.code(), Some(2));
}

#[test]
fn edge_list_json_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.json");
    std::fs::write(&path, r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#).unwrap();
    let o = genpos(&["compute", "--input", path.to_str().unwrap(), "--kind", "outer", "--format", "json"], "");
    assert_eq!(json_lines(&o)[0]["size"], 2);
    let g6 = dir.path().join("two.g6");
    std::fs::write(&g6, "@\n\nA_\n").unwrap();
    let o = genpos(&["compute", "--input", g6.to_str().unwrap(), "--kind", "general", "--format", "json"], "");
    assert_eq!(json_lines(&o).len(), 2);
}

#[test]
fn family_outputs() {
    let json = genpos(&["family", "Gnk", "5", "2", "--json"], "");
    let v = &json_lines(&json)[0];
    assert_eq!(v["family"], "Gnk");
    assert_eq!(v["n"], 6);
    assert_eq!(v["vertex"], 0);
    assert!(v["expected"].as_array().unwrap().iter().any(|e| e["kind"] == "outer" && e["value"] == 4));
    let dot = stdout(&genpos(&["family", "Mk", "4", "--dot"], ""));
    assert!(dot.contains("0 [style=filled"));
    let human = stdout(&genpos(&["family", "Hn", "2"], ""));
    assert!(human.contains("edge    0,1"));
}

#[test]
fn family_verification_reports_mismatches_as_violations() {
    let o = genpos(&["family", "--verify", "--format", "json"], "");
    let rows = json_lines(&o);
    assert!(rows.len() > 100);
    let failing: Vec<&serde_json::Value> = rows.iter().filter(|r| r["pass"] == false).collect();
    // the only disagreements are the quoted fan formula at n = 4, 6, 7
    assert!(failing.iter().all(|r| r["family"].as_str().unwrap().starts_with("Fn(")));
    let code = if failing.is_empty() { 0 } else { 1 };
    assert_eq!(o.status.code(), Some(code));
}

#[test]
fn sweep_writes_reports_and_violation_files() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.json");
    std::fs::write(&manifest, r#"{"mode":"random","n":7,"p":0.4,"count":20,"seed":5}"#).unwrap();
    let out = dir.path().join("out");
    let o = genpos(&["sweep", "--manifest", manifest.to_str().unwrap(), "--out", out.to_str().unwrap()], "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("asserted bound violations: 0"));
    for file in ["reports.jsonl", "summary.json", "violations.g6", "violations.jsonl", "bound_failures.jsonl"] {
        assert!(out.join(file).exists(), "{file}");
    }
    assert_eq!(std::fs::read_to_string(out.join("violations.g6")).unwrap(), "");

    let m = manifest.to_str().unwrap();
    let first = genpos_env(&["sweep", "--manifest", m, "--format", "json"], "", &[("GENPOS_THREADS", "1")]);
    let second = genpos_env(&["sweep", "--manifest", m, "--format", "json"], "", &[("GENPOS_THREADS", "3")]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, std::fs::read(out.join("reports.jsonl")).unwrap());

    let reseeded = genpos(&["sweep", "--manifest", m, "--seed", "6", "--format", "json"], "");
    assert_ne!(reseeded.stdout, first.stdout);
    let conj = genpos(&["sweep", "--manifest", m, "--conjecture-only"], "");
    assert!(stdout(&conj).contains("0 conjecture counterexamples"));
}

#[test]
fn oracle_diff_agrees() {
    let o = genpos(&["oracle-diff", "--family", "Tk:3", "--format", "json"], "");
    assert!(o.status.success());
    assert!(json_lines(&o).iter().all(|r| r["agree"] == true));
    let skipped = genpos(&["oracle-diff", "--family", "Gn:2", "--oracle-max-n", "8"], "");
    assert!(stdout(&skipped).contains("0 graphs checked, 1 skipped"));
    assert_eq!(genpos(&["oracle-diff", "--family", "Tk:3", "--oracle-max-n", "30"], "").status.code(), Some(2));
}
