use std::process::{Command, Output};

use serde_json::Value;

fn qsuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsuper"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = qsuper(&all);
    (
        serde_json::from_slice(&o.stdout).expect("json on stdout"),
        o.status.code().unwrap(),
    )
}

#[test]
fn rmatrix_gl11() {
    let (v, code) = json(&["rmatrix", "gl", "1|1"]);
    assert_eq!(code, 0);
    let entries: Vec<(u64, u64, String)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e[0].as_u64().unwrap(),
                e[1].as_u64().unwrap(),
                e[2].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let expect = [
        (0, 0, "q"),
        (1, 1, "1"),
        (1, 2, "q - q^-1"),
        (2, 2, "1"),
        (3, 3, "q^-1"),
    ];
    assert_eq!(entries.len(), expect.len());
    for (got, want) in entries.iter().zip(expect) {
        assert_eq!((got.0, got.1, got.2.as_str()), want);
    }
}

#[test]
fn rmatrix_text_is_a_dump() {
    let o = qsuper(&["rmatrix", "gl 2|0"]);
    let text = stdout(&o);
    assert!(text.starts_with("% sparse-matrix rows=4 cols=4 nnz=5\n"));
    assert!(text.contains("\n0 0 q\n") && text.contains("\n3 3 q\n"));
}

#[test]
fn sdim_outputs() {
    assert_eq!(stdout(&qsuper(&["sdim", "gl", "3|1"])), "[2]_q = q + q^-1\n");
    assert_eq!(stdout(&qsuper(&["sdim", "osp", "2|2"])), "0\n");
    let o = qsuper(&["sdim", "gl", "2|1", "--all-orderings"]);
    assert!(stdout(&o).contains("invariant across 3 orderings"));
    let o = qsuper(&["sdim", "--algebra", "gl 2|1", "--order", "d1,e1,e2"]);
    assert_eq!(stdout(&o), "[1]_q = 1\n");
}

#[test]
fn link_invariants() {
    assert_eq!(stdout(&qsuper(&["invariant", "gl", "2|1", "--braid", ""])), "1\n");
    assert_eq!(stdout(&qsuper(&["invariant", "gl", "1|1", "--braid", "s1"])), "0\n");
    // Hopf link: ǧ² has eigenvalues q² and q⁻² on components of quantum
    // dimension [1][2]/[2] = 1 and [1][0]/[2] = 0.
    assert_eq!(
        stdout(&qsuper(&["invariant", "gl", "2|1", "--braid", "s1 s1"])),
        "q^2\n"
    );
}

#[test]
fn fft_gl_is_equal_and_deterministic() {
    let a = qsuper(&["fft", "gl", "1|1", "-r", "2", "--json"]);
    let b = qsuper(&["fft", "gl", "1|1", "-r", "2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "equal");
    assert_eq!(v["commutant_dim"], 2);
    assert_eq!(v["points"], serde_json::json!(["7/5", "13/9", "23/17"]));
}

#[test]
fn fft_osp_reports() {
    let (v, code) = json(&["fft", "osp", "3|2", "-r", "2"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("equal")));
    assert!(v.get("bound").is_none());
    let (v, code) = json(&["fft", "osp", "4|2", "-r", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["bound"]["bound"], 12);
    assert_eq!(v["bound"]["within"], true);
}

#[test]
fn budget_gives_partial_report() {
    let (v, code) = json(&["fft", "gl", "2|1", "-r", "1,3", "--budget", "20"]);
    assert_eq!(code, 3);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["r"], 1);
}

#[test]
fn relation_and_brauer_checks() {
    let (v, code) = json(&["relations", "gl", "2|1", "--kind", "walled", "-r", "2", "-s", "1"]);
    assert_eq!(code, 0);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["holds"] == true));
    let (_, code) = json(&["relations", "osp", "3|2", "-r", "3"]);
    assert_eq!(code, 0);
    let (v, code) = json(&["brauer", "osp", "4|2", "-r", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["delta"], 2);
    assert_eq!(v["homomorphism_holds"], true);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let cases: &[&[&str]] = &[
        &["rmatrix", "gl", "0|0"],
        &["rmatrix", "osp", "3|2"],
        &["sdim"],
        &["sdim", "gl"],
        &["sdim", "sl", "2|1"],
        &["sdim", "gl", "2|x"],
        &["sdim", "osp", "2|1"],
        &["sdim", "gl", "2|1", "order=e1,e1,d1"],
        &["sdim", "gl", "2|1", "--order", "e1,d1"],
        &["invariant", "gl", "2|1", "--braid", "s0"],
        &["invariant", "gl", "2|1", "--braid", "t1"],
        &["invariant", "gl", "2|1", "--braid", "s1^2"],
        &["invariant", "osp", "3|2", "--braid", "s1"],
        &["fft", "gl", "1|1"],
        &["fft", "gl", "1|1", "-r", "2", "--points", "1"],
        &["fft", "gl", "1|1", "-r", "2", "--points", "x"],
        &["fft", "gl", "1|1", "-r", "2", "--points", "3/0"],
        &["relations", "gl", "2|1", "--kind", "bmw"],
        &["relations", "gl", "2|1", "--kind", "nope"],
        &["brauer", "gl", "2|1"],
        &["nosuch"],
    ];
    for args in cases {
        let o = qsuper(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn oversized_requests_hit_the_budget() {
    assert_eq!(qsuper(&["brauer", "osp", "3|2", "-r", "7"]).status.code(), Some(3));
    assert_eq!(
        qsuper(&["invariant", "gl", "3|2", "--braid", "s1 s2 s3", "--budget", "100"])
            .status
            .code(),
        Some(3)
    );
}
