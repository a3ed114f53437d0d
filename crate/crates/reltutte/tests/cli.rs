use std::path::PathBuf;
use std::process::Command;

use reltutte::cli::{run, EXIT_INPUT, EXIT_OK};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("reltutte").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("reltutte-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn jones_and_bracket() {
    let fg = fixture("virtual_3c2v.fg.json");
    assert_eq!(ok(&["jones", "--face-graph", &fg, "--writhe", "3"]), "t + t^3 - t^4");
    assert_eq!(ok(&["bracket", "--face-graph", &fg]), "A^-7 - A^-3 - A^5");
    assert_eq!(ok(&["bracket", "--face-graph", &fixture("unknot.fg.json")]), "1");
    assert_eq!(ok(&["oracle", "--pd", &fixture("kink_plus.pd")]), "-A^3");
}

#[test]
fn jones_in_q_warns() {
    let (code, out, err) = call(&["jones", "--face-graph", &fixture("hopf.fg.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim_end(), "-q^-10 - q^-2");
    assert!(!err.is_empty());
}

#[test]
fn bracket_and_oracle_agree_on_fixtures() {
    for name in ["trefoil", "figure_eight", "virtual_trefoil", "k4_mixed", "wheel4_virtual"] {
        let a = ok(&["bracket", "--face-graph", &fixture(&format!("{name}.fg.json"))]);
        let b = ok(&["oracle", "--pd", &fixture(&format!("{name}.pd"))]);
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn tutte_variants() {
    let fg = fixture("virtual_3c2v.fg.json");
    let dc = ok(&["tutte", "--graph", &fg, "--psi", "knot"]);
    let ex = ok(&["tutte", "--graph", &fg, "--psi", "knot", "--method", "expansion"]);
    assert_eq!(dc, ex);
    assert_eq!(dc, "x[+]*y[+]*X[+] + x[+]*y[+]^2*d + x[+]^2*y[+] + x[+]^2*Y[+] + y[+]^2*X[+]*d");
    let loc = ok(&["tutte", "--graph", &fg, "--psi", "knot", "--localized"]);
    assert!(loc.contains("Xloc") || loc.contains("Yloc"), "{loc}");
    for psi in ["one", "alpha", "rank-z"] {
        ok(&["tutte", "--graph", &fg, "--psi", psi]);
    }
    let (code, _, _) = call(&["tutte", "--graph", &fg, "--psi", "nested-tutte"]);
    assert_eq!(code, EXIT_INPUT);
    let nested = temp_file(
        "nested.json",
        r#"{"vertices": [0, 1], "edges": [
            {"id": 1, "ends": [0, 1], "color": "+"},
            {"id": 2, "ends": [0, 1], "color": "0:+"}]}"#,
    );
    ok(&["tutte", "--graph", &nested, "--psi", "nested-tutte"]);
    let (code, _, _) = call(&["tutte", "--graph", &fg, "--psi", "nope"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn zero_edges_by_id() {
    let g = temp_file(
        "path.json",
        r#"{"vertices": [0, 1, 2], "edges": [
            {"id": 1, "ends": [0, 1], "color": "+"},
            {"id": 2, "ends": [1, 2], "color": "+"}]}"#,
    );
    assert_eq!(ok(&["tutte", "--graph", &g, "--psi", "one"]), "X[+]^2");
    assert_eq!(ok(&["tutte", "--graph", &g, "--psi", "one", "--zero-edges", "2"]), "X[+]");
    let (code, _, _) = call(&["tutte", "--graph", &g, "--psi", "one", "--zero-edges", "9"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn knot_psi_on_zero_triangle() {
    let g = temp_file(
        "triangle.json",
        r#"{"vertices": [0, 1, 2], "edges": [
            {"id": 1, "ends": [0, 1], "color": "0"},
            {"id": 2, "ends": [1, 2], "color": "0"},
            {"id": 3, "ends": [2, 0], "color": "0"}]}"#,
    );
    assert_eq!(ok(&["tutte", "--graph", &g, "--psi", "knot"]), "1");
}

#[test]
fn other_commands() {
    assert_eq!(ok(&["zero-order", "--graph", &fixture("virtual_unlink3.fg.json")]), "3");
    assert_eq!(
        ok(&["cluster", "--graph", &fixture("trefoil.fg.json"), "--p", "1/2"]),
        "1/2*kappa + 3/8*kappa^2 + 1/8*kappa^3"
    );
    let tri = fixture("trefoil.fg.json");
    let via = ok(&["pointed", "--graph", &tri, "--pointed-set", "1"]);
    let direct = ok(&["pointed", "--graph", &tri, "--pointed-set", "1", "--direct"]);
    assert_eq!(via, direct);
    let (code, out, _) = call(&["selftest"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0 failed"), "{out}");
}

#[test]
fn input_errors() {
    let cases: Vec<Vec<String>> = vec![
        vec![],
        vec!["bogus".into()],
        vec!["bracket".into()],
        vec!["bracket".into(), "--face-graph".into(), "/nonexistent/x.json".into()],
        vec!["oracle".into(), "--pd".into(), temp_file("bad.pd", "X 1 2 3\n")],
        vec!["cluster".into(), "--graph".into(), fixture("trefoil.fg.json"), "--p".into(), "3/2".into()],
        vec!["--threads".into(), "0".into(), "selftest".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, _, err) = call(&["oracle", "--pd", &temp_file("bad2.pd", "O\nX 1 2 3\n")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains(":2:"), "{err}");
}

#[test]
fn json_output() {
    let out = ok(&["--json", "jones", "--face-graph", &fixture("virtual_3c2v.fg.json"), "--writhe", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "jones");
    assert!(v["result"].is_string());
}

#[test]
fn binary_output_is_stable_across_threads() {
    let exe = env!("CARGO_BIN_EXE_reltutte");
    let fg = fixture("wheel4_virtual.fg.json");
    let runs = ["1", "4"].map(|t| {
        let o = Command::new(exe).args(["--threads", t, "tutte", "--graph", &fg, "--psi", "knot"]).output().unwrap();
        assert!(o.status.success());
        o.stdout
    });
    assert_eq!(runs[0], runs[1]);
    let o = Command::new(exe).args(["bracket"]).output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_INPUT));
}
