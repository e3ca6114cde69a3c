use std::path::PathBuf;
use std::process::{Command, Output};

use dp5::report::VerificationReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dp5"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hp_prints_polynomial_and_curve_data() {
    let o = run(&["hp", data("quartic_4l2.ideal").to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("4*m + 1\ndegree 4, genus 0\n"), "{s}");
    assert!(s.contains("HF(0..=8): 1 5 9 13"));
    let o = run(&["hp", data("x5.ideal").to_str().unwrap(), "--check-degree", "2"]);
    assert_eq!(stdout(&o), "5/6*m^3 + 5/2*m^2 + 8/3*m + 1\nHF(0..=2): 1 7 23\n");
}

#[test]
fn tangent_within_x5() {
    let o = run(&[
        "tangent",
        data("quartic_4l2.ideal").to_str().unwrap(),
        "--within",
        data("x5.ideal").to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ambient 31\nrelative 8\n");
    let o = run(&["tangent", data("line_l0.ideal").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ambient"], 10);
    assert!(v["relative"].is_null());
}

#[test]
fn gb_respects_order() {
    let f = data("twisted_cubic.ideal");
    let lex = stdout(&run(&["gb", f.to_str().unwrap(), "--order", "lex"]));
    let grevlex = stdout(&run(&["gb", f.to_str().unwrap()]));
    assert!(lex.contains("gens:\nb*d - c^2\na*d - b*c\na*c - b^2\n"), "{lex}");
    assert!(
        grevlex.contains("gens:\nc^2 - b*d\nb*c - a*d\nb^2 - a*c\n"),
        "{grevlex}"
    );
}

#[test]
fn ideal_operations() {
    let cubic = data("twisted_cubic.ideal");
    let point = data("cubic_point.ideal");
    let q = stdout(&run(&["quotient", cubic.to_str().unwrap(), point.to_str().unwrap()]));
    assert!(q.contains("b*c - a*d"), "{q}");
    let s = stdout(&run(&["saturate", data("quartic_4l2.ideal").to_str().unwrap()]));
    assert!(s.starts_with("ring: a6, a4, a2, a0, am2, am4, am6\nweights: 6, 4, 2, 0, -2, -4, -6\ngens:\n"));
    let e = stdout(&run(&["eliminate", cubic.to_str().unwrap(), "--vars", "a,d"]));
    assert_eq!(e, "ring: b, c\ngens:\n");
    let c = stdout(&run(&[
        "compare",
        data("x5.ideal").to_str().unwrap(),
        data("quartic_4l2.ideal").to_str().unwrap(),
    ]));
    assert_eq!(c, "subset\n");
    let c = stdout(&run(&["compare", cubic.to_str().unwrap(), cubic.to_str().unwrap()]));
    assert_eq!(c, "equal\n");
}

#[test]
fn fixed_and_residual() {
    let o = run(&["fixed", "--degree", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["hilbert_polynomial"] == "3*m + 1"));
    let o = run(&["fixed", "--degree", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 30);
    let o = run(&["fixed", "--degree", "5"]);
    assert!(!o.status.success());

    let o = run(&["residual", "--line", "l2", "--pick", "3,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["e5_hilbert_polynomial"], "5*m");
    assert_eq!(v["curve"]["hilbert_polynomial"], "4*m + 1");
    let o = run(&["residual", "--line", "l7", "--pick", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["residual", "--line", "l0", "--pick", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn suite_exit_status_and_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "suite",
        "section-2",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let r = VerificationReport::from_json(&text).unwrap();
    assert_eq!(r.suite, "section-2");
    assert_eq!(r.checks.len(), 2);
    assert!(r.checks.iter().all(|c| !c.cite.is_empty()));
    assert_eq!(r.to_json() + "\n", text);

    let o = run(&["suite", "properties", "--cases", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS  prop-gb-axioms"));
    let o = run(&["suite", "nonsense"]);
    assert!(!o.status.success());
}

#[test]
fn unreadable_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "ring: x, y\ngens:\nx + + y\n").unwrap();
    let o = run(&["hp", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = run(&["hp", dir.path().join("missing.ideal").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
