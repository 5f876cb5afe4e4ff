use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fatcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatcut"))
        .args(args)
        .env_remove("FATCUT_EPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in:\n{text}"))
}

const SQUARE: &str = "# unit square\n0 0\n1 0\n1 1\n0 1\n";
const STRIP: &str = "0 0\n1 0\n2 0\n3 0\n3 1\n2 1\n1 1\n0 1\n";
const TRIANGLE: &str = "0 0\n1 0\n0 1\n";

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fatness_values() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "sq.poly", SQUARE);
    let o = fatcut(&["fatness", s(&sq), "--metric", "disk"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "aspect_ratio"), "1.414213562");

    let bar = write(dir.path(), "bar.poly", "0 0\n1 0\n1 4\n0 4\n");
    let o = fatcut(&["fatness", s(&bar), "--alpha", "3.605551275"]);
    let text = stdout(&o);
    assert_eq!(field(&text, "size"), "4.123105626");
    assert_eq!(field(&text, "small"), "false");

    let tri = write(dir.path(), "tri.poly", TRIANGLE);
    let o = fatcut(&["fatness", s(&tri)]);
    assert_eq!(field(&stdout(&o), "ar_disk"), "2.414213562");

    let o = fatcut(&["fatness", s(&sq), "--metric", "square"]);
    assert_eq!(field(&stdout(&o), "aspect_ratio"), "1.000000000");
}

#[test]
fn bad_input_is_diagnosed() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.poly", "0 0\n1 0\nnope\n");
    let o = fatcut(&["fatness", s(&bad)]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let bow = write(dir.path(), "bow.poly", "0 0\n1 1\n1 0\n0 1\n");
    let o = fatcut(&["minfat", s(&bow)]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not simple"));
}

#[test]
fn minfat_reports() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "tri.poly", TRIANGLE);
    let o = fatcut(&["minfat", s(&tri)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cardinality"], 1);

    let strip = write(dir.path(), "strip.poly", STRIP);
    let o = fatcut(&["minfat", s(&strip)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cardinality"], 3);
    assert_eq!(format!("{:.9}", v["achieved_alpha"].as_f64().unwrap()), "1.414213562");
    // keys come out in a fixed order
    let text = stdout(&o);
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("command") < pos("achieved_alpha") && pos("achieved_alpha") < pos("runtime_ms"));
}

#[test]
fn partition_alpha_handling() {
    let dir = TempDir::new().unwrap();
    let strip = write(dir.path(), "strip.poly", STRIP);
    let o = fatcut(&["partition", s(&strip), "--alpha", "0.5"]);
    assert!(!o.status.success());

    let o = fatcut(&["partition", s(&strip), "--alpha", "1.2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["feasible"], false);
    assert!(v["cardinality"].is_null());

    let o = fatcut(&["partition", s(&strip), "--alpha", "1.4142135624"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cardinality"], 3);
}

#[test]
fn oracle_agrees() {
    let dir = TempDir::new().unwrap();
    let strip = write(dir.path(), "strip.poly", STRIP);
    let o = fatcut(&["oracle", s(&strip), "--alpha", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "minfat"), "agree");
    assert_eq!(field(&text, "cardinality"), "agree");

    let o = fatcut(&["oracle", s(&strip), "--cap", "6"]);
    assert!(!o.status.success());
}

#[test]
fn svg_elements() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "sq.poly", SQUARE);
    let o = fatcut(&["svg", s(&sq)]);
    let doc = stdout(&o);
    assert!(doc.starts_with("<svg"));
    assert_eq!(doc.matches("<path").count(), 1);

    let strip = write(dir.path(), "strip.poly", STRIP);
    let report = dir.path().join("strip.json");
    std::fs::write(&report, fatcut(&["minfat", s(&strip)]).stdout).unwrap();
    let o = fatcut(&["svg", s(&strip), "--partition", s(&report)]);
    assert_eq!(stdout(&o).matches(r#"class="piece""#).count(), 3);

    let o = fatcut(&["svg", s(&sq), "--partition", s(&report)]);
    assert!(!o.status.success());

    let corner = write(dir.path(), "corner.poly", "0 0\n6 0\n6 4\n5 4\n5 6\n0 6\n");
    let out = dir.path().join("corner.svg");
    let o = fatcut(&["svg", s(&corner), "--circles", "--out", s(&out)]);
    assert!(o.status.success());
    let doc = std::fs::read_to_string(&out).unwrap();
    assert_eq!(doc.matches("<circle").count(), 2);
}

#[test]
fn deterministic_output() {
    let dir = TempDir::new().unwrap();
    let strip = write(dir.path(), "strip.poly", STRIP);
    let strip_runtime = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["runtime_ms"] = 0.into();
        v
    };
    assert_eq!(
        strip_runtime(fatcut(&["minfat", s(&strip)])),
        strip_runtime(fatcut(&["minfat", s(&strip)]))
    );
    assert_eq!(
        fatcut(&["svg", s(&strip), "--circles"]).stdout,
        fatcut(&["svg", s(&strip), "--circles"]).stdout
    );
    assert_eq!(fatcut(&["fatness", s(&strip)]).stdout, fatcut(&["fatness", s(&strip)]).stdout);
}

#[test]
fn gadget_verify_exports() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("gadgets");
    let o = fatcut(&["gadget-verify", "--out", s(&out)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("corner-offset-disk"));
    let exported = out.join("corner-offset-disk.poly");
    let o = fatcut(&["fatness", s(&exported)]);
    assert_eq!(field(&stdout(&o), "ar_disk"), "1.585770291");
}

#[test]
fn ledger_counts() {
    let o = fatcut(&["ledger", "--variables", "5", "--clauses", "3"]);
    assert_eq!(field(&stdout(&o), "k"), "52");
    let o = fatcut(&["ledger", "--variables", "1", "--clauses", "1", "--straight", "5"]);
    assert_eq!(field(&stdout(&o), "k"), "17");
}

#[test]
fn tolerance_from_environment() {
    let dir = TempDir::new().unwrap();
    let sq = write(dir.path(), "sq.poly", SQUARE);
    let run = |eps: &str| {
        Command::new(env!("CARGO_BIN_EXE_fatcut"))
            .args(["fatness", s(&sq)])
            .env("FATCUT_EPS", eps)
            .output()
            .unwrap()
    };
    assert!(run("1e-6").status.success());
    assert!(!run("banana").status.success());
    assert!(!run("2").status.success());
}
