use std::fs;
use std::path::PathBuf;

use gpcheck::cli::{run, EXIT_INPUT, EXIT_NO, EXIT_YES};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("gpcheck-cli-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let path = self.0.join(name);
        fs::write(&path, body).unwrap();
        path.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn gpcheck(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("gpcheck").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check_exit_codes() {
    let dir = Scratch::new("check");
    let aa = dir.file("aa.gp", "a a\n");
    let abab = dir.file("abab.gp", "a b a b\n");
    let bad = dir.file("bad.gp", "a b a\n");

    let (code, out, _) = gpcheck(&["check", &aa]);
    assert_eq!(code, EXIT_YES);
    assert!(out.ends_with("verdict: realizable\n"), "{out}");

    let (code, out, _) = gpcheck(&["check", &abab]);
    assert_eq!(code, EXIT_NO);
    assert!(out.contains("(i) fail"), "{out}");

    let (code, _, err) = gpcheck(&["check", &bad]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error:"), "{err}");

    let (code, _, _) = gpcheck(&["check", &dir.0.join("missing.gp").to_string_lossy()]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn check_with_partition() {
    let dir = Scratch::new("pair");
    let hopf = dir.file("hopf.gp", "a b\na b\n");
    let good = dir.file(
        "good.json",
        r#"{"words":[{"A":["a"],"Ap":[]},{"A":["b"],"Ap":[]}]}"#,
    );
    let (code, out, _) = gpcheck(&["check", &hopf, "--partition", &good, "--json"]);
    assert_eq!(code, EXIT_YES, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "realizable");

    let foreign = dir.file(
        "foreign.json",
        r#"{"words":[{"A":["a","b"],"Ap":[]},{"A":[],"Ap":[]}]}"#,
    );
    let (code, _, err) = gpcheck(&["check", &hopf, "--partition", &foreign]);
    assert_eq!(code, EXIT_INPUT, "{err}");
}

#[test]
fn genus_of_strings() {
    let dir = Scratch::new("genus");
    let eight = dir.file("eight.json", r#"{"circles":[["a+","a-"]]}"#);
    let (code, out, _) = gpcheck(&["genus", &eight]);
    assert_eq!(code, EXIT_YES);
    assert!(out.contains("g = 0"), "{out}");

    let torus = dir.file("torus.json", r#"{"circles":[["a+","b+","a-","b-"]]}"#);
    let (code, out, _) = gpcheck(&["genus", &torus, "--json"]);
    assert_eq!(code, EXIT_NO);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["oracle"]["genus"], 1);

    let hopf = dir.file("hopf.gp", "a b\na b\n");
    let (code, _, _) = gpcheck(&["genus", &hopf]);
    assert_eq!(code, EXIT_INPUT);
    let part = dir.file(
        "p.json",
        r#"{"words":[{"A":["a"],"Ap":[]},{"A":["b"],"Ap":[]}]}"#,
    );
    let (code, out, _) = gpcheck(&["genus", &hopf, "--partition", &part]);
    assert_eq!(code, EXIT_YES, "{out}");
}

#[test]
fn fuzz_is_deterministic() {
    let (code, out, _) = gpcheck(&["fuzz", "--count", "0"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(out, "0/0 agree, 0 disagree, 0 indeterminate (seed 1)\n");

    let first = gpcheck(&["fuzz", "--seed", "9", "--count", "50"]);
    let second = gpcheck(&["fuzz", "--seed", "9", "--count", "50"]);
    assert_eq!(first, second);
    assert_eq!(first.0, EXIT_YES);
    assert!(
        first
            .1
            .ends_with("50/50 agree, 0 disagree, 0 indeterminate (seed 9)\n"),
        "{}",
        first.1
    );

    let (code, out, _) = gpcheck(&["fuzz", "--replay", "12345"]);
    assert_eq!(code, EXIT_YES);
    assert!(out.starts_with("string: {"), "{out}");
}

#[test]
fn partitions_lines() {
    let dir = Scratch::new("parts");
    let count = |body: &str, name: &str| {
        let f = dir.file(name, body);
        let (code, out, _) = gpcheck(&["partitions", &f]);
        assert_eq!(code, EXIT_YES);
        out.lines().count()
    };
    assert_eq!(count("a a\n", "aa.gp"), 1);
    assert_eq!(count("a b\na b\n", "hopf.gp"), 2);
    assert_eq!(count("a b b\na c c\n", "odd.gp"), 0);
}

#[test]
fn bad_arguments() {
    let (code, _, err) = gpcheck(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!err.is_empty());
    let (code, _, _) = gpcheck(&["check", "x.gp", "--max-cyclic", "0"]);
    assert_eq!(code, EXIT_INPUT);
}
