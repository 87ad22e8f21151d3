use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn wpn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpn"))
        .args(args)
        .env_remove("WPN_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pnf_standard() {
    let o = wpn(&["pnf", &fixture("std3.measure"), "bcac"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cbbb\n");
}

#[test]
fn weights_table() {
    let o = wpn(&["weights", &fixture("banana.measure"), "nanaba"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "i  1  2  3  4  5  6\n\
         w  n  a  n  a  b  a\n\
         p  2  3  5  6  9 10\n\
         f  3  4  6  7  9 10\n\
         prefix normal: no\n"
    );
    let o = wpn(&["--format", "lines", "weights", &fixture("banana.measure"), "banana"]);
    assert_eq!(stdout(&o), "WORD b a n a n a\nP 3 4 6 7 9 10\nF 3 4 6 7 9 10\nPREFIX_NORMAL yes\n");
}

#[test]
fn classify_prime() {
    let o = wpn(&["classify", &fixture("prime235.measure")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("gapfree: no\n"), "{out}");
    assert!(out.contains("prime: yes\n"), "{out}");
    assert!(out.contains("gap witness: cacb at index 3\n"), "{out}");
    assert!(out.contains("brute-force check: agrees"), "{out}");
}

#[test]
fn classify_pair_measure() {
    let o = wpn(&["classify", &fixture("vec2.measure"), "--format", "lines"]);
    let out = stdout(&o);
    assert!(out.contains("GAPFREE yes\n"), "{out}");
    assert!(out.contains("STEPPED no\n"), "{out}");
    assert!(out.contains("GAP_WITNESS none\n"), "{out}");
}

#[test]
fn pnf_variants() {
    let o = wpn(&["pnf", &fixture("ancb.measure"), "nanaba"]);
    assert_eq!(stdout(&o), "projected: {b}{a}{n,c}{a}{n,c}{a}\ncount: 4\n");
    let o = wpn(&["pnf", &fixture("anx.measure"), "xaxn"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "none: xaxn has a gap at index 3\n");
    let o = wpn(&["--format", "lines", "pnf", &fixture("anx.measure"), "xaxn"]);
    assert_eq!(stdout(&o), "NONE 3\n");
}

#[test]
fn class_and_pnset() {
    let o = wpn(&["class", &fixture("banana.measure"), "banana"]);
    let out = stdout(&o);
    let mut got: Vec<&str> = out.lines().collect();
    got.sort();
    assert_eq!(got, ["abanan", "anaban", "ananab", "banana", "nabana", "nanaba"]);
    let o = wpn(&["pnset", &fixture("ancb.measure"), "nanaba", "--format", "lines"]);
    assert_eq!(stdout(&o), "COUNT 4\nWORD banana\nWORD banaca\nWORD bacana\nWORD bacaca\n");
}

#[test]
fn capacity_is_a_domain_error() {
    let o = wpn(&["pnset", &fixture("ancb.measure"), "nanaba", "--limit", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("exceeds the limit 3"));
    let o = wpn(&["count-binary-pn", "20"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    let o = wpn(&["pnf", &fixture("std3.measure"), "abz"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`z`"));
    let o = wpn(&["pnf", &fixture("bad_key.measure"), "ab"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = wpn(&["classify", &fixture("zero_weight.measure")]);
    assert_eq!(o.status.code(), Some(2));
    let o = wpn(&["classify", &fixture("missing.measure")]);
    assert_eq!(o.status.code(), Some(2));
    let o = wpn(&["verify", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wpn(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_binary() {
    let o = wpn(&["count-binary-pn", "3"]);
    assert_eq!(stdout(&o), "5\n");
    let o = wpn(&["--format", "lines", "count-binary-pn", "1"]);
    assert_eq!(stdout(&o), "COUNT 1 2\n");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "position-basics", "--cases", "500", "--seed", "9", "--format", "lines"];
    let a = wpn(&args);
    let b = wpn(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), "SUITE position-basics CASES 500 VIOLATIONS 0\n");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_wpn"))
            .args(["verify", "projection", "--cases", "50", "--measures", "20"])
            .env("WPN_SEED", seed)
            .output()
            .unwrap()
    };
    let out = stdout(&run("42"));
    assert!(out.contains("seed 42"), "{out}");
    assert!(out.contains("suite projection: pass"), "{out}");
}
