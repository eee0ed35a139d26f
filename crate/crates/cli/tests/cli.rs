use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn boric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boric")).args(args).output().unwrap()
}

fn boric_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boric"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn induce_then_iso() {
    let induced = boric(&["tree", "induce", &data("t12.nwk"), "1,3,7,8,9,12"]);
    assert_eq!(code(&induced), 0);
    let iso = boric_stdin(&["tree", "iso", "-", &data("t0.nwk")], &stdout(&induced));
    assert_eq!(stdout(&iso).trim(), "isomorphic");
    assert_eq!(code(&iso), 0);

    let other = boric(&["tree", "induce", &data("t12.nwk"), "1,2,3,5,7,8"]);
    let iso = boric_stdin(&["tree", "iso", "-", &data("t0.nwk"), "--oracle"], &stdout(&other));
    assert_eq!(stdout(&iso).trim(), "not isomorphic");
    assert_eq!(code(&iso), 1);
}

#[test]
fn embedding_and_enumeration_counts() {
    let o = boric(&["tree", "embed", &data("quartet.nwk"), &data("t0.nwk"), "--count", "--oracle"]);
    assert_eq!(stdout(&o).trim(), "120");
    let o = boric(&["tree", "enumerate", "5", "--count", "--oracle"]);
    assert_eq!(stdout(&o).trim(), "15");
    let o = boric(&["tree", "enumerate", "6", "--shapes", "--count"]);
    assert_eq!(stdout(&o).trim(), "2");
    let caterpillar = "(1,(2,(3,(4,(5,6)))));";
    let o = boric(&["tree", "embed", &data("t0.nwk"), caterpillar]);
    assert_eq!(code(&o), 1);
}

#[test]
fn canonical_encodings() {
    let a = boric(&["tree", "canon", &data("t0.nwk")]);
    let b = boric(&["tree", "canon", "((6,5),(1,3),(2,4));"]);
    let c = boric(&["tree", "canon", "(1,(2,(3,(4,(5,6)))));"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn boric_membership_verdicts() {
    let spec = data("boric.spec");
    let tree = data("t12.nwk");
    let yes = boric(&["ideal", "member", &spec, &tree, "disc(1,3,7,8,9,12)"]);
    assert_eq!(stdout(&yes).trim(), "MEMBER (generator)");
    assert_eq!(code(&yes), 0);
    let no = boric(&["ideal", "member", &spec, &tree, "disc(1,2,3,5,7,8)"]);
    assert!(stdout(&no).starts_with("NOT MEMBER (graded span rank certificate"));
    assert_eq!(code(&no), 1);
}

#[test]
fn membership_with_oracle_and_coefficients() {
    let spec = data("sym-r1.spec");
    let o = boric(&["ideal", "member", &spec, "[3]", "x1^2 - x3^2", "--oracle"]);
    let text = stdout(&o);
    assert_eq!(code(&o), 0, "{text}");
    assert!(text.contains("oracle: agrees"), "{text}");
    let o = boric(&["ideal", "member", &spec, "[3]", "x1*x2 - x3", "--method", "groebner", "--oracle"]);
    let text = stdout(&o);
    assert_eq!(code(&o), 1, "{text}");
    assert!(text.contains("normal form"), "{text}");
    // mixed degrees rule out the span route
    let o = boric(&["ideal", "member", &spec, "[3]", "x1 - x3", "--method", "span"]);
    assert_eq!(code(&o), 2);
    let spec = data("sym-r2.spec");
    let o = boric(&["ideal", "member", &spec, "[3]", "disc(1,2,3) - 3*disc(2,1,3)", "--method", "span", "--oracle"]);
    let text = stdout(&o);
    assert!(text.starts_with("MEMBER (graded span"), "{text}");
    assert!(text.contains(" * g"), "{text}");
}

#[test]
fn stabilization_report() {
    let o = boric(&["ideal", "stabilize", &data("sym-r1.spec"), "--bound", "5"]);
    let text = stdout(&o);
    assert!(text.starts_with("stabilized at level 2 of 4"), "{text}");
    assert!(text.contains("[5]: basis sizes [0, 4, 4, 4]"), "{text}");
    let o = boric(&["ideal", "stabilize", &data("sym-r2.spec"), "--bound", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stabilized_at"], 3);
}

#[test]
fn init_and_equivariance() {
    let dir = std::env::temp_dir().join(format!("boric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let oi = dir.join("oi.spec");
    std::fs::write(&oi, "instance: oi\nbound: 4\ngenerator: [2] | x1 - x2\n").unwrap();
    let o = boric(&["ideal", "init", oi.to_str().unwrap(), "[3]"]);
    assert_eq!(stdout(&o).trim(), "init(I_[3]) = (x2, x1)");
    let o = boric(&["ideal", "equivariance", oi.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("EQUIVARIANT"));
    let o = boric(&["ideal", "init", &data("sym-r1.spec"), "[3]"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no ordering"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn orbit_generator_listing() {
    let o = boric(&["ideal", "gens", &data("sym-r1.spec"), "[3]"]);
    let text = stdout(&o);
    assert!(text.starts_with("8 orbit generators at [3]"), "{text}");
    let o = boric(&["ideal", "gens", &data("boric.spec"), &data("t12.nwk"), "--count"]);
    assert!(stdout(&o).starts_with("600 orbit generators at "));
}

#[test]
fn poset_verdicts() {
    let o = boric(&["poset", "antichain", "pairfi", "cycles", "3..6"]);
    assert_eq!(stdout(&o).trim(), "ANTICHAIN (4 elements)");
    let o = boric(&["poset", "leq", "higman", "1,2", "0,1,3", "--oracle"]);
    assert!(stdout(&o).starts_with("LEQ"));
    assert_eq!(code(&o), 0);
    let o = boric(&["poset", "leq", "higman", "2", "1,1,1"]);
    let text = stdout(&o);
    assert!(text.starts_with("INCOMPARABLE-OR-GT"));
    assert!(text.contains("2 <= 1,1,1: false, 1,1,1 <= 2: false"));
    assert_eq!(code(&o), 1);
    let o = boric(&["poset", "leq", "dickson", "1,2", "1,3"]);
    assert_eq!(code(&o), 0);
    let o = boric(&["poset", "leq", "weighted", "[1] weights: {1: 2}", "[2] weights: {1: 1, 2: 3}"]);
    assert_eq!(code(&o), 0);
    let o = boric(&["poset", "antichain", "fi", "[1]", "[2]"]);
    assert!(stdout(&o).starts_with("NOT AN ANTICHAIN: [1] <= [2]"));
    assert_eq!(code(&o), 1);
}

#[test]
fn error_exit_codes() {
    let o = boric(&["ideal", "member", &data("boric.spec"), &data("t12.nwk"), "disc(1,2,x13)"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("position 9"), "{err}");
    assert!(err.contains("  |          ^"), "{err}");
    let o = boric(&["tree", "iso", "((1,2),(3,4)", &data("t0.nwk")]);
    assert_eq!(code(&o), 2);
    let o = boric(&["poset", "leq", "higman", "1,a", "2"]);
    assert_eq!(code(&o), 2);
    let o = boric(&["ideal", "gens", &data("sym-r1.spec"), "[7]"]);
    assert_eq!(code(&o), 3);
    let o = boric(&["tree", "canon", "missing.nwk"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["tree", "embed", &data("t0.nwk"), &data("t12.nwk"), "--format", "json"];
    let a = boric(&args);
    let b = boric(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["count"], 14400);
}

#[test]
fn fuzz_agrees_with_brute_force() {
    let o = boric(&["tree", "fuzz", "--seed", "11", "--count", "50"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("50 random pairs agree"));
}
