use qgalg::cli::run;

fn qg(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, _) = qg(&a);
    (code, serde_json::from_str(&out).expect("valid json"))
}

#[test]
fn normalize_prints_normal_form() {
    let (code, out, _) = qg(&["normalize", "--preset", "funq", "D*A"]);
    assert_eq!(code, 0);
    assert_eq!(out, "A*D - (q - q^-1)*B*C\n");
    let (_, out, _) = qg(&["normalize", "--preset", "qplane", "dY*Y"]);
    assert_eq!(out, "1 + q^2*Y*dY\n");
}

#[test]
fn normalize_json_and_eval() {
    let (code, v) = json(&["normalize", "--preset", "funq", "--eval", "q=0.49", "D*A - A*D"]);
    assert_eq!(code, 0);
    assert_eq!(v["normal_form"], "-(q - q^-1)*B*C");
    // q - 1/q at q = 49/100 is -7599/4900
    assert_eq!(v["eval"]["value"], "(7599/4900)*B*C");
    assert!(v["engine_version"].as_str().unwrap().starts_with("qgalg "));
}

#[test]
fn parse_errors_exit_two() {
    let (code, out, err) = qg(&["normalize", "A +"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("position 3"), "{err}");
    let (code, _, err) = qg(&["normalize", "--preset", "funq", "X"]);
    assert_eq!(code, 2);
    assert!(err.contains('X'), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qg(&["verify", "no-such-target"]).0, 2);
    assert_eq!(qg(&["matrix", "no-such-object"]).0, 2);
    assert_eq!(qg(&["normalize", "--preset", "nope", "A"]).0, 2);
    assert_eq!(qg(&["verify", "intertwiner", "--spins", "1/2"]).0, 2);
    assert_eq!(qg(&["verify", "rll", "--j", "-1"]).0, 2);
    assert_eq!(qg(&["frobnicate"]).0, 2);
    assert_eq!(qg(&["matrix", "spinrep", "--eval", "t=3"]).0, 2);
}

#[test]
fn passing_targets_exit_zero() {
    for target in ["confluence", "rep-property", "universal-t", "intertwiner", "ybe", "braid", "rll", "qboson", "su_q2", "jordanian"] {
        let (code, out, err) = qg(&["verify", target]);
        assert_eq!(code, 0, "{target}: {out}{err}");
        assert!(out.ends_with(")\n") && out.contains("result: PASS"), "{target}");
    }
    let (code, v) = json(&["verify", "rep-property", "--rep", "T1"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let (code, _, _) = qg(&["verify", "intertwiner", "--spins", "1,1/2"]);
    assert_eq!(code, 0);
    let (code, _, _) = qg(&["verify", "braid", "--strands", "4"]);
    assert_eq!(code, 0);
}

#[test]
fn failing_targets_exit_one() {
    let (code, v) = json(&["verify", "rtt"]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"(1,2)"));
    assert!(!failed.iter().any(|n| n.contains("R21")));
    assert_eq!(qg(&["verify", "covariance"]).0, 1);
}

#[test]
fn verify_is_deterministic() {
    let a = qg(&["verify", "all", "--format", "json"]);
    let b = qg(&["verify", "all", "--format", "json"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 1);
}

#[test]
fn matrices() {
    let (code, v) = json(&["matrix", "rmatrix"]);
    assert_eq!(code, 0);
    let m = &v["matrices"][0];
    assert_eq!((m["rows"].as_u64(), m["cols"].as_u64()), (Some(4), Some(4)));
    assert_eq!(m["entries"][1][2], "s - s^-3");
    let (_, v) = json(&["matrix", "spinrep", "--j", "1", "--eval", "q=4"]);
    // s = 2, [[2]] = 17/4: X+ (1,2) = s^-1 sqrt(17/4)
    assert_eq!(v["matrices"][1]["eval"][0][1], "~1.030776");
    assert_eq!(v["matrices"][0]["eval"][0][0], "1");
    let (code, out, _) = qg(&["matrix", "universal-t", "--j", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("T1(A, B, C, D) (3x3)"));
    for obj in ["lmatrices", "fock", "sector"] {
        assert_eq!(qg(&["matrix", obj]).0, 0, "{obj}");
    }
    let (_, out, _) = qg(&["matrix", "fock", "--levels", "3"]);
    assert!(out.starts_with("A (3x3):\n  [0, 1, 0]\n"), "{out}");
}

#[test]
fn out_file_matches_json_stdout() {
    let dir = std::env::temp_dir().join(format!("qg-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = qg(&["verify", "ybe", "--format", "json", "--out", p]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qg");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", "ybe"]), Some(0));
    assert_eq!(status(&["verify", "covariance"]), Some(1));
    assert_eq!(status(&["normalize", "A $ B"]), Some(2));
    assert_eq!(status(&["--version"]), Some(0));
}
