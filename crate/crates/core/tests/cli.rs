use std::process::Command;

use serde_json::Value;

fn docle(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_docle"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, stdout, stderr) = docle(&all);
    assert_eq!(code, 0, "{stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn docle_matches_oracle() {
    let (code, main, _) = docle(&["docle", "--vars", "2", "(x^3, x*y, y^2)"]);
    assert_eq!(code, 0);
    assert_eq!(main, "{x1^2, x2}\n");
    let (_, brute, _) = docle(&["oracle", "docle", "--vars", "2", "(x^3, x*y, y^2)", "--box", "x^4*y^4"]);
    assert_eq!(brute, main);
}

#[test]
fn antipodal_degree_six() {
    let (code, out, _) = docle(&["antipodal", "--vars", "2", "--k", "10", "--p", "y^6+x^3*y^3+x^5*y"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8");
}

#[test]
fn decompose_mixed() {
    let v = json(&["decompose", "--vars", "2", "(x^2, x*y)"]);
    assert_eq!(v["J"], "(x1)");
    assert_eq!(v["H"], "(x1^2, x2)");
    assert_eq!(v["command"], "decompose");
}

#[test]
fn monomial_pipeline() {
    assert_eq!(json(&["closure", "--vars", "2", "(x*y)"])["whole_poset"], true);
    assert_eq!(json(&["closure", "--vars", "2", "(x^2, x*y)"])["closure"], "(x1^2, x2)");
    assert_eq!(json(&["saturate", "--vars", "2", "(x^2, x*y)"])["saturation"], "(x1)");
    assert_eq!(json(&["inverse-ideal", "--vars", "2", "{x^2*y}"])["ideal"], "(x1^3, x2^2)");
    assert_eq!(json(&["intersect", "--vars", "2", "(x)", "(x^2, y)"])["intersection"], "(x1^2, x1*x2)");
    let v = json(&["docle", "--vars", "2", r#"{"gens": [[3,0],[0,2]]}"#]);
    assert_eq!(v["elems"], serde_json::json!([[2, 1]]));
}

#[test]
fn graded_pipeline() {
    let v = json(&["hilbert", "--vars", "2", "(x^3, y^2 - x*y)"]);
    assert_eq!(v["hilbert"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["dimension"], 6);
    assert_eq!(json(&["socle", "--vars", "2", "(x^3, y^2 - x*y)"])["dimension"], 1);
    assert_eq!(json(&["initial-ideal", "--vars", "2", "(x^3, y^2 - x*y)"])["initial_ideal"], "(x1^3, x2^2)");
    assert_eq!(json(&["colon-power", "--vars", "2", "--k", "3", "--p", "y"])["ideal"], "(x2^2, x1^3)");
    assert_eq!(json(&["ann", "--vars", "2", "--q", "t1^2*t2"])["ideal"], "(x2^2, x1^3)");
    let v = json(&["inverse-system", "--vars", "2", "(x^3, y^2 - x*y)"]);
    assert_eq!(v["generators"], serde_json::json!(["3*t1^2*t2 + 3*t1*t2^2 + t2^3"]));
}

#[test]
fn gorenstein_pipeline() {
    let p = "x*y^2 + x^2*y + x^3";
    assert_eq!(json(&["gorenstein-check", "--vars", "2", "--k", "4", "--p", p])["holds"], true);
    let v = json(&["monomial-iff", "--vars", "2", "--k", "4", "--p", p]);
    assert_eq!(v["is_monomial_ideal"], false);
    assert_eq!(v["agree"], true);
    let v = json(&["series-check", "--vars", "2", "--k", "4", "--p", p, "--coeffs", "1,1,1/2,1/6"]);
    assert_eq!(v["passed"], true);
    let (code, _, err) = docle(&["series-check", "--vars", "2", "--k", "4", "--p", p, "--coeffs", "1,0,1,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("zero"));
}

#[test]
fn letter_names_and_output_file() {
    let dir = std::env::temp_dir().join(format!("docle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let (code, out, _) = docle(&[
        "saturate",
        "--vars-names",
        "a,b",
        "--out",
        path.to_str().unwrap(),
        "(a^2, a*b)",
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "(a)\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn staircase_pictures() {
    let (_, ascii, _) = docle(&["staircase", "--vars", "2", "(x^2, x*y)"]);
    assert_eq!(ascii, ".###\n.###\n+*##\n");
    let (_, svg, _) = docle(&["staircase", "--vars", "2", "--picture", "svg", "(x^2, x*y)"]);
    assert!(svg.starts_with("<svg"));
    let (code, _, _) = docle(&["staircase", "--vars", "3", "(x, y, z)"]);
    assert_eq!(code, 1);
}

#[test]
fn errors_and_exit_codes() {
    let (code, _, err) = docle(&["docle", "--vars", "2", "(x^3,"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 5"), "{err}");
    let (code, _, err) = docle(&["docle", "--vars", "2", "(q)"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown variable"));
    assert_eq!(docle(&["docle", "--vars", "2", "(1)"]).0, 1);
    assert_eq!(docle(&["decompose", "--vars", "2", "(x*y)"]).0, 1);
    assert_eq!(docle(&["hilbert", "--vars", "2", "(x)"]).0, 1);
    assert_eq!(docle(&["docle", "(x)"]).0, 1);
    assert_eq!(docle(&["docle", "--vars", "2", "--vars-names", "a,b,c", "(a)"]).0, 1);
    assert_eq!(docle(&["--bogus"]).0, 2);
}
