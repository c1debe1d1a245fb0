use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tilecohom(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tilecohom"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn on(cmd: &str, file: &str, extra: &[&str]) -> Run {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    tilecohom(&args)
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), contents).unwrap();
    f
}

#[test]
fn cohomology_of_surfaces() {
    let r = on("cohomology", "circle.json", &[]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "H0: Z\nH1: Z\nH2: 0\n"));
    let r = on("cohomology", "rp2.json", &[]);
    assert!(r.stdout.contains("H2: Z/2\n"));
    let r = on("cohomology", "klein.json", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["H1"], "Z");
    assert_eq!(v["H2"], "Z/2");
    assert!(v["maps"].is_null());
}

#[test]
fn validate_exit_codes() {
    assert_eq!(on("validate", "torus.json", &[]).stdout, "valid\n");
    let r = on("validate", "sphere_broken.json", &[]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "violation: B1*A0 = A0 fails at column 0\n");
    let r = on("validate", "sphere_broken.json", &["--json", "--quiet"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, ""));

    let bad = temp_file(
        r#"{"vertices": 1, "edges": 2, "faces": 1, "d1": [[0, 0]], "d2": [[0], [0], [0]]}"#,
    );
    let r = tilecohom(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error: field `d2`: expected 2 rows, found 3\n");

    let broken = temp_file("{\n  \"vertices\": 1,\n  \"edges\": }\n");
    let r = tilecohom(&["validate", broken.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: line 3 column"), "{}", r.stderr);

    let r = tilecohom(&["validate", "/definitely/not/here.json"]);
    assert_eq!(r.code, 2);
}

#[test]
fn cohomology_rejects_invalid_complexes() {
    // d1 d2 != 0
    let bad =
        temp_file(r#"{"vertices": 2, "edges": 1, "faces": 1, "d1": [[-1], [1]], "d2": [[1]]}"#);
    let r = tilecohom(&["cohomology", bad.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("d1*d2 = 0 fails at column 0"),
        "{}",
        r.stderr
    );
}

#[test]
fn hull_reports() {
    let r = on("hull", "torus_identity.json", &[]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("H0(Omega): Z\nH1(Omega): Z^2\nH2(Omega): Z\nK0: Z^2\nK1: Z^2\n"));
    let r = on("hull", "torus_scaled.json", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["H2"], "Z[1/6]");
    assert_eq!(v["K0"], "Z[1/6] ⊕ Z");
    assert_eq!(v["primitive"], true);
    assert_eq!(v["witness_power"], 1);
    assert_eq!(on("hull", "sphere_broken.json", &[]).code, 1);
    assert_eq!(on("hull", "torus.json", &[]).code, 1);
    // identity on RP2 keeps torsion alive
    let rp2 = temp_file(
        r#"{"vertices": 1, "edges": 1, "faces": 1, "d1": [[0]], "d2": [[2]], "gamma1": [[1]], "gamma2": [[1]]}"#,
    );
    let r = tilecohom(&["hull", rp2.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("torsion"), "{}", r.stderr);
}

#[test]
fn hull_with_unclassified_limit() {
    // torus with edge map [[2, 1], [1, 1]] (no integer eigenvalues), face map det = 1
    let f = temp_file(
        r#"{"vertices": 1, "edges": 2, "faces": 1, "d1": [[0, 0]], "d2": [[0], [0]],
            "gamma1": [[2, 1], [1, 1]], "gamma2": [[1]]}"#,
    );
    let r = tilecohom(&["hull", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("H1(Omega) is not a supported limit"),
        "{}",
        r.stderr
    );
    assert!(r.stderr.contains("det A' = 1"), "{}", r.stderr);
}

#[test]
fn matrix_commands() {
    assert_eq!(on("dirlim", "example_a.txt", &[]).stdout, "Z[1/6] ⊕ Z^4\n");
    assert_eq!(on("dirlim", "nilpotent.txt", &[]).stdout, "0\n");
    let r = on("snf", "identity3.txt", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["D"], serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
    let r = on("snf", "b2_prime.json", &[]);
    assert!(
        r.stdout
            .ends_with("rank: 5\ninvariant factors: 1 1 1 1 2\n"),
        "{}",
        r.stdout
    );
    let m = temp_file("2 2\n4 0\n0 x\n");
    let r = tilecohom(&["snf", m.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error: line 3: invalid integer \"x\"\n");
    // non-square input to dirlim is a mathematical failure, not a parse error
    let m = temp_file("1 2\n1 2\n");
    assert_eq!(tilecohom(&["dirlim", m.path().to_str().unwrap()]).code, 1);
    let r = on("dirlim", "b2_prime.json", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["classified"], true);
}

#[test]
fn unknown_arguments_are_usage_errors() {
    assert_eq!(tilecohom(&["frobnicate"]).code, 2);
    assert_eq!(tilecohom(&[]).code, 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = on("hull", "torus_scaled.json", &["--json"]);
    let b = on("hull", "torus_scaled.json", &["--json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = on("snf", "b2_prime.json", &[]);
    let b = on("snf", "b2_prime.json", &[]);
    assert_eq!(a.stdout, b.stdout);
}
