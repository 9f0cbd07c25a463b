use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqschubert"))
        .args(args)
        .env_remove("SCHUBERT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn compute_examples() {
    assert_eq!(
        stdout(&["compute", "--type", "C", "--perm", "2 1 3"]),
        "Q[1] + z1 - t1"
    );
    assert_eq!(stdout(&["compute", "--type", "C", "--perm", "1 2 3"]), "1");
    assert_eq!(
        stdout(&["compute", "--type", "D", "--perm", "-2 -1 3"]),
        "P[1]"
    );
    assert_eq!(
        stdout(&["compute", "--type", "C", "--perm", "2 1 3", "--spec", "t0"]),
        "Q[1] + z1"
    );
    assert_eq!(
        stdout(&["compute", "--type", "C", "--perm", "3 2 1", "--spec", "x0t0"]),
        "Q[3] + Q[2,1]"
    );
    assert_eq!(
        stdout(&["compute", "--type", "A", "--perm", "3 1 2"]),
        "z1^2 - z1t1 - z1t2 + t1t2"
    );
}

#[test]
fn output_formats() {
    let json = stdout(&[
        "compute", "--type", "C", "--perm", "2 1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["type"], "C");
    assert_eq!(v["polynomial"]["flavor"], "Q");
    assert_eq!(v["polynomial"]["terms"].as_array().unwrap().len(), 2);
    let tex = stdout(&[
        "compute", "--type", "C", "--perm", "-2 -1 3", "--format", "latex",
    ]);
    assert_eq!(tex, "Q_{21}");
}

#[test]
fn localize_and_expand() {
    let h21 = stdout(&[
        "localize", "--type", "C", "--perm", "-2 -1 3", "--at", "-2 -1 3",
    ]);
    assert_eq!(h21, "4t1^2t2 + 4t1t2^2");
    assert_eq!(
        stdout(&["localize", "--type", "C", "--perm", "-2 1 3", "--at", "1 2 3"]),
        "0"
    );
    let e = stdout(&["expand", "--type", "C", "--expr", "Q[1]*Q[1]"]);
    assert_eq!(e, "2*S[-2 1 3] + 2t1*S[-1 2 3]");
    assert_eq!(
        stdout(&["expand", "--type", "C", "--expr", "z1"]),
        "-S[-1 2 3] + S[2 1 3] + t1*S[1 2 3]"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["compute", "--type", "D", "--perm", "-1 2 3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--type", "C", "--perm", "1 1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["expand", "--type", "C", "--expr", "Q[1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_golden() {
    assert_eq!(
        stdout(&["verify", "--suite", "golden-c3"]),
        "[golden-c3]\ngolden-c3: 48/48 rows match"
    );
    assert_eq!(
        stdout(&["verify", "--suite", "golden-d3"]),
        "[golden-d3]\ngolden-d3: 24/24 rows match"
    );
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = stdout(&["--cache-dir", d, "table", "--type", "D", "--n", "3"]);
    assert!(dir.path().join("d3.json").exists());
    let second = stdout(&["--cache-dir", d, "table", "--type", "D", "--n", "3"]);
    let fresh = stdout(&["table", "--type", "D", "--n", "3"]);
    assert_eq!(first, second);
    assert_eq!(first, fresh);
    assert_eq!(first.lines().count(), 24);
}
