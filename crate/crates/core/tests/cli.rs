use derangement_lab::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["derangement-lab"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn write_group(dir: &tempfile::TempDir, kind: &[&str], name: &str) -> String {
    let path = dir.path().join(name).to_string_lossy().into_owned();
    let mut args = vec!["construct"];
    args.extend_from_slice(kind);
    args.extend_from_slice(&["--out", &path]);
    assert_eq!(call(&args).0, EXIT_OK);
    path
}

#[test]
fn construct_examples() {
    let (code, out, _) = call(&["construct", "gq", "--q", "3"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(
        (
            v["degree"].as_u64(),
            v["order"].as_u64(),
            v["format"].as_u64()
        ),
        (Some(12), Some(72), Some(1))
    );
    let v = json(&call(&["construct", "fourell", "--ell", "5"]).1);
    assert_eq!(
        (v["degree"].as_u64(), v["order"].as_u64()),
        (Some(20), Some(160))
    );
    let (code, _, err) = call(&["construct", "fourell", "--ell", "4"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("ℓ must be odd"));
    let v = json(&call(&["construct", "agl2", "--q", "3"]).1);
    assert_eq!(v["order"].as_u64(), Some(432));
    let v = json(&call(&["construct", "cyclic", "--n", "7", "--with-elements"]).1);
    assert_eq!(v["elements"].as_array().map(Vec::len), Some(7));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["construct", "gq"]).0, EXIT_USAGE);
    assert_eq!(call(&["construct", "gq", "--q", "6"]).0, EXIT_USAGE);
    assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["analyze", "--group", "/nonexistent/file.json"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["construct", "gq", "--q", "7", "--max-order", "100"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn bad_group_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"name":"x","degree":3,"generators":[[1,1,2]]}"#).unwrap();
    let (code, _, err) = call(&["analyze", "--group", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("invalid group file"));
}

#[test]
fn analyze_examples() {
    let dir = tempfile::tempdir().unwrap();
    let e6 = write_group(&dir, &["example6"], "e6.json");
    let v = json(&call(&["analyze", "--group", &e6]).1);
    assert_eq!(
        (v["rho"]["num"].as_u64(), v["rho"]["den"].as_u64()),
        (Some(2), Some(1))
    );
    assert_eq!(
        (
            v["multipartite"]["parts"].as_u64(),
            v["multipartite"]["part_size"].as_u64()
        ),
        (Some(3), Some(4))
    );
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));

    let g2 = write_group(&dir, &["gq", "--q", "2"], "g2.json");
    let v = json(&call(&["analyze", "--group", &g2]).1);
    assert_eq!(v["rho"]["num"].as_u64(), Some(2));
    assert_eq!(v["multipartite"]["parts"].as_u64(), Some(3));

    let c5 = write_group(&dir, &["cyclic", "--n", "5"], "c5.json");
    let v = json(&call(&["analyze", "--group", &c5]).1);
    assert_eq!(
        (v["rho"]["num"].as_u64(), v["ekr"].as_bool()),
        (Some(1), Some(true))
    );

    let (code, csv, _) = call(&["analyze", "--group", &e6, "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("example6,6,12,2,4,3,2/1,false,"));
}

#[test]
fn verify_examples() {
    let v = json(&call(&["verify", "main", "--q", "4"]).1);
    assert_eq!(v["passed"], true);
    assert_eq!(
        (
            v["analysis"]["multipartite"]["parts"].as_u64(),
            v["analysis"]["multipartite"]["part_size"].as_u64()
        ),
        (Some(5), Some(48))
    );
    let (code, out, _) = call(&["verify", "fourell", "--ell", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        json(&out)["analysis"]["multipartite"]["parts"].as_u64(),
        Some(14)
    );

    let dir = tempfile::tempdir().unwrap();
    let e6 = write_group(&dir, &["example6"], "e6.json");
    let (code, out, _) = call(&["verify", "twop", "--group", &e6, "--p", "3"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["two_p"]["clique"].as_array().map(Vec::len), Some(3));
    assert_eq!(v["analysis"]["rho"]["num"].as_u64(), Some(2));
    assert_eq!(
        call(&["verify", "twop", "--group", &e6, "--p", "5"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["verify", "fourell", "--ell", "2"]).0, EXIT_USAGE);
}

#[test]
fn twop_accepts_bundled_pair_actions() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/");
    for f in ["alt5_pairs.json", "sym5_pairs.json"] {
        let (code, out, _) = call(&[
            "verify",
            "twop",
            "--group",
            &format!("{data}{f}"),
            "--p",
            "5",
        ]);
        assert_eq!(code, EXIT_OK, "{f}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn exports() {
    let (code, csv, _) = call(&["export", "lines", "--q", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(csv.lines().count(), 1 + 6);
    assert_eq!(csv.lines().nth(1), Some("0,0,0,0:0 1:0"));

    let dir = tempfile::tempdir().unwrap();
    let e6 = write_group(&dir, &["example6"], "e6.json");
    let (code, dot, _) = call(&["export", "dot", "--group", &e6, "--parts"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(dot.matches(" -- ").count(), 12 * 8 / 2);
    let bitmap = dir.path().join("g.bin");
    assert_eq!(
        call(&[
            "export",
            "bitmap",
            "--group",
            &e6,
            "--out",
            bitmap.to_str().unwrap()
        ])
        .0,
        EXIT_OK
    );
    let bytes = std::fs::read(&bitmap).unwrap();
    assert_eq!(&bytes[..8], &[8, 0, 0, 0, 12, 0, 0, 0]);
}

#[test]
fn binary_reports_are_reproducible() {
    let bin = env!("CARGO_BIN_EXE_derangement-lab");
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            let out = std::process::Command::new(bin)
                .args(["verify", "fourell", "--ell", "5"])
                .env("DERANGEMENT_LAB_THREADS", "1")
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let many = std::process::Command::new(bin)
        .args(["verify", "fourell", "--ell", "5"])
        .env("DERANGEMENT_LAB_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(many.stdout, runs[0]);
    let bad = std::process::Command::new(bin)
        .args(["construct", "example6"])
        .env("DERANGEMENT_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
