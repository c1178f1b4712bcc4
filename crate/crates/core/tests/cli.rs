use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run<I, S>(args: I) -> Run
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let out = Command::new(env!("CARGO_BIN_EXE_macwilliams")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", r.stdout))
}

#[test]
fn info_reports_type_and_filtration() {
    let r = run(["info".as_ref(), fixture("z16_diag.json").as_os_str()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("type (4;1,1,1,1), |C|=1024, |B|=[1,15,112,384,512]"), "{}", r.stdout);

    let r = run(["--json".as_ref(), "info".as_ref(), fixture("z16_one_eight.json").as_os_str()]);
    let v = json(&r);
    assert_eq!(v["size"], 16);
    assert_eq!(v["b_sizes"], serde_json::json!([1, 1, 2, 4, 8]));
    assert_eq!(v["type"]["k"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn enum_prints_crw() {
    let r = run(["enum".as_ref(), "--weight".as_ref(), "crw".as_ref(), fixture("z16_one_eight.json").as_os_str()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "x0^2 + x0*x1 + 2*x0*x2 + 4*x0*x3 + 8*x1*x4");
}

#[test]
fn macwilliams_verifies_and_exit_zero() {
    for weight in ["cwe", "hamming", "symmetric", "crw", "ocrw"] {
        let r = run(["macwilliams".as_ref(), "--weight".as_ref(), weight.as_ref(), fixture("z16_one_eight.json").as_os_str()]);
        assert_eq!(r.code, 0, "{weight}: {}{}", r.stdout, r.stderr);
        assert!(r.stdout.contains("VERIFIED"), "{weight}: {}", r.stdout);
    }
    let r = run([
        "--json".as_ref(),
        "macwilliams".as_ref(),
        "--weight".as_ref(),
        "crw".as_ref(),
        fixture("z16_one_eight.json").as_os_str(),
    ]);
    assert_eq!(json(&r)["verified"], true);
}

#[test]
fn incompatible_custom_partition_exits_one() {
    let r = run([
        "macwilliams".as_ref(),
        "--classes".as_ref(),
        fixture("z6_partition.json").as_os_str(),
        fixture("z6_code.json").as_os_str(),
    ]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("IncompatiblePartition"), "{}", r.stdout);
}

#[test]
fn partition_with_nonsymmetric_duality() {
    let r = run([
        "--json".as_ref(),
        "partition".as_ref(),
        "--kind".as_ref(),
        "hamming".as_ref(),
        fixture("f4_alphabet.json").as_os_str(),
        "--duality".as_ref(),
        fixture("f4_nonsymmetric_duality.json").as_os_str(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["krawtchouk"], serde_json::json!([[1, 3], [1, -1]]));
    assert_eq!(v["autodual"], true);
}

#[test]
fn scrambled_duality_is_an_input_error() {
    let r = run([
        "partition".as_ref(),
        "--kind".as_ref(),
        "hamming".as_ref(),
        fixture("z4_alphabet.json").as_os_str(),
        "--duality".as_ref(),
        fixture("z4_scrambled_duality.json").as_os_str(),
    ]);
    assert_eq!(r.code, 2, "{}", r.stdout);
}

#[test]
fn gray_image_of_one_eight() {
    let r = run(["gray".as_ref(), fixture("z16_one_eight.json").as_os_str()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("VERIFIED"), "{}", r.stdout);
}

#[test]
fn output_is_identical_across_job_counts() {
    let cases: Vec<Vec<String>> = vec![
        vec!["info".into(), fixture("z16_diag.json").display().to_string()],
        vec!["enum".into(), "--weight".into(), "crw".into(), fixture("z16_diag.json").display().to_string()],
        vec!["macwilliams".into(), fixture("f4_example.json").display().to_string()],
        vec!["dual".into(), "--emit".into(), "codewords".into(), fixture("z4_symmetric_example.json").display().to_string()],
        vec!["gray".into(), "--emit-gray".into(), fixture("z16_one_eight.json").display().to_string()],
    ];
    for args in cases {
        for json in [false, true] {
            let mut outs = Vec::new();
            for jobs in ["1", "4"] {
                let mut full: Vec<String> = Vec::new();
                if json {
                    full.push("--json".into());
                }
                full.extend(["--jobs".into(), jobs.into()]);
                full.extend(args.iter().cloned());
                let r = run(&full);
                assert_eq!(r.code, 0, "{full:?}: {}", r.stderr);
                outs.push(r.stdout);
            }
            assert_eq!(outs[0], outs[1], "{args:?}");
        }
    }
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(&dir, "bad.json", "{ not json");
    let unknown = write(&dir, "unknown.json", r#"{"alphabet": {"kind": "zn", "n": 4}, "kind": "linear", "generators": [[1]], "extra": 1}"#);
    let out_of_range = write(&dir, "range.json", r#"{"alphabet": {"kind": "zn", "n": 4}, "kind": "linear", "generators": [[7]]}"#);
    let ragged = write(&dir, "ragged.json", r#"{"alphabet": {"kind": "zn", "n": 4}, "kind": "linear", "generators": [[1], [1, 2]]}"#);
    let linear_group = write(&dir, "group.json", r#"{"alphabet": {"kind": "group", "orders": [2, 2]}, "kind": "linear", "generators": [[1]]}"#);
    let missing = dir.path().join("missing.json");
    for path in [&bad_json, &unknown, &out_of_range, &ragged, &linear_group, &missing] {
        let r = run(["info".as_ref(), path.as_os_str()]);
        assert_eq!(r.code, 2, "{}: {}", path.display(), r.stdout);
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_two() {
    let code = fixture("z16_one_eight.json");
    let non_chain = fixture("z6_code.json");
    let cases: Vec<Vec<&std::ffi::OsStr>> = vec![
        vec!["frobnicate".as_ref()],
        vec!["enum".as_ref(), "--lambda".as_ref(), "3".as_ref(), code.as_os_str()],
        vec!["enum".as_ref(), "--weight".as_ref(), "lambda".as_ref(), "--mode".as_ref(), "single".as_ref(), code.as_os_str()],
        vec!["enum".as_ref(), "--weight".as_ref(), "crw".as_ref(), non_chain.as_os_str()],
        vec!["gray".as_ref(), non_chain.as_os_str()],
        vec!["--max-words".as_ref(), "4".as_ref(), "info".as_ref(), code.as_os_str()],
        vec!["--max-space".as_ref(), "10".as_ref(), "dual".as_ref(), code.as_os_str()],
    ];
    for args in cases {
        let r = run(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
    }
}

#[test]
fn generated_code_file_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "z9.json",
        r#"{"alphabet": {"kind": "zn", "n": 9}, "kind": "linear", "generators": [[1, 3, 0], [0, 3, 3]]}"#,
    );
    let r = run(["--json".as_ref(), "dual".as_ref(), "--emit".as_ref(), "generators".as_ref(), path.as_os_str()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    let dual_path = dir.path().join("dual.json");
    let gens = v["generators"].clone();
    let body = serde_json::json!({"alphabet": {"kind": "zn", "n": 9}, "kind": "linear", "generators": gens, "length": 3});
    std::fs::write(&dual_path, body.to_string()).unwrap();
    let r = run(["macwilliams".as_ref(), "--weight".as_ref(), "crw".as_ref(), dual_path.as_os_str()]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("VERIFIED"));
}
