//! End-to-end tests of the mdsforge binary: exit codes, the JSON schema,
//! determinism across thread counts, the matrix file format and searches.

use std::collections::BTreeSet;
use std::process::{Command, Output};

fn mdsforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdsforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_gf17_instance_passes() {
    let out = mdsforge(&[
        "check",
        "--field",
        "17",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "0,2,3,4,5,7,9,10",
        "--cross-check",
        "mds",
        "nongrs",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("PASS mds"), "{text}");
    assert!(text.contains("PASS nongrs"), "{text}");
}

#[test]
fn check_gf32_so_certificate_via_f_only() {
    let lambda = "w^1,w^2,w^3,w^4,w^5,w^6,w^10,w^13,w^17,w^21,w^26";
    let out = mdsforge(&[
        "check",
        "--field",
        "2^5:1,0,1,0,0,1",
        "--family",
        "f1",
        "--k",
        "5",
        "--lambda",
        lambda,
        "--f",
        "x",
        "so",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("PASS so"));
}

#[test]
fn check_failing_instance_exits_one_with_witness() {
    let out = mdsforge(&[
        "check",
        "--field",
        "7",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "1,2,3,4,5",
        "mds",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL mds"), "{text}");
    assert!(
        text.contains('4'),
        "witness should name the failing subset: {text}"
    );
}

#[test]
fn invalid_inputs_exit_three() {
    // Duplicate evaluation points.
    let out = mdsforge(&[
        "check",
        "--field",
        "7",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "1,1,2,3,4",
        "mds",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // Unknown catalog id.
    let out = mdsforge(&["reproduce", "bogus-id"]);
    assert_eq!(out.status.code(), Some(3));
    // Unparseable element.
    let out = mdsforge(&[
        "check",
        "--field",
        "7",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "1,2,zebra",
        "mds",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    let out = mdsforge(&["check", "--field", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mdsforge(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_four() {
    let out = mdsforge(&[
        "check",
        "--field",
        "17",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "0,2,3,4,5,7,9,10",
        "--subset-budget",
        "5",
        "mds",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn json_schema_and_thread_determinism() {
    let args = [
        "--format",
        "json",
        "check",
        "--field",
        "17",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "0,2,3,4,5,7,9,10",
        "mds",
        "nongrs",
        "schur",
        "dist",
    ];
    let mut with_threads1: Vec<&str> = vec!["--threads", "1"];
    with_threads1.extend_from_slice(&args);
    let out1 = mdsforge(&with_threads1);
    assert_eq!(out1.status.code(), Some(0));
    let mut with_threads4: Vec<&str> = vec!["--threads", "4"];
    with_threads4.extend_from_slice(&args);
    let out4 = mdsforge(&with_threads4);
    assert_eq!(out4.status.code(), Some(0));
    assert_eq!(
        stdout(&out1),
        stdout(&out4),
        "JSON output must be byte-identical across thread counts"
    );

    let doc: serde_json::Value = serde_json::from_str(&stdout(&out1)).expect("valid JSON");
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["field"], "17");
    assert_eq!(doc["code"]["n"], 8);
    assert_eq!(doc["code"]["k"], 3);
    assert_eq!(doc["code"]["exponents"], serde_json::json!([0, 3, 4]));
    assert_eq!(doc["checks"]["mds"]["verdict"], true);
    assert_eq!(doc["checks"]["nongrs"]["verdict"], true);
    assert_eq!(doc["checks"]["schur"]["quantity"]["value"], 6);
    assert_eq!(doc["checks"]["dist"]["quantity"]["value"], 6);
    // Timings are opt-in, so the default document stays deterministic.
    assert!(doc["checks"]["mds"].get("elapsed_ms").is_none());
}

#[test]
fn build_writes_matrix_file_and_min_distance_reads_it() {
    let dir = std::env::temp_dir().join(format!("mdsforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gf17.mat");
    let out = mdsforge(&[
        "build",
        "--field",
        "17",
        "--family",
        "f1",
        "--k",
        "3",
        "--lambda",
        "0,2,3,4,5,7,9,10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("field=17 k=3 n=8"));
    assert!(text.lines().count() >= 4);

    let out = mdsforge(&["min-distance", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[8,3,6]"), "{}", stdout(&out));

    let out = mdsforge(&["check", "--matrix", path.to_str().unwrap(), "mds", "sd"]);
    assert_eq!(out.status.code(), Some(1)); // mds passes, sd fails (n != 2k)
    let textual = stdout(&out);
    assert!(textual.contains("PASS mds"));
    assert!(textual.contains("FAIL sd"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reproduce_quick_entry_passes() {
    let out = mdsforge(&["--format", "json", "reproduce", "f1-gf17-k3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let claims = doc["reports"][0]["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn reproduce_gf37_reports_refuted_catalogued_claim() {
    let out = mdsforge(&["reproduce", "f2-gf37-h21"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(
        text.contains("[PASS] MDS by the subset criterion"),
        "{text}"
    );
    assert!(text.contains("[FAIL] non-GRS as catalogued"), "{text}");
    assert!(text.contains("REFUTED"), "{text}");
}

#[test]
fn search_self_dual_family1_finds_catalogued_set() {
    // Exhaustive over C(16,10) = 8008 candidate sets; the catalogued set
    // {w, w^2, w^4, w^5, w^7, w^8, w^10, w^11, w^13, w^14} must appear.
    let out = mdsforge(&[
        "--format", "json", "search", "sd", "--field", "2^4", "--family", "f1", "--k", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expect: BTreeSet<&str> = [
        "w", "w^2", "w^4", "w^5", "w^7", "w^8", "w^10", "w^11", "w^13", "w^14",
    ]
    .into_iter()
    .collect();
    let mut seen = false;
    for line in stdout(&out).lines() {
        let doc: serde_json::Value = serde_json::from_str(line).expect("JSON line");
        let set: BTreeSet<&str> = doc["lambda"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        if set == expect {
            seen = true;
            break;
        }
    }
    assert!(
        seen,
        "catalogued evaluation set not found among search results"
    );
}

#[test]
fn search_self_dual_family2_r2_is_empty_and_budget_zero_is_empty() {
    let out = mdsforge(&[
        "--format", "json", "search", "sd", "--field", "17", "--family", "f2", "--k", "4", "--r",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).trim().is_empty(),
        "r = 2 never yields self-dual instances"
    );

    let out = mdsforge(&[
        "--format", "json", "search", "sd", "--field", "2^4", "--family", "f1", "--k", "5",
        "--budget", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim().is_empty());
}

#[test]
fn search_is_deterministic_given_seed() {
    let args = [
        "--format", "json", "search", "so", "--field", "23", "--family", "f1", "--k", "3", "--n",
        "9", "--budget", "300", "--seed", "7", "--limit", "3",
    ];
    let a = mdsforge(&args);
    let b = mdsforge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn field_info_reports_modulus() {
    let out = mdsforge(&["field-info", "--field", "2^5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("GF(32)"), "{text}");
    assert!(text.contains("[1, 0, 1, 0, 0, 1]"), "{text}");
}
