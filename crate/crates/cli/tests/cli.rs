//! End-to-end tests of the `meanforge` binary: output schemas, exit codes,
//! determinism, and JSON/CSV record equality.

use std::process::{Command, Output};

fn meanforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meanforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = meanforge(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn coeffs_symbolic_lc_table() {
    let v = stdout_json(&["coeffs", "--m0", "Lc-sym", "--order", "6"]);
    let coeffs = v["series"][0]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 7);
    assert_eq!(coeffs[0], "1");
    assert_eq!(coeffs[1], "c");
    assert_eq!(coeffs[2], "-c^2 - c^3");
    assert_eq!(
        coeffs[6],
        "-42*c^6 - 210*c^7 - 420*c^8 - 420*c^9 - 210*c^10 - 42*c^11"
    );
    assert_eq!(v["series"][0]["mode"], "symbolic");
}

#[test]
fn coeffs_arithmetic_s_negates_probe() {
    let v = stdout_json(&["coeffs", "--m0", "A", "--which", "s", "--order", "3"]);
    let coeffs: Vec<&str> = v["series"][0]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-a1", "-a2", "-a3"]);
}

#[test]
fn coeffs_sigma_of_geometric() {
    // σ_G(M) = G²/M: b_1^σ = 2c_1 - a_1 = -1 - a1
    let v = stdout_json(&["coeffs", "--m0", "G", "--which", "sigma", "--order", "4"]);
    let coeffs = v["series"][0]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[1], "-1 - a1");
    assert_eq!(v["series"][0]["role"], "sigma");
}

#[test]
fn coeffs_numeric_pair_and_file_round_trip() {
    let v = stdout_json(&["coeffs", "--m0", "G", "--order", "4"]);
    let dir = std::env::temp_dir().join("meanforge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g_series.json");
    std::fs::write(&path, serde_json::to_string(&v["series"][0]).unwrap()).unwrap();

    let file_sel = format!("file:{}", path.display());
    let direct = stdout_json(&[
        "coeffs", "--m0", "G", "--m1", "A", "--which", "both", "--order", "4",
    ]);
    let via_file = stdout_json(&[
        "coeffs", "--m0", &file_sel, "--m1", "A", "--which", "both", "--order", "4",
    ]);
    assert_eq!(direct["series"], via_file["series"]);
}

#[test]
fn coeffs_rejects_symbolic_order_overflow() {
    let out = meanforge(&["coeffs", "--m0", "Lc-sym", "--order", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn symmetry_point_evaluations() {
    let v = stdout_json(&[
        "symmetry", "--m0", "G", "--m1", "A", "--op", "s", "--a", "1", "--b", "4",
    ]);
    assert!((v["value"].as_f64().unwrap() - 1.6).abs() < 1e-12);

    let v = stdout_json(&[
        "symmetry", "--m0", "A", "--m1", "G", "--op", "sigma", "--a", "1", "--b", "4",
    ]);
    assert!((v["value"].as_f64().unwrap() - 3.0).abs() < 1e-10);

    let v = stdout_json(&[
        "symmetry", "--m0", "G", "--m1", "G", "--op", "star", "--a", "1", "--b", "4",
    ]);
    assert!((v["value"].as_f64().unwrap() - 1.6).abs() < 1e-12);

    let v = stdout_json(&[
        "symmetry", "--m0", "G", "--op", "phi", "--a", "1", "--b", "4",
    ]);
    assert!((v["value"].as_f64().unwrap() - 0.5f64.ln()).abs() < 1e-14);
}

#[test]
fn eval_special_case() {
    let v = stdout_json(&["eval", "--mean", "Lc:0", "--a", "1", "--b", "3"]);
    assert_eq!(v["value"].as_f64().unwrap(), 2.0);
}

#[test]
fn discover_matches_hypothesis() {
    let v = stdout_json(&["discover", "--order", "3"]);
    assert_eq!(v["matches_hypothesis"], true);
    assert_eq!(v["solved"][2], "-c^2 - c^3");
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn discover_order_six_reproduces_the_table() {
    // the full Catalan-patterned table, exactly, through the CLI surface
    let v = stdout_json(&["discover", "--order", "6"]);
    assert_eq!(v["matches_hypothesis"], true);
    let solved: Vec<&str> = v["solved"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert_eq!(
        solved,
        [
            "1",
            "c",
            "-c^2 - c^3",
            "2*c^3 + 4*c^4 + 2*c^5",
            "-5*c^4 - 15*c^5 - 15*c^6 - 5*c^7",
            "14*c^5 + 56*c^6 + 84*c^7 + 56*c^8 + 14*c^9",
            "-42*c^6 - 210*c^7 - 420*c^8 - 420*c^9 - 210*c^10 - 42*c^11",
        ]
    );
}

#[test]
fn discover_rejects_out_of_range_order() {
    let out = meanforge(&["discover", "--order", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_mean_is_usage_error() {
    let out = meanforge(&["eval", "--mean", "Q", "--a", "1", "--b", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown mean"));
}

const FAST_VERIFY: &[&str] = &[
    "verify",
    "--grid",
    "1,2,5",
    "--samples",
    "300",
    "--order",
    "4",
];

#[test]
fn verify_passes_and_is_byte_deterministic() {
    let first = meanforge(FAST_VERIFY);
    assert!(
        first.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    let second = meanforge(FAST_VERIFY);
    assert_eq!(first.stdout, second.stdout);

    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["overall_pass"], true);
    assert_eq!(report["seed"], 42);
    assert!(report["records"].as_array().unwrap().len() >= 20);

    // a thread cap must not change the bytes
    let capped = Command::new(env!("CARGO_BIN_EXE_meanforge"))
        .args(FAST_VERIFY)
        .env("MEANFORGE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, capped.stdout);
}

#[test]
fn verify_zero_tolerance_fails_with_exit_one() {
    let mut args = FAST_VERIFY.to_vec();
    args.extend(["--tol", "0"]);
    let out = meanforge(&args);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["overall_pass"], false);
}

#[test]
fn csv_and_json_encode_the_same_records() {
    // verify: records table
    let json_out = meanforge(FAST_VERIFY);
    let mut args = FAST_VERIFY.to_vec();
    args.push("--csv");
    let csv_out = meanforge(&args);
    let report: serde_json::Value = serde_json::from_slice(&json_out.stdout).unwrap();
    let csv_text = String::from_utf8(csv_out.stdout).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(lines.next(), Some("name,max_residual,threshold,pass"));
    let records = report["records"].as_array().unwrap();
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), records.len());
    for (row, record) in rows.iter().zip(records) {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[0], record["name"].as_str().unwrap());
        assert_eq!(
            cells[1].parse::<f64>().unwrap(),
            record["max_residual"].as_f64().unwrap()
        );
        assert_eq!(
            cells[3].parse::<bool>().unwrap(),
            record["pass"].as_bool().unwrap()
        );
    }

    // discover: step records
    let dj: serde_json::Value =
        serde_json::from_slice(&meanforge(&["discover", "--order", "3"]).stdout).unwrap();
    let dc = String::from_utf8(meanforge(&["discover", "--order", "3", "--csv"]).stdout).unwrap();
    let mut lines = dc.lines();
    assert_eq!(lines.next(), Some("n,difference,condition,solved"));
    for (line, step) in lines.zip(dj["steps"].as_array().unwrap()) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(
            cells[0].parse::<u64>().unwrap(),
            step["n"].as_u64().unwrap()
        );
        assert_eq!(cells[3], step["solved"].as_str().unwrap());
    }
}

#[test]
fn json_and_csv_flags_conflict() {
    let out = meanforge(&[
        "eval", "--mean", "A", "--a", "1", "--b", "2", "--json", "--csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
