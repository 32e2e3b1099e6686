use std::process::{Command, Output};

use num_bigint::BigInt;
use serde_json::Value;
use tuenter_core::coeff_table;

fn tuenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tuenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = tuenter(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    assert_eq!(text.matches('\n').count(), 1, "one record per invocation");
    serde_json::from_str(&text).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn poly_falling_k5() {
    let v = json(&["poly", "--k", "5", "--basis", "falling"]);
    assert_eq!(v["kind"], "poly");
    assert_eq!(
        strings(&v["coefficients"]),
        ["0", "1", "170", "882", "720", "120"]
    );
}

#[test]
fn poly_monomial() {
    let v = json(&["poly", "--k", "0"]);
    assert_eq!(strings(&v["coefficients"]), ["1"]);
    let v = json(&["poly", "--k", "4", "--basis", "monomial"]);
    assert_eq!(strings(&v["coefficients"]), ["0", "-17", "54", "-60", "24"]);
}

#[test]
fn format_flag_position_is_free() {
    let a = tuenter(&["--format", "text", "poly", "--k", "2"]);
    let b = tuenter(&["poly", "--k", "2", "--format", "text"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout)
        .unwrap()
        .contains("display: 2*n^2 - n\n"));
}

#[test]
fn csv_output() {
    let out = tuenter(&["poly", "--k", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("field,value\nkind,poly\nk,3\n"));
    assert!(text.contains("coefficients[3],6\n"));
}

#[test]
fn coeffs_round_trip_large_integers() {
    let v = json(&["coeffs", "--max-k", "30"]);
    let table = coeff_table(30).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    for (row, expected) in rows.iter().zip(&table.rows) {
        let parsed: Vec<BigInt> = strings(row).iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(parsed, expected.values);
    }
    // c_{15,30} has well over 20 digits.
    assert!(strings(&rows[29])[14].len() > 20);
}

#[test]
fn triangle_rows() {
    let v = json(&["triangle", "--rows", "6"]);
    assert_eq!(v["kind"], "triangle");
    let rows = v["values"].as_array().unwrap();
    assert_eq!(strings(&rows[3]), ["14", "14", "6", "1"]);
    assert_eq!(strings(&rows[5])[0], "132");
}

#[test]
fn verify_passes() {
    for (k, n) in [("10", "50"), ("1", "1")] {
        let out = tuenter(&["verify", "--max-k", k, "--max-n", n]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["kind"], "sum_check");
        assert_eq!(v["passed"], true);
        assert!(v["first_failure"].is_null());
    }
}

#[test]
fn verify_negative_control() {
    let out = tuenter(&["verify", "--max-k", "4", "--max-n", "4", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["first_failure"].as_str().unwrap().contains("c_{1,4}"));
}

#[test]
fn fpoly_plain() {
    let v = json(&["fpoly", "--k", "1"]);
    assert_eq!(v["kind"], "fpoly");
    assert_eq!(strings(&v["coefficients"]), ["0", "1/6", "1/2", "1/3"]);
    let v = json(&["fpoly", "--k", "0"]);
    assert_eq!(strings(&v["coefficients"]), ["1"]);
}

#[test]
fn fpoly_conjecture() {
    let v = json(&["fpoly", "--k", "2", "--check-conjecture"]);
    assert_eq!(v["kind"], "conjecture");
    assert_eq!(v["divides_exactly"], true);
    assert_eq!(v["tilde_degree"], "1");
    assert_eq!(v["tilde_at_one"], "1/90");
    assert_eq!(v["expected_tilde_at_one"], "1/90");
    assert_eq!(v["conjecture_holds"], true);
}

#[test]
fn grs_cross_check() {
    let values = |v: &Value| -> Vec<String> {
        v["c2_checked"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["value"].as_str().unwrap().to_string())
            .collect()
    };
    let v = json(&["grs", "--limit", "50"]);
    assert_eq!(v["cross_check"], true);
    assert_eq!(values(&v), ["2", "10", "42"]);
    let v = json(&["grs", "--limit", "3"]);
    assert_eq!(v["cross_check"], true);
    assert_eq!(values(&v), ["2"]);
    let v = json(&["grs", "--limit", "3000"]);
    assert_eq!(v["cross_check"], true);
    assert_eq!(values(&v), ["2", "10", "42", "170", "682", "2730"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["poly", "--k", "-1"],
        vec!["poly", "--k", "2", "--basis", "stirling"],
        vec!["poly", "--k", "2", "--format", "xml"],
        vec!["grs", "--limit", "2"],
        vec!["verify", "--max-k", "0", "--max-n", "5"],
        vec!["coeffs", "--max-k", "0"],
        vec!["fpoly", "--k", "0", "--check-conjecture"],
        vec!["bogus"],
    ] {
        assert_eq!(tuenter(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["coeffs", "--max-k", "12"][..],
        &["fpoly", "--k", "3", "--check-conjecture", "--format", "csv"][..],
        &["grs", "--limit", "500", "--format", "text"][..],
    ] {
        assert_eq!(tuenter(args).stdout, tuenter(args).stdout);
    }
}
