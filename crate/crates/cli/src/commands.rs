use serde_json::{json, Value};
use tuenter_core::{
    catalan_triangle, check_conjecture, coeff_table, cross_check_c2, f_polynomial, run_sweep,
    tuenter_poly, CoreError, Poly, SweepConfig, SweepReport,
};

use crate::record::{num, nums, Kind, OutputRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    Monomial,
    Falling,
}

fn poly_fields(rec: OutputRecord, prefix: &str, p: &Poly, var: &str) -> OutputRecord {
    rec.field(&format!("{prefix}coefficients"), nums(p.coeffs()))
        .field(
            &format!("{prefix}display"),
            Value::String(p.display_with(var)),
        )
}

pub fn poly(k: usize, basis: Basis) -> OutputRecord {
    let p = tuenter_poly(k);
    let rec = OutputRecord::new(Kind::Poly).field("k", num(k));
    match basis {
        Basis::Monomial => poly_fields(rec.field("basis", json!("monomial")), "", &p, "n"),
        Basis::Falling => rec
            .field("basis", json!("falling"))
            .field("coefficients", nums(p.to_falling_basis())),
    }
}

pub fn coeffs(max_k: usize) -> Result<OutputRecord, CoreError> {
    let table = coeff_table(max_k)?;
    let rows: Vec<Value> = table.rows.iter().map(|r| nums(&r.values)).collect();
    Ok(OutputRecord::new(Kind::Coeffs)
        .field("max_k", num(max_k))
        .field("rows", Value::Array(rows)))
}

pub fn triangle(rows: u64) -> Result<OutputRecord, CoreError> {
    let tri = catalan_triangle(rows)?;
    let rows_json: Vec<Value> = tri
        .iter()
        .map(|row| nums(row.iter().map(|e| &e.value)))
        .collect();
    Ok(OutputRecord::new(Kind::Triangle)
        .field("rows", num(rows))
        .field("values", Value::Array(rows_json)))
}

pub fn verify(config: &SweepConfig) -> Result<(OutputRecord, SweepReport), CoreError> {
    let report = run_sweep(config)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "cases": c.cases.to_string(), "passed": c.passed}))
        .collect();
    let rec = OutputRecord::new(Kind::SumCheck)
        .field("max_k", num(config.max_k))
        .field("max_n", num(config.max_n))
        .field("checks", Value::Array(checks))
        .field("passed", Value::Bool(report.passed()))
        .field(
            "first_failure",
            report
                .first_failure
                .clone()
                .map_or(Value::Null, Value::String),
        );
    Ok((rec, report))
}

pub fn fpoly(k: usize, conjecture: bool) -> Result<OutputRecord, CoreError> {
    if !conjecture {
        let rec = OutputRecord::new(Kind::Fpoly).field("k", num(k));
        return Ok(poly_fields(rec, "", &f_polynomial(k), "j"));
    }
    let r = check_conjecture(k)?;
    let mut rec = OutputRecord::new(Kind::Conjecture).field("k", num(k));
    rec = poly_fields(rec, "", &r.f_poly, "j");
    rec = poly_fields(rec, "product_factor_", &r.product_factor, "j");
    rec = match &r.tilde_poly {
        Some(t) => poly_fields(rec, "tilde_", t, "j"),
        None => rec
            .field("tilde_coefficients", Value::Null)
            .field("tilde_display", Value::Null),
    };
    Ok(rec
        .field("divides_exactly", Value::Bool(r.divides_exactly))
        .field("tilde_degree", r.tilde_degree.map_or(Value::Null, num))
        .field(
            "tilde_at_one",
            r.tilde_at_one.as_ref().map_or(Value::Null, num),
        )
        .field("expected_tilde_at_one", num(&r.expected_tilde_at_one))
        .field("conjecture_holds", Value::Bool(r.conjecture_holds)))
}

pub fn grs(limit: u64) -> Result<OutputRecord, CoreError> {
    let check = cross_check_c2(limit)?;
    let checked: Vec<Value> = check
        .checked
        .iter()
        .map(|c| {
            json!({
                "k": c.k.to_string(),
                "value": c.value.to_string(),
                "is_local_max": c.is_local_max,
                "is_record": c.is_record,
            })
        })
        .collect();
    Ok(OutputRecord::new(Kind::Grs)
        .field("limit", num(limit))
        .field("strict_local_maxima", nums(&check.scan.strict_local_maxima))
        .field("record_positions", nums(&check.scan.record_positions))
        .field("c2_checked", Value::Array(checked))
        .field("cross_check", Value::Bool(check.holds)))
}
