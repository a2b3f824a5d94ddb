//! Assembly and rendering of the `check` and `basis` reports, plus the
//! JSON encoding helpers shared by every subcommand.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tropcomm_core::{
    verify_basis, FiniteMat2, TropMatrix, TropScalar, TropVector, VerifyConfig, VerifyReport,
};

use crate::{CliError, RunConfig};

/// First line of every text report: the command plus the settings that
/// reproduce the run.
pub fn header(command: &str, cfg: &RunConfig) -> String {
    format!(
        "# tropcomm {command}  seed={}  tol={:e}  grid-radius={}",
        cfg.seed, cfg.tol, cfg.grid_radius
    )
}

pub fn scalar_json(s: TropScalar) -> Value {
    match s.value() {
        Some(v) => json!(v),
        None => Value::Null,
    }
}

pub fn vector_json(v: &TropVector) -> Value {
    Value::Array(v.entries().iter().map(|&e| scalar_json(e)).collect())
}

pub fn matrix_json(m: &TropMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_json(m.get(i, j))).collect()))
            .collect(),
    )
}

fn matrix_block(m: &TropMatrix) -> String {
    let text = m.to_string();
    let mut out = String::new();
    for line in text.lines() {
        writeln!(out, "  {line}").unwrap();
    }
    out.pop();
    out
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct CheckOutcome {
    pub a: TropMatrix,
    pub b: TropMatrix,
    pub ab: TropMatrix,
    pub ba: TropMatrix,
    pub commute: bool,
}

/// Computes both products and compares them. `a` must be finite; `b`
/// may contain bottom entries.
pub fn run_check(a: &TropMatrix, b: &TropMatrix, cfg: &RunConfig) -> Result<CheckOutcome, CliError> {
    FiniteMat2::from_matrix(a).map_err(|e| CliError::Input(format!("left matrix: {e}")))?;
    let ab = a.otimes(b).map_err(|e| CliError::Input(format!("{e}")))?;
    let ba = b.otimes(a).map_err(|e| CliError::Input(format!("{e}")))?;
    let commute = ab.approx_eq(&ba, cfg.tol);
    Ok(CheckOutcome {
        a: a.clone(),
        b: b.clone(),
        ab,
        ba,
        commute,
    })
}

pub fn render_check_text(out: &CheckOutcome, cfg: &RunConfig) -> String {
    format!(
        "{}\na (x) b:\n{}\nb (x) a:\n{}\nverdict: {}",
        header("check", cfg),
        matrix_block(&out.ab),
        matrix_block(&out.ba),
        if out.commute { "COMMUTE" } else { "DO NOT COMMUTE" },
    )
}

pub fn render_check_json(out: &CheckOutcome, cfg: &RunConfig) -> String {
    serde_json::to_string_pretty(&json!({
        "command": "check",
        "seed": cfg.seed,
        "tol": cfg.tol,
        "a": matrix_json(&out.a),
        "b": matrix_json(&out.b),
        "a_times_b": matrix_json(&out.ab),
        "b_times_a": matrix_json(&out.ba),
        "commute": out.commute,
    }))
    .expect("report serializes")
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct BasisOutcome {
    pub matrix: FiniteMat2,
    pub report: VerifyReport,
}

/// Builds the basis for `a` and runs the full audit on it.
pub fn run_basis(a: &FiniteMat2, cfg: &RunConfig) -> BasisOutcome {
    let vcfg = VerifyConfig {
        tol: cfg.tol,
        seed: cfg.seed,
        grid_radius: cfg.grid_radius,
        ..VerifyConfig::default()
    };
    BasisOutcome {
        matrix: *a,
        report: verify_basis(a, &vcfg),
    }
}

pub fn render_basis_text(out: &BasisOutcome, cfg: &RunConfig) -> String {
    let basis = &out.report.basis;
    let mut text = format!(
        "{}\nmatrix:\n{}\ncase: {}\n",
        header("basis", cfg),
        matrix_block(&out.matrix.to_matrix()),
        basis.case(),
    );
    if let Some(a1) = basis.alpha1() {
        writeln!(text, "alpha1 = {a1}").unwrap();
    }
    if let Some(a2) = basis.alpha2() {
        writeln!(text, "alpha2 = {a2}").unwrap();
    }
    writeln!(text, "basis ({} generators, scaled):", basis.len()).unwrap();
    for (i, v) in basis.vectors().iter().enumerate() {
        writeln!(text, "  beta{} = {v}", i + 1).unwrap();
    }
    for w in &out.report.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    let total = out.report.checks.len();
    if out.report.all_pass() {
        write!(text, "verify: all {total} checks passed").unwrap();
    } else {
        let failed = out.report.failures().count();
        write!(text, "verify: {failed} of {total} checks FAILED").unwrap();
        for c in out.report.failures() {
            match &c.witness {
                Some(w) => write!(text, "\n  FAIL {}  witness = {w}", c.name).unwrap(),
                None => write!(text, "\n  FAIL {}", c.name).unwrap(),
            }
        }
    }
    text
}

pub fn render_basis_json(out: &BasisOutcome, cfg: &RunConfig) -> String {
    let basis = &out.report.basis;
    let checks: Vec<Value> = out
        .report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness.as_ref().map(vector_json),
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({
        "command": "basis",
        "seed": cfg.seed,
        "tol": cfg.tol,
        "grid_radius": cfg.grid_radius,
        "matrix": matrix_json(&out.matrix.to_matrix()),
        "case": basis.case().as_str(),
        "alpha1": basis.alpha1(),
        "alpha2": basis.alpha2(),
        "vectors": basis.vectors().iter().map(vector_json).collect::<Vec<_>>(),
        "verify": {
            "pass": out.report.all_pass(),
            "checks": checks,
            "warnings": &out.report.warnings,
        },
    }))
    .expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig {
            grid_radius: 3,
            ..RunConfig::default()
        }
    }

    #[test]
    fn check_report_carries_products_and_verdict() {
        let a: TropMatrix = "0.166 0.861; -0.62 -0.76".parse().unwrap();
        let id: TropMatrix = "0 -inf; -inf 0".parse().unwrap();
        let out = run_check(&a, &id, &cfg()).unwrap();
        assert!(out.commute);
        let text = render_check_text(&out, &cfg());
        assert!(text.starts_with("# tropcomm check  seed=0"));
        assert!(text.contains("verdict: COMMUTE"));
        assert!(text.contains("0.166 0.861"));

        let not: TropMatrix = "0 100; -inf 0".parse().unwrap();
        let a2: TropMatrix = "0 1; 2 -5".parse().unwrap();
        let out = run_check(&a2, &not, &cfg()).unwrap();
        assert!(!out.commute);
        assert!(render_check_text(&out, &cfg()).contains("verdict: DO NOT COMMUTE"));
    }

    #[test]
    fn check_rejects_non_finite_left_matrix() {
        let a: TropMatrix = "0 -inf; 0 0".parse().unwrap();
        let b: TropMatrix = "0 0; 0 0".parse().unwrap();
        let err = run_check(&a, &b, &cfg()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn basis_report_lists_case_offsets_and_generators() {
        let a = FiniteMat2::new(0.166, 0.861, -0.62, -0.76).unwrap();
        let out = run_basis(&a, &cfg());
        assert!(out.report.all_pass());
        let text = render_basis_text(&out, &cfg());
        assert!(text.contains("case: above-diagonal"));
        assert!(text.contains("alpha1 = -0.14"));
        assert!(text.contains("alpha2 = -1.621"));
        assert!(text.contains("beta2 = 0, -0.14, -inf, 0"));
        assert!(text.contains("verify: all 6 checks passed"));
    }

    #[test]
    fn basis_json_round_trips_vectors() {
        let a = FiniteMat2::new(0.166, 0.861, -0.62, -0.76).unwrap();
        let out = run_basis(&a, &cfg());
        let parsed: Value = serde_json::from_str(&render_basis_json(&out, &cfg())).unwrap();
        assert_eq!(parsed["case"], "above-diagonal");
        assert_eq!(parsed["verify"]["pass"], true);
        assert_eq!(parsed["vectors"][1][1], json!(-0.14));
        assert_eq!(parsed["vectors"][0][1], Value::Null);
        assert_eq!(parsed["vectors"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn near_degenerate_inputs_warn() {
        let a = FiniteMat2::new(1.0, 0.0, 0.0, 1.0 + 1e-12).unwrap();
        let out = run_basis(&a, &cfg());
        let text = render_basis_text(&out, &cfg());
        assert!(text.contains("warning:"));
        assert!(text.contains("case: equal-diagonal"));
    }
}
