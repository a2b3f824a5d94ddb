//! The `verify` subcommand: a seeded batch of randomized and
//! exhaustive audits across all three diagonal cases, fixed fixtures
//! for the known corner cases, and an optional deliberate fault to
//! prove the audit itself has teeth.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tropcomm_core::{
    basis_commuting_cone, build_system, concurrency_check, in_span, is_solution, sample,
    verify_basis, verify_basis_of, CheckResult, DiagonalCase, FiniteMat2, TropVector, VectorSet,
    VerifyConfig,
};

use crate::report::header;
use crate::RunConfig;

pub struct SweepGroup {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// Extra measured numbers worth surfacing (max gaps, residuals).
    pub detail: String,
    /// One line per failure, at most a handful, for the report.
    pub witnesses: Vec<String>,
}

impl SweepGroup {
    fn new(name: impl Into<String>, trials: usize) -> Self {
        Self {
            name: name.into(),
            trials,
            failures: 0,
            detail: String::new(),
            witnesses: Vec::new(),
        }
    }

    fn record_failure(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < 5 {
            self.witnesses.push(witness);
        }
    }
}

pub struct SweepOutcome {
    pub groups: Vec<SweepGroup>,
    pub fault_injected: bool,
    pub pass: bool,
}

fn check_witness(a: &FiniteMat2, check: &CheckResult) -> String {
    match &check.witness {
        Some(w) => format!("matrix [{a}]  check {}  witness {w}", check.name),
        None => format!("matrix [{a}]  check {}", check.name),
    }
}

/// Runs the whole suite. Every random draw derives from `cfg.seed`, so
/// a failing report is reproducible by rerunning with the same seed.
pub fn run_verify(cfg: &RunConfig, mutate_basis: bool) -> SweepOutcome {
    let mut groups = Vec::new();
    let vbase = VerifyConfig {
        tol: cfg.tol,
        seed: cfg.seed,
        grid_radius: cfg.grid_radius,
        ..VerifyConfig::default()
    };
    let mut rng = sample::rng(cfg.seed);

    // seeded random matrices, full audit, all three cases
    for case in [
        DiagonalCase::Above,
        DiagonalCase::Below,
        DiagonalCase::Equal,
    ] {
        let mut group = SweepGroup::new(format!("random-bases-{case}"), 100);
        for t in 0..group.trials {
            let a = sample::mat2_in_case(&mut rng, case, -10.0, 10.0);
            let vcfg = VerifyConfig {
                seed: cfg.seed.wrapping_add(t as u64),
                ..vbase
            };
            let report = verify_basis(&a, &vcfg);
            let first = report.failures().next().map(|c| check_witness(&a, c));
            if let Some(witness) = first {
                group.record_failure(witness);
            }
        }
        groups.push(group);
    }

    // small integer matrices, where the grid enumeration is a complete
    // oracle for span coverage
    for case in [
        DiagonalCase::Above,
        DiagonalCase::Below,
        DiagonalCase::Equal,
    ] {
        let mut group = SweepGroup::new(format!("integer-grids-{case}"), 50);
        for t in 0..group.trials {
            let a = sample::int_mat2_in_case(&mut rng, case, -3, 3);
            let vcfg = VerifyConfig {
                seed: cfg.seed.wrapping_add(1000 + t as u64),
                ..vbase
            };
            let report = verify_basis(&a, &vcfg);
            let first = report.failures().next().map(|c| check_witness(&a, c));
            if let Some(witness) = first {
                group.record_failure(witness);
            }
        }
        groups.push(group);
    }

    groups.push(six_generator_fixture(cfg));
    groups.push(offset_identity(cfg));
    groups.push(cevian_concurrency(cfg));

    if mutate_basis {
        groups.push(mutated_basis_control(cfg, &vbase));
    }

    let pass = groups.iter().all(|g| g.failures == 0);
    SweepOutcome {
        groups,
        fault_injected: mutate_basis,
        pass,
    }
}

/// The equal-diagonal counterexample: a commuting witness that the
/// substituted off-diagonal generators fail to span but the actual
/// six-generator basis covers.
fn six_generator_fixture(cfg: &RunConfig) -> SweepGroup {
    let mut group = SweepGroup::new("six-generator-fixture", 1);
    let a = FiniteMat2::new(0.0, -2.0, -3.0, 0.0).expect("finite");
    let b: TropVector = "0, 3, -3, 0".parse().expect("vector");
    let primed = VectorSet::new(
        4,
        [
            "0, -inf, -inf, 0",
            "0, -2, -inf, 0",
            "0, -inf, -3, 0",
            "0, -2, -3, -inf",
            "-inf, 0, -1, 2",
            "-inf, 0, -1, -inf",
        ]
        .iter()
        .map(|s| s.parse().expect("vector"))
        .collect(),
    )
    .expect("uniform dimension");

    let solves = is_solution(&b, &build_system(&a), cfg.tol).expect("dimension 4");
    let in_primed = in_span(&b, &primed, cfg.tol);
    let basis = basis_commuting_cone(&a, cfg.tol);
    let in_basis = in_span(&b, basis.vectors(), cfg.tol);
    if !(solves && !in_primed && in_basis) {
        group.record_failure(format!(
            "matrix [{a}]  witness {b}  solves={solves} in-substituted-set={in_primed} in-basis={in_basis}"
        ));
    }
    group
}

/// alpha2 - alpha1 must equal a21 - a12 to rounding error on every
/// above-diagonal instance.
fn offset_identity(cfg: &RunConfig) -> SweepGroup {
    let mut group = SweepGroup::new("offset-identity", 1000);
    let mut rng = sample::rng(cfg.seed.wrapping_add(0xA1));
    let mut max_gap = 0.0f64;
    for _ in 0..group.trials {
        let a = sample::mat2_in_case(&mut rng, DiagonalCase::Above, -10.0, 10.0);
        let basis = basis_commuting_cone(&a, cfg.tol);
        let gap = (basis.alpha2().expect("above case")
            - basis.alpha1().expect("above case")
            - (a.a21() - a.a12()))
        .abs();
        max_gap = max_gap.max(gap);
        if gap > 1e-12 {
            group.record_failure(format!("matrix [{a}]  offset gap {gap:.3e}"));
        }
    }
    group.detail = format!("max gap {max_gap:.2e}");
    group
}

/// The three cevians must meet in a single point for every
/// above-diagonal instance.
fn cevian_concurrency(cfg: &RunConfig) -> SweepGroup {
    let mut group = SweepGroup::new("cevian-concurrency", 100);
    let mut rng = sample::rng(cfg.seed.wrapping_add(0xC3));
    let mut max_residual = 0.0f64;
    for _ in 0..group.trials {
        let a = sample::mat2_in_case(&mut rng, DiagonalCase::Above, -10.0, 10.0);
        let basis = basis_commuting_cone(&a, cfg.tol);
        match concurrency_check(&basis, cfg.tol) {
            Ok(report) => {
                max_residual = max_residual.max(report.residual);
                if !report.pass {
                    group.record_failure(format!(
                        "matrix [{a}]  residual {:.3e}  foot gap {:.3e}  offset gap {:.3e}",
                        report.residual, report.foot_gap, report.alpha_gap
                    ));
                }
            }
            Err(e) => group.record_failure(format!("matrix [{a}]  {e}")),
        }
    }
    group.detail = format!("max residual {max_residual:.2e}");
    group
}

/// Deliberate fault injection: drop the last generator and demand the
/// audit notices. This group *fails* when the harness works, so the
/// sweep exits nonzero — the expected outcome under `--mutate-basis`.
fn mutated_basis_control(cfg: &RunConfig, vbase: &VerifyConfig) -> SweepGroup {
    let mut group = SweepGroup::new("mutated-basis-control", 1);
    group.detail = String::from("deliberate fault: last generator dropped");
    // integer entries put the dropped generator on the enumeration
    // grid, so the coverage check can name a concrete witness
    let a = FiniteMat2::new(1.0, 2.0, 0.0, -1.0).expect("finite");
    let full = basis_commuting_cone(&a, cfg.tol);
    let mutated = full.with_vectors(full.vectors().without(full.len() - 1));
    let report = verify_basis_of(&a, &mutated, vbase);
    for check in report.failures() {
        group.record_failure(check_witness(&a, check));
    }
    if group.failures == 0 {
        // the audit missed an injected fault — surface that loudly
        group.record_failure(String::from(
            "audit accepted a truncated basis; the verification harness is broken",
        ));
    }
    group
}

pub fn render_verify_text(out: &SweepOutcome, cfg: &RunConfig) -> String {
    let mut text = header("verify", cfg);
    if out.fault_injected {
        write!(
            text,
            "\nnote: --mutate-basis injects a fault; this run is expected to fail"
        )
        .unwrap();
    }
    for g in &out.groups {
        write!(
            text,
            "\n{:<32} {:>5} trials  {:>2} failures",
            g.name, g.trials, g.failures
        )
        .unwrap();
        if !g.detail.is_empty() {
            write!(text, "  ({})", g.detail).unwrap();
        }
        for w in &g.witnesses {
            write!(text, "\n    witness: {w}").unwrap();
        }
    }
    write!(
        text,
        "\nverdict: {}",
        if out.pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
    text
}

pub fn render_verify_json(out: &SweepOutcome, cfg: &RunConfig) -> String {
    let groups: Vec<Value> = out
        .groups
        .iter()
        .map(|g| {
            json!({
                "name": g.name,
                "trials": g.trials,
                "failures": g.failures,
                "detail": g.detail,
                "witnesses": g.witnesses,
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({
        "command": "verify",
        "seed": cfg.seed,
        "tol": cfg.tol,
        "grid_radius": cfg.grid_radius,
        "fault_injected": out.fault_injected,
        "groups": groups,
        "pass": out.pass,
    }))
    .expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast_cfg() -> RunConfig {
        RunConfig {
            grid_radius: 2,
            ..RunConfig::default()
        }
    }

    #[test]
    fn sweep_passes_on_default_seed() {
        let out = run_verify(&fast_cfg(), false);
        assert!(out.pass);
        assert_eq!(out.groups.len(), 9);
        assert!(out.groups.iter().all(|g| g.failures == 0));
        let text = render_verify_text(&out, &fast_cfg());
        assert!(text.contains("verdict: PASS"));
        assert!(text.contains("six-generator-fixture"));
        assert!(text.contains("max residual"));
    }

    #[test]
    fn sweep_passes_across_seeds() {
        for seed in 1..=10 {
            let cfg = RunConfig {
                seed,
                ..fast_cfg()
            };
            let out = run_verify(&cfg, false);
            assert!(out.pass, "sweep failed at seed {seed}");
        }
    }

    #[test]
    fn mutated_basis_is_caught() {
        let out = run_verify(&fast_cfg(), true);
        assert!(!out.pass);
        let control = out
            .groups
            .iter()
            .find(|g| g.name == "mutated-basis-control")
            .unwrap();
        assert!(control.failures > 0);
        assert!(control.witnesses.iter().any(|w| w.contains("witness")));
        let text = render_verify_text(&out, &fast_cfg());
        assert!(text.contains("verdict: FAIL"));
        assert!(text.contains("expected to fail"));
    }
}
