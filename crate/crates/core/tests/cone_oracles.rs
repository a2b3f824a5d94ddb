//! Independent cross-checks of the cone machinery on exact integer
//! instances.
//!
//! `is_extremal` decides extremality through shifted-set minimality.
//! These tests re-decide it from the raw definition — searching for a
//! decomposition `v = x ⊕ y` into strictly smaller span elements over
//! a finite coefficient lattice — and require bit-for-bit agreement.
//! Integer data keeps every comparison exact, and the lattice is wide
//! enough to contain the canonical witnesses (shifted generators), so
//! a disagreement in either direction is a real bug.

use rand::Rng;
use tropcomm_core::sample;
use tropcomm_core::{
    basis_commuting_cone, build_system, in_span, is_extremal, is_independent, is_solution,
    verify_basis, FiniteMat2, TropScalar, TropVector, VectorSet, VerifyConfig, DEFAULT_TOL,
};

/// Generators with entries in `{-2..2}` or bottom, none all-bottom.
fn random_generators<R: Rng>(rng: &mut R, count: usize, dim: usize) -> VectorSet {
    let mut out = VectorSet::empty(dim);
    while out.len() < count {
        let v = TropVector::new(
            (0..dim)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        TropScalar::Bottom
                    } else {
                        TropScalar::finite(rng.gen_range(-2..=2) as f64)
                    }
                })
                .collect(),
        );
        if !v.is_bottom() {
            out.push(v).unwrap();
        }
    }
    out
}

/// Every combination `⊕ lambda_i ⊗ w_i` with coefficients drawn from
/// `lattice`, deduplicated exactly.
fn lattice_span(set: &VectorSet, lattice: &[TropScalar]) -> Vec<TropVector> {
    let mut combos = vec![TropVector::bottom(set.dim())];
    for w in set.iter() {
        let mut next = Vec::with_capacity(combos.len() * lattice.len());
        for partial in &combos {
            for &l in lattice {
                next.push(partial.oplus(&w.scale_by(l)).unwrap());
            }
        }
        combos = next;
    }
    let mut unique: Vec<TropVector> = Vec::new();
    for c in combos {
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    unique
}

/// The raw definition of non-extremality, restricted to the lattice:
/// some pair of span elements strictly below `v` joins back to `v`.
fn decomposes_on_lattice(v: &TropVector, span_elems: &[TropVector], tol: f64) -> bool {
    let below: Vec<&TropVector> = span_elems
        .iter()
        .filter(|x| x.leq(v, tol).unwrap() && !x.approx_eq(v, tol))
        .collect();
    below
        .iter()
        .any(|x| below.iter().any(|y| x.oplus(y).unwrap().approx_eq(v, tol)))
}

#[test]
fn extremality_agrees_with_decomposition_search() {
    let tol = DEFAULT_TOL;
    let mut rng = sample::rng(0xC0_FE);
    // wide enough to contain every canonical shift v_t - w_t for the
    // test vectors below (|v_t| <= 4, |w_t| <= 2)
    let lattice: Vec<TropScalar> = core::iter::once(TropScalar::Bottom)
        .chain((-6..=6).map(|k| TropScalar::finite(k as f64)))
        .collect();

    for trial in 0..8 {
        let dim = 3 + trial % 2;
        let count = 2 + trial % 2;
        let set = random_generators(&mut rng, count, dim);
        let span_elems = lattice_span(&set, &lattice);

        // probe the scaled generators and a couple of two-term
        // combinations (the latter are usually non-extremal)
        let mut probes: Vec<TropVector> =
            set.iter().map(|w| w.scaled().unwrap()).collect();
        for _ in 0..2 {
            let i = rng.gen_range(0..set.len());
            let j = rng.gen_range(0..set.len());
            let li = TropScalar::finite(rng.gen_range(-2..=2) as f64);
            let lj = TropScalar::finite(rng.gen_range(-2..=2) as f64);
            probes.push(
                set.get(i)
                    .scale_by(li)
                    .oplus(&set.get(j).scale_by(lj))
                    .unwrap(),
            );
        }

        for v in probes {
            let claimed = is_extremal(&v, &set, tol).unwrap();
            let decomposed = decomposes_on_lattice(&v, &span_elems, tol);
            assert_eq!(
                claimed, !decomposed,
                "trial {trial}: disagreement on ({v}) over {:?}",
                set.vectors()
            );
        }
    }
}

#[test]
fn extracted_extremals_are_independent_and_span_the_cone() {
    let tol = DEFAULT_TOL;
    let mut rng = sample::rng(0xE7_AC);

    for trial in 0..10 {
        let set = random_generators(&mut rng, 4, 4);

        // keep one scaled copy of each extremal generator
        let mut extremals = VectorSet::empty(4);
        for w in set.iter() {
            if is_extremal(w, &set, tol).unwrap() {
                let s = w.scaled().unwrap();
                if !extremals.iter().any(|e| e.approx_eq(&s, tol)) {
                    extremals.push(s).unwrap();
                }
            }
        }

        assert!(!extremals.is_empty(), "trial {trial}: no extremals found");
        assert!(
            is_independent(&extremals, tol),
            "trial {trial}: extremals not independent: {:?}",
            extremals.vectors()
        );

        // the extremals must regenerate every generator ...
        for w in set.iter() {
            assert!(
                in_span(w, &extremals, tol),
                "trial {trial}: generator ({w}) outside the extremal span"
            );
        }
        // ... and therefore every combination
        for _ in 0..20 {
            let mut combo = TropVector::bottom(4);
            for w in set.iter() {
                combo = combo
                    .oplus(&w.scale_by(sample::lambda(&mut rng, -3.0, 3.0, 0.25)))
                    .unwrap();
            }
            assert!(in_span(&combo, &extremals, tol));
        }
    }
}

#[test]
fn equal_diagonal_boundary_instance_verifies() {
    // diagonal entries equal with 2*a11 = a12 + a21: the boundary
    // between diagonal-dominant and off-diagonal-dominant behaviour
    let a = FiniteMat2::new(0.0, 1.0, -1.0, 0.0).unwrap();
    let cfg = VerifyConfig {
        grid_radius: 3,
        ..VerifyConfig::default()
    };
    let report = verify_basis(&a, &cfg);
    assert!(
        report.all_pass(),
        "failures: {:?}",
        report.failures().collect::<Vec<_>>()
    );

    // A commutes with itself, and its flattening lies in the span
    let flat = a.to_matrix().to_vec4().unwrap();
    assert!(is_solution(&flat, &build_system(&a), DEFAULT_TOL).unwrap());
    let basis = basis_commuting_cone(&a, DEFAULT_TOL);
    assert!(in_span(&flat, basis.vectors(), DEFAULT_TOL));
}
