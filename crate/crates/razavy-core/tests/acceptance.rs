//! End-to-end acceptance suite. Each test covers one numbered claim about
//! the library and prints a single `acceptance N: PASS/FAIL` line, so the
//! whole contract is auditable from the test output:
//!
//!  1. generated polynomials match hand-derived closed forms (M = 4)
//!  2. the tilde critical polynomial factors into the hat criticals
//!  3. periodic and hyperbolic families are anti-isospectral duals
//!  4. double-well algebraic levels match finite-difference eigenvalues
//!  5. periodic algebraic levels match plane-wave Floquet eigenvalues
//!  6. gap placement follows the parity rule and gaps are never consecutive
//!  7. weight positivity is equivalent to positivity of the a_k
//!  8. norms satisfy L(P_k²) = Π a_j with a vanishing tail
//!  9. algebraic eigenfunctions satisfy both Schrödinger equations
//! 10. periodic eigenfunctions are finite solutions with the right zero counts

use razavy_core::bands::{classify, consecutive_gap_check};
use razavy_core::families::{enumerate_hat_branches, make_tilde};
use razavy_core::oracle::{bound_states_auto, hill_eigenvalues, DEFAULT_BASIS_CUT};
use razavy_core::polyseq::{check_tilde_hat_factorization, duality_residual};
use razavy_core::spectrum::{
    algebraic_energies, moment_functional, norm_sequence, positivity_report, MomentFunctional,
};
use razavy_core::wavefunc::{
    count_series_zeros, default_samples, finite_solution_check, hyperbolic_eigenfunction,
    period_grid, schrodinger_residual, symmetric_grid, trig_eigenfunction, Domain, Samples,
};
use razavy_core::{
    EigenfunctionSeries, Error, PolyFamilyHandle, PotentialParams, SampledFunction,
    TrigForm,
};

const TAU: f64 = core::f64::consts::TAU;

fn params(zeta: f64, m: u32) -> PotentialParams {
    PotentialParams::new(zeta, m).unwrap()
}

fn tilde_handle(p: PotentialParams, periodic: bool) -> PolyFamilyHandle {
    PolyFamilyHandle::new(make_tilde(p, periodic))
}

fn tilde_roots(p: PotentialParams, periodic: bool) -> Vec<f64> {
    algebraic_energies(&tilde_handle(p, periodic)).unwrap().energies
}

/// 33-point energy grid spanning the window that contains every critical
/// root, |E| ≤ 2(ζ+M)².
fn energy_grid(p: PotentialParams) -> Vec<f64> {
    let half = 2.0 * (p.zeta() + p.m()) * (p.zeta() + p.m());
    (0..33).map(|i| -half + 2.0 * half * i as f64 / 32.0).collect()
}

/// Tunneling pairs at large M and small ζ can sit closer than the root
/// coincidence guard resolves; those points error out by contract and the
/// sweeps here skip them, reporting how many were skipped.
fn moments_or_skip(
    h: &PolyFamilyHandle,
    skipped: &mut usize,
) -> Option<MomentFunctional> {
    match moment_functional(h) {
        Ok(mf) => Some(mf),
        Err(Error::RootsCoincide { separation, .. }) => {
            println!(
                "  skipped near-degenerate {:?} M={} zeta={} (sep {separation:.3e})",
                h.spec().kind,
                h.spec().params.m_int(),
                h.spec().params.zeta(),
            );
            *skipped += 1;
            None
        }
        Err(e) => panic!("unexpected error: {e:?}"),
    }
}

fn report(num: usize, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {num}: PASS - {what}");
    } else {
        println!("acceptance {num}: FAIL - {what}");
        for f in failures {
            println!("  {f}");
        }
        panic!("acceptance criterion {num} failed ({} case(s))", failures.len());
    }
}

fn check_coeffs(
    failures: &mut Vec<String>,
    label: &str,
    zeta: f64,
    got: &[f64],
    want: &[f64],
) {
    assert_eq!(got.len(), want.len(), "{label}: degree mismatch");
    for (j, (&g, &w)) in got.iter().zip(want).enumerate() {
        let rel = (g - w).abs() / w.abs().max(1.0);
        if rel > 1e-12 {
            failures.push(format!(
                "{label} zeta={zeta} coeff {j}: got {g:.17e}, want {w:.17e} (rel {rel:.3e})"
            ));
        }
    }
}

#[test]
fn criterion_01_closed_form_polynomials() {
    let mut failures = Vec::new();
    for &z in &[0.5, 1.0, 2.0] {
        let p = params(z, 4);
        let tilde = tilde_handle(p, false);
        let z2 = z * z;
        let tilde_want: [Vec<f64>; 5] = [
            vec![1.0],
            vec![-(z2 + 7.0), 1.0],
            vec![z2 * z2 + 10.0 * z2 + 105.0, -2.0 * (z2 + 11.0), 1.0],
            vec![
                -(z2 * z2 * z2 + 9.0 * z2 * z2 + 143.0 * z2 + 1575.0),
                3.0 * z2 * z2 + 46.0 * z2 + 435.0,
                -(3.0 * z2 + 37.0),
                1.0,
            ],
            vec![
                z2 * z2 * z2 * z2 + 4.0 * z2 * z2 * z2 + 86.0 * z2 * z2 + 1316.0 * z2 + 11025.0,
                -4.0 * (z2 * z2 * z2 + 13.0 * z2 * z2 + 159.0 * z2 + 1155.0),
                2.0 * (3.0 * z2 * z2 + 46.0 * z2 + 347.0),
                -4.0 * (z2 + 11.0),
                1.0,
            ],
        ];
        for (k, want) in tilde_want.iter().enumerate() {
            let got = tilde.poly_coeffs(k).unwrap().coeffs;
            check_coeffs(&mut failures, &format!("tilde P_{k}"), z, &got, want);
        }

        // the two hat branches of M = 4 ((σ,η) = (0,±1)), k ≤ 2
        for eta in [1i8, -1i8] {
            let s = eta as f64;
            let spec = enumerate_hat_branches(p)
                .into_iter()
                .find(|b| b.sigma == 0 && b.eta == eta)
                .unwrap();
            let hat = PolyFamilyHandle::new(spec);
            let hat_want: [Vec<f64>; 3] = [
                vec![1.0],
                vec![-(z2 + (4.0 - 2.0 * s) * z + 15.0), 1.0],
                vec![
                    z2 * z2 - 4.0 * s * z * z2 + 10.0 * z2 - 28.0 * s * z + 105.0,
                    -2.0 * (z2 - 2.0 * s * z + 11.0),
                    1.0,
                ],
            ];
            for (k, want) in hat_want.iter().enumerate() {
                let got = hat.poly_coeffs(k).unwrap().coeffs;
                check_coeffs(&mut failures, &format!("hat(0,{eta:+}) P_{k}"), z, &got, want);
            }
        }
    }
    report(1, "closed-form polynomial coefficients (M=4, both families)", &failures);
}

#[test]
fn criterion_02_tilde_factors_into_hats() {
    let mut failures = Vec::new();
    for m in 1..=10u32 {
        for &z in &[0.5, 1.0, 3.0] {
            let p = params(z, m);
            let resid = check_tilde_hat_factorization(p, &energy_grid(p));
            if resid > 1e-9 {
                failures.push(format!("M={m} zeta={z}: factorization residual {resid:.3e}"));
            }
        }
    }
    report(2, "critical-polynomial factorization across M <= 10", &failures);
}

#[test]
fn criterion_03_anti_isospectral_duality() {
    let mut failures = Vec::new();
    for m in 1..=10u32 {
        for &z in &[0.5, 1.0, 3.0] {
            let p = params(z, m);
            let grid = energy_grid(p);
            let k_max = m as usize + 3;
            let mut pairs: Vec<(PolyFamilyHandle, PolyFamilyHandle)> = vec![(
                tilde_handle(p, true),
                tilde_handle(p, false),
            )];
            for spec in enumerate_hat_branches(p) {
                pairs.push((
                    PolyFamilyHandle::new(spec.to_periodic()),
                    PolyFamilyHandle::new(spec),
                ));
            }
            for (per, hyp) in &pairs {
                let resid = duality_residual(per, hyp, k_max, &grid);
                if resid > 1e-12 {
                    failures.push(format!(
                        "M={m} zeta={z} {:?}: duality residual {resid:.3e}",
                        hyp.spec().kind
                    ));
                }
            }
        }
    }
    report(3, "P_per_k(E) = (-1)^k P_k(-E) for k <= M+3, both kinds", &failures);
}

#[test]
fn criterion_04_double_well_levels_match_finite_differences() {
    let mut failures = Vec::new();
    for m in 1..=6u32 {
        for &z in &[0.5, 1.0, 2.0] {
            let p = params(z, m);
            let roots = tilde_roots(p, false);
            let fd = bound_states_auto(p, m as usize).unwrap();
            for (k, (&e, &f)) in roots.iter().zip(&fd).enumerate() {
                let err = (e - f).abs();
                let tol = 1e-5 * e.abs().max(1.0);
                if err > tol {
                    failures.push(format!(
                        "M={m} zeta={z} level {k}: algebraic {e}, FD {f} (err {err:.3e})"
                    ));
                }
            }
            // closed forms for the two smallest cases
            let exact: Vec<f64> = match m {
                1 => vec![z * z + 1.0],
                2 => vec![(z - 1.0) * (z - 1.0) + 2.0, (z + 1.0) * (z + 1.0) + 2.0],
                _ => vec![],
            };
            for (k, (&e, &x)) in roots.iter().zip(&exact).enumerate() {
                if (e - x).abs() > 1e-10 * x.abs().max(1.0) {
                    failures.push(format!("M={m} zeta={z} level {k}: root {e} vs exact {x}"));
                }
            }
        }
    }
    report(4, "algebraic double-well levels vs Richardson finite differences", &failures);
}

#[test]
fn criterion_05_periodic_levels_match_floquet_solver() {
    let mut failures = Vec::new();
    for m in 1..=8u32 {
        for &z in &[0.5, 1.0, 2.0] {
            let p = params(z, m);
            let roots = tilde_roots(p, true);
            let q = if m % 2 == 0 { 1.0 } else { 0.0 };
            let hill = hill_eigenvalues(p, q, DEFAULT_BASIS_CUT, m as usize).unwrap();
            for (k, (&e, &h)) in roots.iter().zip(&hill).enumerate() {
                let err = (e - h).abs();
                if err > 1e-8 {
                    failures.push(format!(
                        "M={m} zeta={z} q={q} level {k}: algebraic {e}, Floquet {h} (err {err:.3e})"
                    ));
                }
            }
        }
    }
    report(5, "periodic algebraic levels vs plane-wave Floquet eigenvalues", &failures);
}

#[test]
fn criterion_06_gap_placement_parity_rule() {
    let mut failures = Vec::new();
    for m in 2..=8u32 {
        for &z in &[0.5, 1.0, 2.0] {
            let p = params(z, m);
            let c = classify(p).unwrap();
            let expected: Vec<usize> = if m % 2 == 0 {
                (0..m as usize / 2).map(|k| 2 * k + 1).collect()
            } else {
                (1..=m as usize / 2).map(|k| 2 * k).collect()
            };
            if c.gap_indices != expected {
                failures.push(format!(
                    "M={m} zeta={z}: gap indices {:?}, expected {expected:?}",
                    c.gap_indices
                ));
            }
            if c.includes_ground_state != (m % 2 == 1) {
                failures.push(format!("M={m} zeta={z}: ground-state flag wrong"));
            }
            if !consecutive_gap_check(p).unwrap() {
                failures.push(format!("M={m} zeta={z}: consecutive gaps bounded"));
            }
        }
    }
    report(6, "bounded gaps are {1,3,..} (M even) / ground + {2,4,..} (M odd)", &failures);
}

#[test]
fn criterion_07_weight_positivity_equivalence() {
    let mut failures = Vec::new();
    let mut skipped = 0usize;
    for m in 1..=10u32 {
        for &z in &[0.5, 1.0, 3.0] {
            let p = params(z, m);
            let mut specs = vec![make_tilde(p, false), make_tilde(p, true)];
            for hat in enumerate_hat_branches(p) {
                specs.push(hat);
                specs.push(hat.to_periodic());
            }
            for spec in specs {
                let h = PolyFamilyHandle::new(spec);
                let mf = match moments_or_skip(&h, &mut skipped) {
                    Some(mf) => mf,
                    None => continue,
                };
                let rep = positivity_report(&h).unwrap();
                let label = format!("M={m} zeta={z} {:?}", spec.kind);
                if !rep.consistent {
                    failures.push(format!("{label}: positivity criterion inconsistent"));
                }
                if spec.kind.is_hat() {
                    // single-node families (n = 0) are trivially positive;
                    // every larger hat family must carry a negative weight
                    if spec.n >= 1 && !mf.weights.iter().any(|&w| w < 0.0) {
                        failures.push(format!("{label}: no negative weight (n={})", spec.n));
                    }
                } else if !rep.all_weights_positive {
                    failures.push(format!("{label}: tilde weights not all positive"));
                }
            }
        }
    }
    println!("  criterion 7 skipped {skipped} near-degenerate points");
    report(7, "weights all positive iff a_k > 0 for 0 < k <= n", &failures);
}

#[test]
fn criterion_08_norm_identity_and_vanishing_tail() {
    let mut failures = Vec::new();
    let mut skipped = 0usize;
    for m in 1..=10u32 {
        for &z in &[0.5, 1.0, 3.0] {
            let p = params(z, m);
            let mut specs = vec![make_tilde(p, false), make_tilde(p, true)];
            for hat in enumerate_hat_branches(p) {
                specs.push(hat);
                specs.push(hat.to_periodic());
            }
            for spec in specs {
                let h = PolyFamilyHandle::new(spec);
                if moments_or_skip(&h, &mut skipped).is_none() {
                    continue;
                }
                let n = spec.n;
                let norms = norm_sequence(&h, n + 1).unwrap();
                let label = format!("M={m} zeta={z} {:?}", spec.kind);
                let mut prod = 1.0;
                let mut prod_abs = 1.0f64;
                for k in 0..=n {
                    if k >= 1 {
                        prod *= spec.a(k);
                        prod_abs *= spec.a(k).abs();
                    }
                    if (norms[k] - prod).abs() > 1e-7 * prod_abs.max(1.0) {
                        failures.push(format!(
                            "{label} k={k}: L(P_k^2) = {}, product = {prod}",
                            norms[k]
                        ));
                    }
                }
                if norms[n + 1].abs() > 1e-8 * prod_abs.max(1.0) {
                    failures.push(format!(
                        "{label}: tail norm {} above threshold",
                        norms[n + 1]
                    ));
                }
            }
        }
    }
    println!("  criterion 8 skipped {skipped} near-degenerate points");
    report(8, "L(P_k^2) = prod a_j for k <= n and vanishes at k = n+1", &failures);
}

#[test]
fn criterion_09_eigenfunctions_satisfy_both_equations() {
    let mut failures = Vec::new();
    let line_grid = symmetric_grid(2.0, 2049);
    let ring_grid = period_grid(2048);
    for m in 1..=6u32 {
        for &z in &[0.5, 1.0, 2.0] {
            let p = params(z, m);
            let hyp = make_tilde(p, false);
            for &e in &tilde_roots(p, false) {
                let f = hyperbolic_eigenfunction(&hyp, e, &line_grid).unwrap();
                let r = schrodinger_residual(&f, |x| p.v_hyperbolic(x), e).unwrap();
                if r > 1e-6 * e.abs().max(1.0) {
                    failures.push(format!(
                        "double well M={m} zeta={z} E={e}: residual {r:.3e}"
                    ));
                }
            }
            let per = make_tilde(p, true);
            for &e in &tilde_roots(p, true) {
                let f = trig_eigenfunction(&per, e, &ring_grid, None).unwrap();
                let r = schrodinger_residual(&f, |x| p.u_periodic(x), e).unwrap();
                if r > 1e-6 * e.abs().max(1.0) {
                    failures.push(format!(
                        "periodic M={m} zeta={z} E={e}: residual {r:.3e}"
                    ));
                }
            }
        }
    }
    report(9, "Schrodinger residuals below 1e-6 * ||psi|| * max(1,|E|), M <= 6", &failures);
}

/// The real shape whose underlying hat branch accepts this critical energy.
fn matching_form(p: PotentialParams, energy: f64) -> TrigForm {
    let spec = make_tilde(p, true);
    let candidates = if p.m_int() % 2 == 0 {
        [TrigForm::Ee, TrigForm::Eo]
    } else {
        [TrigForm::Oe, TrigForm::Oo]
    };
    for form in candidates {
        if p.m_int() == 1 && form == TrigForm::Oo {
            continue; // no (σ=−1) branch at M=1
        }
        if EigenfunctionSeries::periodic_real(spec, energy, form).is_ok() {
            return form;
        }
    }
    panic!("no real shape accepts energy {energy}");
}

/// Integrate ψ″ = (U−E)ψ around one period by RK4 and sample it; at a
/// non-critical energy this is a perfectly good ODE solution that is *not*
/// of the finite (gauge × trig polynomial) form.
fn shoot_periodic(p: PotentialParams, energy: f64, n_out: usize) -> SampledFunction {
    let substeps = 16usize;
    let h = TAU / (n_out * substeps) as f64;
    let deriv =
        |x: f64, y: (f64, f64)| -> (f64, f64) { (y.1, (p.u_periodic(x) - energy) * y.0) };
    let mut y = (1.0, 0.3);
    let mut vals = Vec::with_capacity(n_out);
    for j in 0..n_out * substeps {
        if j % substeps == 0 {
            vals.push(y.0);
        }
        let x = j as f64 * h;
        let k1 = deriv(x, y);
        let k2 = deriv(x + 0.5 * h, (y.0 + 0.5 * h * k1.0, y.1 + 0.5 * h * k1.1));
        let k3 = deriv(x + 0.5 * h, (y.0 + 0.5 * h * k2.0, y.1 + 0.5 * h * k2.1));
        let k4 = deriv(x + h, (y.0 + h * k3.0, y.1 + h * k3.1));
        y = (
            y.0 + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            y.1 + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        );
    }
    SampledFunction::new(period_grid(n_out), Samples::Real(vals), Domain::Periodic).unwrap()
}

#[test]
fn criterion_10_finite_solutions_and_zero_counts() {
    let mut failures = Vec::new();
    let xs = period_grid(512);
    for m in 1..=6u32 {
        for &z in &[0.5, 1.0, 2.0] {
            let p = params(z, m);
            let spec = make_tilde(p, true);
            for &e in &tilde_roots(p, true) {
                let f = trig_eigenfunction(&spec, e, &xs, None).unwrap();
                let rep = finite_solution_check(&f, p).unwrap();
                if !rep.is_finite || rep.residual > 1e-8 {
                    failures.push(format!(
                        "M={m} zeta={z} E={e}: residual {:.3e} above threshold",
                        rep.residual
                    ));
                }
                if rep.trig_degree > (m - 1) as usize {
                    failures.push(format!(
                        "M={m} zeta={z} E={e}: trig degree {} > M-1",
                        rep.trig_degree
                    ));
                }
            }
        }
    }

    // a solution at a non-critical energy must fail the same check
    let p = params(1.0, 4);
    let roots = tilde_roots(p, true);
    let e_mid = 0.5 * (roots[1] + roots[2]);
    let rep = finite_solution_check(&shoot_periodic(p, e_mid, 512), p).unwrap();
    if rep.is_finite {
        failures.push(format!(
            "non-critical E={e_mid} passed the finite-solution check"
        ));
    }

    // zero counts in [0, π): k + (k mod 2) for periodic levels (M odd),
    // k + (k mod 2) − 1 for antiperiodic levels indexed from k = 1 (M even)
    for m in 1..=6u32 {
        let p = params(1.0, m);
        let spec = make_tilde(p, true);
        for (j, &e) in tilde_roots(p, true).iter().enumerate() {
            let expected = if m % 2 == 1 { j + j % 2 } else { j + (j + 1) % 2 };
            let form = matching_form(p, e);
            let s = EigenfunctionSeries::periodic_real(spec, e, form).unwrap();
            let zc = count_series_zeros(&s, (0.0, core::f64::consts::PI), default_samples(m))
                .unwrap();
            if zc.crossings != expected {
                failures.push(format!(
                    "M={m} level {j} ({}): {} zeros, expected {expected}",
                    form.label(),
                    zc.crossings
                ));
            }
        }
    }
    report(10, "finite-solution certificates and oscillation counts, M <= 6", &failures);
}
