//! The polynomial sequences themselves: evaluation, coefficient vectors,
//! critical polynomials, tail factors, and the two structural identities
//! (tilde = product of hat criticals; periodic ↔ hyperbolic duality).
//!
//! All polynomials are monic with `P_0 = 1` and satisfy
//! `P_{k+1}(E) = (E − b_k) P_k(E) − a_k P_{k−1}(E)` for hyperbolic kinds;
//! periodic kinds flip the diagonal sign: `P_{k+1} = (E + b_k) P_k − a_k P_{k−1}`,
//! which is exactly the anti-isospectral substitution `E ↦ −E` up to the
//! overall sign `(−1)^k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::families::{enumerate_hat_branches, make_tilde, FamilySpec, PotentialParams};

/// Coefficient overflow threshold for materialized polynomials.
const COEFF_LIMIT: f64 = 1e300;

/// A monic polynomial stored as ascending coefficients; `coeffs.last() == 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPoly {
    pub coeffs: Vec<f64>,
}

impl MonicPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, e: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * e + c;
        }
        acc
    }

    /// Largest coefficient magnitude — the natural scale for root residuals.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Σ |c_j| |e|^j — the magnitude actually handled while evaluating at e,
    /// and hence the right scale for evaluation-agreement checks (the value
    /// itself cancels to ~0 near roots).
    pub fn eval_abs(&self, e: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * e.abs() + c.abs();
        }
        acc
    }
}

/// Handle over one family spec exposing the polynomial sequence.
#[derive(Debug, Clone, Copy)]
pub struct PolyFamilyHandle {
    spec: FamilySpec,
}

impl PolyFamilyHandle {
    pub fn new(spec: FamilySpec) -> Self {
        PolyFamilyHandle { spec }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    /// Sign applied to b_k in the recurrence: −1 hyperbolic, +1 periodic.
    #[inline]
    fn diag_sign(&self) -> f64 {
        if self.spec.kind.is_periodic() {
            1.0
        } else {
            -1.0
        }
    }

    /// P_k(e) by forward recurrence.
    pub fn eval_poly(&self, k: usize, e: f64) -> f64 {
        let s = self.diag_sign();
        let mut pm = 0.0; // P_{-1}
        let mut p = 1.0; // P_0
        for i in 0..k {
            let next = (e + s * self.spec.b(i)) * p - self.spec.a(i) * pm;
            pm = p;
            p = next;
        }
        p
    }

    /// Coefficient vector of monic P_k, by running the recurrence on
    /// coefficient vectors. Flags overflow past 1e300.
    pub fn poly_coeffs(&self, k: usize) -> Result<MonicPoly, Error> {
        let s = self.diag_sign();
        let mut pm: Vec<f64> = vec![]; // P_{-1} = 0
        let mut p: Vec<f64> = vec![1.0]; // P_0 = 1
        for i in 0..k {
            let b = s * self.spec.b(i);
            let a = self.spec.a(i);
            let mut next = vec![0.0; p.len() + 1];
            for (j, &c) in p.iter().enumerate() {
                next[j + 1] += c; // E * P_i
                next[j] += b * c; // ± b_i * P_i
            }
            for (j, &c) in pm.iter().enumerate() {
                next[j] -= a * c; // − a_i * P_{i−1}
            }
            for &c in &next {
                if !c.is_finite() || c.abs() > COEFF_LIMIT {
                    return Err(Error::CoefficientOverflow { index: i + 1 });
                }
            }
            pm = p;
            p = next;
        }
        Ok(MonicPoly { coeffs: p })
    }

    /// The critical polynomial P_{n+1} (degree M for tilde kinds).
    pub fn critical_poly(&self) -> Result<MonicPoly, Error> {
        self.poly_coeffs(self.spec.critical_index())
    }

    /// The critical polynomial evaluated by recurrence (no coefficient
    /// materialization; preferred for root residuals).
    pub fn eval_critical(&self, e: f64) -> f64 {
        self.eval_poly(self.spec.critical_index(), e)
    }

    /// Monic tail factor Q_j with P_{n+1+j} = Q_j · P_{n+1}. Computed by the
    /// re-indexed recurrence (a_{n+1} = 0 splits the sequence), not division.
    pub fn tail_factor(&self, j: usize) -> Result<MonicPoly, Error> {
        let s = self.diag_sign();
        let base = self.spec.critical_index();
        let mut qm: Vec<f64> = vec![];
        let mut q: Vec<f64> = vec![1.0];
        for i in 0..j {
            let b = s * self.spec.b(base + i);
            let a = if i == 0 { 0.0 } else { self.spec.a(base + i) };
            let mut next = vec![0.0; q.len() + 1];
            for (jj, &c) in q.iter().enumerate() {
                next[jj + 1] += c;
                next[jj] += b * c;
            }
            for (jj, &c) in qm.iter().enumerate() {
                next[jj] -= a * c;
            }
            for &c in &next {
                if !c.is_finite() || c.abs() > COEFF_LIMIT {
                    return Err(Error::CoefficientOverflow { index: base + i + 1 });
                }
            }
            qm = q;
            q = next;
        }
        Ok(MonicPoly { coeffs: q })
    }
}

/// Max (relative) residual of the factorization P̃_M = Π_branches P̂_critical
/// over the given energy grid. The product runs over the hat branches of the
/// same (ζ, M); a single factor for M = 1.
pub fn check_tilde_hat_factorization(params: PotentialParams, grid: &[f64]) -> f64 {
    let tilde = PolyFamilyHandle::new(make_tilde(params, false));
    let hats: Vec<PolyFamilyHandle> = enumerate_hat_branches(params)
        .into_iter()
        .map(PolyFamilyHandle::new)
        .collect();
    let mut worst = 0.0f64;
    for &e in grid {
        let lhs = tilde.eval_critical(e);
        let mut rhs = 1.0;
        for h in &hats {
            rhs *= h.eval_critical(e);
        }
        let resid = (lhs - rhs).abs() / lhs.abs().max(1.0);
        worst = worst.max(resid);
    }
    worst
}

/// Max relative deviation from the duality identity
/// `P^per_k(E) = (−1)^k P_k(−E)` over k ≤ k_max and the energy grid.
/// Both handles must describe the same branch, one periodic and one
/// hyperbolic.
pub fn duality_residual(
    periodic: &PolyFamilyHandle,
    hyperbolic: &PolyFamilyHandle,
    k_max: usize,
    grid: &[f64],
) -> f64 {
    let ps = periodic.spec();
    let hs = hyperbolic.spec();
    assert!(ps.kind.is_periodic() && !hs.kind.is_periodic());
    assert_eq!(ps.kind.dual(), hs.kind);
    assert_eq!((ps.params, ps.n, ps.sigma, ps.eta), (hs.params, hs.n, hs.sigma, hs.eta));
    let mut worst = 0.0f64;
    for k in 0..=k_max {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        for &e in grid {
            let lhs = periodic.eval_poly(k, e);
            let rhs = sign * hyperbolic.eval_poly(k, -e);
            let resid = (lhs - rhs).abs() / rhs.abs().max(1.0);
            worst = worst.max(resid);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use approx::assert_relative_eq;

    fn params(zeta: f64, m: u32) -> PotentialParams {
        PotentialParams::new(zeta, m).unwrap()
    }

    /// Long division oracle: divide `num` by `den` (both monic), returning
    /// (quotient, max |remainder coeff|).
    fn divide_monic(num: &MonicPoly, den: &MonicPoly) -> (MonicPoly, f64) {
        let mut rem = num.coeffs.clone();
        let dn = den.degree();
        let mut quot = vec![0.0; num.degree() - dn + 1];
        for qi in (0..quot.len()).rev() {
            let c = rem[qi + dn];
            quot[qi] = c;
            for (j, &dc) in den.coeffs.iter().enumerate() {
                rem[qi + j] -= c * dc;
            }
        }
        let rmax = rem.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        (MonicPoly { coeffs: quot }, rmax)
    }

    #[test]
    fn normalization_p0_equals_one() {
        for spec in [
            make_tilde(params(1.0, 4), false),
            make_tilde(params(1.0, 4), true),
            FamilySpec::hat_branch(params(2.0, 5), 1, 0).unwrap(),
        ] {
            let h = PolyFamilyHandle::new(spec);
            assert_eq!(h.eval_poly(0, -3.7), 1.0);
            assert_eq!(h.poly_coeffs(0).unwrap().coeffs, vec![1.0]);
        }
    }

    #[test]
    fn tilde_closed_forms_match_m4() {
        // frozen degree ≤ 4 closed forms for the tilde family at M = 4
        for &z in &[0.5, 1.0, 2.0] {
            let h = PolyFamilyHandle::new(make_tilde(params(z, 4), false));
            let z2 = z * z;
            let want: [Vec<f64>; 5] = [
                vec![1.0],
                vec![-z2 - 7.0, 1.0],
                vec![z2 * z2 + 10.0 * z2 + 105.0, -2.0 * (z2 + 11.0), 1.0],
                vec![
                    -(z2 * z2 * z2 + 9.0 * z2 * z2 + 143.0 * z2 + 1575.0),
                    3.0 * z2 * z2 + 46.0 * z2 + 435.0,
                    -(3.0 * z2 + 37.0),
                    1.0,
                ],
                vec![
                    z2 * z2 * z2 * z2 + 4.0 * z2 * z2 * z2 + 86.0 * z2 * z2 + 1316.0 * z2
                        + 11025.0,
                    -4.0 * (z2 * z2 * z2 + 13.0 * z2 * z2 + 159.0 * z2 + 1155.0),
                    2.0 * (3.0 * z2 * z2 + 46.0 * z2 + 347.0),
                    -4.0 * (z2 + 11.0),
                    1.0,
                ],
            ];
            for (k, w) in want.iter().enumerate() {
                let got = h.poly_coeffs(k).unwrap();
                assert_eq!(got.degree(), k);
                for (g, c) in got.coeffs.iter().zip(w) {
                    assert_relative_eq!(g, c, max_relative = 1e-12, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn hat_closed_forms_match_m4() {
        for &z in &[0.5, 1.0, 2.0] {
            let hp = PolyFamilyHandle::new(FamilySpec::hat_branch(params(z, 4), 0, 1).unwrap());
            let hm = PolyFamilyHandle::new(FamilySpec::hat_branch(params(z, 4), 0, -1).unwrap());
            let z2 = z * z;
            let plus: [Vec<f64>; 3] = [
                vec![1.0],
                vec![-(z2 + 2.0 * z + 15.0), 1.0],
                vec![
                    z2 * z2 - 4.0 * z2 * z + 10.0 * z2 - 28.0 * z + 105.0,
                    -2.0 * (z2 - 2.0 * z + 11.0),
                    1.0,
                ],
            ];
            let minus: [Vec<f64>; 3] = [
                vec![1.0],
                vec![-(z2 + 6.0 * z + 15.0), 1.0],
                vec![
                    z2 * z2 + 4.0 * z2 * z + 10.0 * z2 + 28.0 * z + 105.0,
                    -2.0 * (z2 + 2.0 * z + 11.0),
                    1.0,
                ],
            ];
            for k in 0..=2 {
                let gp = hp.poly_coeffs(k).unwrap();
                let gm = hm.poly_coeffs(k).unwrap();
                for (g, c) in gp.coeffs.iter().zip(&plus[k]) {
                    assert_relative_eq!(g, c, max_relative = 1e-12, epsilon = 1e-12);
                }
                for (g, c) in gm.coeffs.iter().zip(&minus[k]) {
                    assert_relative_eq!(g, c, max_relative = 1e-12, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn eval_matches_pol3_value() {
        // tilde, M=4, zeta=1, k=2, E=0: E^2 - 24E + 116 at 0
        let h = PolyFamilyHandle::new(make_tilde(params(1.0, 4), false));
        assert_relative_eq!(h.eval_poly(2, 0.0), 116.0);
    }

    #[test]
    fn m1_critical_polys() {
        for &z in &[0.5, 1.0, 2.0] {
            let t = PolyFamilyHandle::new(make_tilde(params(z, 1), false));
            let got = t.critical_poly().unwrap();
            assert_relative_eq!(got.coeffs[0], -(1.0 + z * z), max_relative = 1e-14);
            assert_eq!(got.coeffs[1], 1.0);
        }
    }

    #[test]
    fn recurrence_and_coefficients_agree() {
        for m in 1..=12u32 {
            for &zeta in &[0.25, 1.0, 5.0] {
                let p = params(zeta, m);
                let scale = (zeta + m as f64) * (zeta + m as f64);
                let mut specs = enumerate_hat_branches(p);
                specs.push(make_tilde(p, false));
                specs.push(make_tilde(p, true));
                let periodic_hat = specs[0].to_periodic();
                specs.push(periodic_hat);
                for spec in specs {
                    let h = PolyFamilyHandle::new(spec);
                    for k in 0..=spec.n + 4 {
                        let poly = h.poly_coeffs(k).unwrap();
                        assert_eq!(poly.degree(), k);
                        assert_eq!(*poly.coeffs.last().unwrap(), 1.0);
                        for i in -8..=8 {
                            let e = scale * (i as f64) / 4.0;
                            let via_rec = h.eval_poly(k, e);
                            let via_coeff = poly.eval(e);
                            // scale by the evaluation magnitude: near roots the
                            // value cancels to ~0 and value-relative agreement
                            // is unattainable for any algorithm pair
                            let denom = poly.eval_abs(e).max(1.0);
                            assert!(
                                (via_rec - via_coeff).abs() / denom < 1e-10,
                                "M={m} zeta={zeta} k={k} e={e}: {via_rec} vs {via_coeff}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tail_factor_via_division_oracle() {
        // hat (0,+1), M=4, zeta=1: Q_1 must equal P_3 / P_2
        let h = PolyFamilyHandle::new(FamilySpec::hat_branch(params(1.0, 4), 0, 1).unwrap());
        let p3 = h.poly_coeffs(3).unwrap();
        let p2 = h.critical_poly().unwrap();
        let (q, rmax) = divide_monic(&p3, &p2);
        assert!(rmax <= 1e-9 * p3.coeff_scale());
        let q1 = h.tail_factor(1).unwrap();
        assert_eq!(q1.degree(), 1);
        for (g, w) in q1.coeffs.iter().zip(&q.coeffs) {
            assert_relative_eq!(g, w, max_relative = 1e-10, epsilon = 1e-10);
        }
        assert_eq!(h.tail_factor(0).unwrap().coeffs, vec![1.0]);
    }

    #[test]
    fn tail_factorization_pointwise() {
        // P_{n+1+j} = Q_j * P_{n+1} for j ≤ 4 across families
        for m in [1u32, 3, 4, 7, 10] {
            for &zeta in &[0.25, 1.0, 5.0] {
                let p = params(zeta, m);
                let mut specs = enumerate_hat_branches(p);
                specs.push(make_tilde(p, false));
                specs.push(make_tilde(p, true));
                for spec in specs {
                    let h = PolyFamilyHandle::new(spec);
                    let crit = h.spec().critical_index();
                    for j in 0..=4usize {
                        for i in -6..=6 {
                            let e = (zeta + m as f64) * (i as f64) / 2.0;
                            let lhs = h.eval_poly(crit + j, e);
                            let rhs = h.tail_factor(j).unwrap().eval(e) * h.eval_critical(e);
                            assert!(
                                (lhs - rhs).abs() / lhs.abs().max(1.0) < 1e-9,
                                "M={m} zeta={zeta} j={j} e={e}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let grid: Vec<f64> = (-16..=16).map(|i| i as f64 * 10.0 / 16.0).collect();
        assert!(check_tilde_hat_factorization(params(1.0, 4), &grid) <= 1e-9);
        assert!(check_tilde_hat_factorization(params(2.0, 1), &grid) <= 1e-12);
        assert!(check_tilde_hat_factorization(params(1.0, 5), &grid) <= 1e-9);
    }

    #[test]
    fn duality_examples() {
        let grid: Vec<f64> = (-8..=8).map(|i| i as f64 * 2.0).collect();
        let p = params(1.0, 3);
        let t = PolyFamilyHandle::new(make_tilde(p, false));
        let tp = PolyFamilyHandle::new(make_tilde(p, true));
        assert!(duality_residual(&tp, &t, 6, &grid) <= 1e-12);

        let p4 = params(1.0, 4);
        let h = PolyFamilyHandle::new(FamilySpec::hat_branch(p4, 0, 1).unwrap());
        let hp = PolyFamilyHandle::new(h.spec().to_periodic());
        assert!(duality_residual(&hp, &h, 7, &grid) <= 1e-12);

        // spot value: periodic tilde at (k=2, e=−5) equals hyperbolic at (2, +5)
        let tp4 = PolyFamilyHandle::new(make_tilde(p4, true));
        let t4 = PolyFamilyHandle::new(make_tilde(p4, false));
        assert_relative_eq!(tp4.eval_poly(2, -5.0), t4.eval_poly(2, 5.0), max_relative = 1e-14);
    }

    #[test]
    fn periodic_critical_coeffs_are_sign_flipped() {
        // periodic critical = (−1)^deg × (hyperbolic critical with E ↦ −E),
        // i.e. coefficient j picks up (−1)^{deg−j}
        for m in [2u32, 5, 8] {
            let p = params(1.5, m);
            for (hy, pe) in [
                (make_tilde(p, false), make_tilde(p, true)),
                (
                    enumerate_hat_branches(p)[0],
                    enumerate_hat_branches(p)[0].to_periodic(),
                ),
            ] {
                let ch = PolyFamilyHandle::new(hy).critical_poly().unwrap();
                let cp = PolyFamilyHandle::new(pe).critical_poly().unwrap();
                let deg = ch.degree();
                for j in 0..=deg {
                    let sign = if (deg - j) % 2 == 0 { 1.0 } else { -1.0 };
                    assert_relative_eq!(
                        cp.coeffs[j],
                        sign * ch.coeffs[j],
                        max_relative = 1e-14,
                        epsilon = 1e-14
                    );
                }
            }
        }
    }

    #[test]
    fn coefficient_overflow_is_flagged() {
        // gigantic zeta drives the constant term past 1e300 quickly
        let p = params(1e60, 8);
        let h = PolyFamilyHandle::new(make_tilde(p, false));
        match h.critical_poly() {
            Err(Error::CoefficientOverflow { .. }) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }
}
