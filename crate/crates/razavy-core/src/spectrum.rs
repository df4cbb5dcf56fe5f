//! Algebraic spectra as Jacobi-matrix eigenproblems, moment functionals of
//! the weakly orthogonal families, and the positivity/norm identities.
//!
//! Roots of the critical polynomial are computed from the companion
//! tridiagonal of the monic recurrence rather than from monomial
//! coefficients (whose conditioning is hopeless at large ζ). Tilde families
//! have a_k > 0 and symmetrize exactly (off-diagonals √a_k); hat families
//! have a_k < 0, so their balanced tridiagonal is genuinely nonsymmetric and
//! goes through the Hessenberg QR path, with any discarded imaginary parts
//! surfaced for auditability.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fp;
use crate::linalg;
use crate::polyseq::PolyFamilyHandle;

/// Realness tolerance for hat-family roots, relative to ‖T‖_∞.
const IMAG_TOL: f64 = 1e-8;
/// Distinctness tolerance, relative to max(1, ‖T‖_∞).
const SEP_TOL: f64 = 1e-10;
/// Residual bound for the moment-weight linear system.
const MOMENT_RESIDUAL_TOL: f64 = 1e-8;

/// Companion tridiagonal of the critical polynomial: `diag` = ±b_0..±b_n
/// (sign flipped for periodic kinds), `sub`/`sup` balanced so that
/// sub[i]·sup[i] = a_{i+1}. For tilde kinds sub = sup = √a (symmetric);
/// for hat kinds sup carries the sign of a (a_k < 0).
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiMatrix {
    pub diag: Vec<f64>,
    pub sub: Vec<f64>,
    pub sup: Vec<f64>,
}

impl JacobiMatrix {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }

    /// ∞-norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut s = self.diag[i].abs();
            if i > 0 {
                s += self.sub[i - 1].abs();
            }
            if i + 1 < n {
                s += self.sup[i].abs();
            }
            worst = worst.max(s);
        }
        worst
    }

    /// Dense row-major copy (upper Hessenberg by construction).
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.size();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = self.diag[i];
            if i + 1 < n {
                a[(i + 1) * n + i] = self.sub[i];
                a[i * n + i + 1] = self.sup[i];
            }
        }
        a
    }
}

/// Balanced companion tridiagonal whose eigenvalues are the roots of the
/// critical polynomial of `handle`.
pub fn jacobi_matrix(handle: &PolyFamilyHandle) -> JacobiMatrix {
    let spec = handle.spec();
    let n = spec.n;
    let dsign = if spec.kind.is_periodic() { -1.0 } else { 1.0 };
    let diag: Vec<f64> = (0..=n).map(|k| dsign * spec.b(k)).collect();
    let mut sub = Vec::with_capacity(n);
    let mut sup = Vec::with_capacity(n);
    for k in 1..=n {
        let a = spec.a(k);
        let r = fp::sqrt(a.abs());
        sub.push(r);
        sup.push(if a < 0.0 { -r } else { r });
    }
    JacobiMatrix { diag, sub, sup }
}

/// The sorted roots of a critical polynomial plus the bookkeeping the
/// numerics produced on the way: the largest imaginary part that was
/// discarded (hat kinds; 0 for tilde) and the smallest gap between
/// consecutive roots (`None` for a single root).
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalSpectrum {
    pub energies: Vec<f64>,
    pub max_imag_discarded: f64,
    pub min_root_separation: Option<f64>,
}

/// Roots of the critical polynomial of `handle`, sorted ascending.
///
/// Tilde kinds go through the symmetric-tridiagonal QL path (roots provably
/// real); hat kinds through Hessenberg QR with a realness check, followed by
/// a cross-check against the tilde critical polynomial (every hat root must
/// also be a root of P̃_M by the factorization identity).
pub fn algebraic_energies(handle: &PolyFamilyHandle) -> Result<CriticalSpectrum, Error> {
    let spec = handle.spec();
    let jm = jacobi_matrix(handle);
    let scale = jm.norm_inf().max(1.0);

    let mut energies;
    let mut max_imag = 0.0f64;
    if spec.kind.is_hat() {
        let n = jm.size();
        let mut dense = jm.to_dense();
        let roots = linalg::hessenberg_eigenvalues(&mut dense, n)?;
        let tol = IMAG_TOL * scale;
        energies = Vec::with_capacity(n);
        for (re, im) in roots {
            if im.abs() > tol {
                return Err(Error::RootsNotReal { max_imag: im.abs(), tol });
            }
            max_imag = max_imag.max(im.abs());
            energies.push(re);
        }
        energies.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite roots"));

        // factorization cross-check: hat roots are roots of the tilde critical
        let tilde = PolyFamilyHandle::new(crate::families::make_tilde(
            spec.params,
            spec.kind.is_periodic(),
        ));
        let tilde_coeffs = tilde.critical_poly()?;
        for &e in &energies {
            let resid = tilde.eval_critical(e).abs();
            let rscale = tilde_coeffs.eval_abs(e).max(tilde_coeffs.coeff_scale());
            if resid > 1e-8 * rscale {
                return Err(Error::EnergyNotCritical { residual: resid, tol: 1e-8 * rscale });
            }
        }
    } else {
        energies = linalg::symtri_eigenvalues(&jm.diag, &jm.sub)?;
    }

    let mut min_sep = None;
    for w in energies.windows(2) {
        let gap = w[1] - w[0];
        if gap < SEP_TOL * scale {
            return Err(Error::RootsCoincide { separation: gap, tol: SEP_TOL * scale });
        }
        min_sep = Some(min_sep.map_or(gap, |m: f64| m.min(gap)));
    }

    Ok(CriticalSpectrum { energies, max_imag_discarded: max_imag, min_root_separation: min_sep })
}

/// The discrete moment functional L = Σ_k ω_k δ(E − E_k) of a family:
/// nodes are the critical roots, weights solve Σ_k P_l(E_k) ω_k = δ_{l0}.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentFunctional {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl MomentFunctional {
    /// L applied to an arbitrary function of E.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&e, &w)| w * f(e)).sum()
    }
}

/// Solve the defining (n+1)×(n+1) system for the weights.
pub fn moment_functional(handle: &PolyFamilyHandle) -> Result<MomentFunctional, Error> {
    let nodes = algebraic_energies(handle)?.energies;
    let n = nodes.len();
    let mut a = vec![0.0; n * n];
    for l in 0..n {
        for (k, &e) in nodes.iter().enumerate() {
            a[l * n + k] = handle.eval_poly(l, e);
        }
    }
    let a_orig = a.clone();
    let mut rhs = vec![0.0; n];
    rhs[0] = 1.0;
    linalg::solve_dense(&mut a, n, &mut rhs)?;
    // defensive residual check on the original system
    let mut resid = 0.0f64;
    let mut row_scale = 1.0f64;
    for l in 0..n {
        let mut s = 0.0;
        for k in 0..n {
            s += a_orig[l * n + k] * rhs[k];
            row_scale = row_scale.max(a_orig[l * n + k].abs());
        }
        let want = if l == 0 { 1.0 } else { 0.0 };
        resid = resid.max((s - want).abs());
    }
    if resid > MOMENT_RESIDUAL_TOL * row_scale {
        return Err(Error::SingularSystem);
    }
    Ok(MomentFunctional { nodes, weights: rhs })
}

/// The two sides of the positivity criterion: ω_k > 0 for all k if and only
/// if a_k > 0 for 0 < k ≤ n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositivityReport {
    pub all_weights_positive: bool,
    pub a_signs_ok: bool,
    pub consistent: bool,
}

pub fn positivity_report(handle: &PolyFamilyHandle) -> Result<PositivityReport, Error> {
    let mf = moment_functional(handle)?;
    let all_weights_positive = mf.weights.iter().all(|&w| w > 0.0);
    let spec = handle.spec();
    let a_signs_ok = (1..=spec.n).all(|k| spec.a(k) > 0.0);
    Ok(PositivityReport {
        all_weights_positive,
        a_signs_ok,
        consistent: all_weights_positive == a_signs_ok,
    })
}

/// L(P_k²) for k = 0..k_max, evaluated through the moment functional.
/// Analytically equals Π_{j≤k} a_j for k ≤ n and 0 beyond.
pub fn norm_sequence(handle: &PolyFamilyHandle, k_max: usize) -> Result<Vec<f64>, Error> {
    let mf = moment_functional(handle)?;
    Ok((0..=k_max)
        .map(|k| mf.apply(|e| { let p = handle.eval_poly(k, e); p * p }))
        .collect())
}
