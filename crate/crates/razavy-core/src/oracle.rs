//! Independent numerical ground truth for both potentials.
//!
//! * Double well `V(x) = (ζ cosh 2x − M)²`: central finite differences on
//!   [−L, L] with Dirichlet ends, optionally Richardson-extrapolated in h².
//! * Periodic `U(x) = −(ζ cos 2x − M)²`: plane-wave (Floquet) basis
//!   `e^{i(2m+q)x}`, |m| ≤ K. `U` has exactly two cosine harmonics, so the
//!   matrix is real symmetric pentadiagonal and converges superexponentially
//!   in K; q = 0 gives π-periodic eigenvalues, q = 1 antiperiodic ones, and
//!   intermediate q traces out the bands.
//!
//! Neither solver sees the recurrence polynomials: agreement with the
//! algebraic energies is a genuine cross-check, not a tautology.

use alloc::vec::Vec;

use crate::error::Error;
use crate::families::PotentialParams;
use crate::linalg;

/// Default half-width of the finite-difference box.
pub const DEFAULT_HALF_WIDTH: f64 = 4.0;
/// Default number of interior finite-difference points.
pub const DEFAULT_FD_POINTS: usize = 4000;
/// Default plane-wave cutoff (basis size 2K+1).
pub const DEFAULT_BASIS_CUT: usize = 64;
/// The potential at the box edge must exceed the largest requested
/// eigenvalue by at least this margin.
const EDGE_MARGIN: f64 = 10.0;
/// Plane-wave eigenvalues must be stable to this tolerance under K → K+8.
const BASIS_STABILITY_TOL: f64 = 1e-10;
/// Interleaving violations beyond 1e−9·scale are errors.
const INTERLEAVE_TOL: f64 = 1e-9;

/// Finite-difference discretization parameters for the double well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdConfig {
    /// Domain is [−half_width, half_width].
    pub half_width: f64,
    /// Number of interior grid points.
    pub points: usize,
    /// Richardson-combine the `points` and `2·points` grids (h² error model).
    pub extrapolate: bool,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig { half_width: DEFAULT_HALF_WIDTH, points: DEFAULT_FD_POINTS, extrapolate: true }
    }
}

impl FdConfig {
    fn validate(&self) -> Result<(), Error> {
        if !(self.half_width > 0.0) || !self.half_width.is_finite() {
            return Err(Error::InvalidParams("finite-difference half_width must be positive"));
        }
        if self.points < 200 {
            return Err(Error::InvalidParams("finite-difference grid needs at least 200 points"));
        }
        Ok(())
    }
}

/// Lowest eigenvalues of −∂²_x + V on [−L, L] with Dirichlet ends, from the
/// three-point discretization with `n` interior points.
fn dirichlet_lowest(params: PotentialParams, half_width: f64, n: usize, count: usize) -> Vec<f64> {
    let h = 2.0 * half_width / (n + 1) as f64;
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(n);
    for i in 1..=n {
        let x = -half_width + i as f64 * h;
        diag.push(2.0 * inv_h2 + params.v_hyperbolic(x));
    }
    let sub = alloc::vec![-inv_h2; n - 1];
    linalg::symtri_lowest(&diag, &sub, count)
}

/// Lowest `count` bound states of the double well by finite differences.
/// With `cfg.extrapolate` the `N` and `2N` grids are Richardson-combined
/// under the h² error model. Fails with `DomainTooSmall` unless the
/// potential at the box edge dominates every returned level by a safe
/// margin.
pub fn bound_states_fd(
    params: PotentialParams,
    cfg: FdConfig,
    count: usize,
) -> Result<Vec<f64>, Error> {
    cfg.validate()?;
    if count == 0 || count > cfg.points / 10 {
        return Err(Error::InvalidParams("requested level count must be in 1..=N/10"));
    }
    let coarse = dirichlet_lowest(params, cfg.half_width, cfg.points, count);
    let levels = if cfg.extrapolate {
        let fine = dirichlet_lowest(params, cfg.half_width, 2 * cfg.points, count);
        let h1 = 2.0 * cfg.half_width / (cfg.points + 1) as f64;
        let h2 = 2.0 * cfg.half_width / (2 * cfg.points + 1) as f64;
        let (h1s, h2s) = (h1 * h1, h2 * h2);
        coarse
            .iter()
            .zip(&fine)
            .map(|(&e1, &e2)| (h1s * e2 - h2s * e1) / (h1s - h2s))
            .collect()
    } else {
        coarse
    };
    let v_edge = params.v_hyperbolic(cfg.half_width);
    let needed = levels.last().copied().unwrap_or(0.0) + EDGE_MARGIN;
    if v_edge < needed {
        return Err(Error::DomainTooSmall { v_edge, needed });
    }
    Ok(levels)
}

/// [`bound_states_fd`] with the default grid, growing the box from the
/// default half-width in steps of 0.5 until the edge-margin invariant
/// holds.
pub fn bound_states_auto(params: PotentialParams, count: usize) -> Result<Vec<f64>, Error> {
    let mut cfg = FdConfig::default();
    loop {
        match bound_states_fd(params, cfg, count) {
            Err(Error::DomainTooSmall { .. }) if cfg.half_width < 12.0 => {
                cfg.half_width += 0.5;
            }
            other => return other,
        }
    }
}

/// Lowest `count` eigenvalues of the periodic problem at Bloch parameter
/// `q` ∈ [0, 2] (q = 0 periodic over π, q = 1 antiperiodic), in the
/// plane-wave basis e^{i(2m+q)x} with |m| ≤ `basis_cut`. The expansion
/// U = −M² − ζ²/2 + 2Mζ cos 2x − (ζ²/2) cos 4x couples |m−m′| ∈ {1, 2}
/// only. Fails with `BasisTooSmall` unless every returned eigenvalue is
/// stable under `basis_cut` → `basis_cut`+8; the stable (larger-basis)
/// values are returned.
pub fn hill_eigenvalues(
    params: PotentialParams,
    q: f64,
    basis_cut: usize,
    count: usize,
) -> Result<Vec<f64>, Error> {
    if !(0.0..=2.0).contains(&q) {
        return Err(Error::InvalidParams("Bloch parameter q must lie in [0, 2]"));
    }
    if count == 0 || count > basis_cut {
        return Err(Error::InvalidParams("requested level count must be in 1..=K"));
    }
    let solve = |k: usize| -> Vec<f64> {
        let n = 2 * k + 1;
        let m = params.m();
        let zeta = params.zeta();
        let shift = -m * m - 0.5 * zeta * zeta;
        let near = m * zeta; // from 2Mζ cos 2x
        let far = -0.25 * zeta * zeta; // from −(ζ²/2) cos 4x
        let mut a = alloc::vec![0.0f64; n * n];
        for i in 0..n {
            let wave = 2.0 * (i as f64 - k as f64) + q;
            a[i * n + i] = wave * wave + shift;
            if i + 1 < n {
                a[i * n + i + 1] = near;
                a[(i + 1) * n + i] = near;
            }
            if i + 2 < n {
                a[i * n + i + 2] = far;
                a[(i + 2) * n + i] = far;
            }
        }
        linalg::dense_symmetric_lowest(&mut a, n, count)
    };
    let base = solve(basis_cut);
    let refined = solve(basis_cut + 8);
    let mut shift_max = 0.0f64;
    for (b, r) in base.iter().zip(&refined) {
        shift_max = shift_max.max((b - r).abs());
    }
    if shift_max > BASIS_STABILITY_TOL {
        return Err(Error::BasisTooSmall { shift: shift_max, tol: BASIS_STABILITY_TOL });
    }
    Ok(refined)
}

/// Periodic and antiperiodic eigenvalue lists bounding the first bands:
/// E_0 < Ē_1 ≤ Ē_2 < E_1 ≤ E_2 < Ē_3 ≤ Ē_4 < …
#[derive(Debug, Clone, PartialEq)]
pub struct BandEdges {
    pub periodic: Vec<f64>,
    pub antiperiodic: Vec<f64>,
}

impl BandEdges {
    /// Edge values merged in the interleaving order above.
    pub fn merged(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.periodic.len() + self.antiperiodic.len());
        let mut p = self.periodic.iter();
        let mut a = self.antiperiodic.iter();
        out.extend(p.next());
        loop {
            let pair_a: Vec<_> = a.by_ref().take(2).copied().collect();
            if pair_a.is_empty() {
                break;
            }
            out.extend(pair_a);
            let pair_p: Vec<_> = p.by_ref().take(2).copied().collect();
            if pair_p.is_empty() {
                break;
            }
            out.extend(pair_p);
        }
        out
    }

    fn check_interleaving(&self) -> Result<(), Error> {
        let merged = self.merged();
        let scale = merged.iter().fold(1.0f64, |s, &e| s.max(e.abs()));
        let tol = INTERLEAVE_TOL * scale;
        for (i, w) in merged.windows(2).enumerate() {
            if w[1] - w[0] < -tol {
                return Err(Error::OrderingViolation { index: i });
            }
        }
        Ok(())
    }
}

/// Band edges bounding the first `n_gaps` gaps of both types: the lowest
/// 2·n_gaps+1 periodic and 2·n_gaps antiperiodic eigenvalues, interleaving
/// verified. `basis_cut` as in [`hill_eigenvalues`].
pub fn band_edges_with(
    params: PotentialParams,
    n_gaps: usize,
    basis_cut: usize,
) -> Result<BandEdges, Error> {
    if n_gaps == 0 {
        return Err(Error::InvalidParams("need at least one gap"));
    }
    let periodic = hill_eigenvalues(params, 0.0, basis_cut, 2 * n_gaps + 1)?;
    let antiperiodic = hill_eigenvalues(params, 1.0, basis_cut, 2 * n_gaps)?;
    let edges = BandEdges { periodic, antiperiodic };
    edges.check_interleaving()?;
    Ok(edges)
}

/// [`band_edges_with`] at the default plane-wave cutoff.
pub fn band_edges(params: PotentialParams, n_gaps: usize) -> Result<BandEdges, Error> {
    band_edges_with(params, n_gaps, DEFAULT_BASIS_CUT)
}

/// Band functions on a uniform Bloch grid over [0, 2].
#[derive(Debug, Clone, PartialEq)]
pub struct Dispersion {
    pub q_grid: Vec<f64>,
    /// `bands[b][j]` = b-th eigenvalue at `q_grid[j]`.
    pub bands: Vec<Vec<f64>>,
}

/// The first `n_bands` band functions sampled at `q_points` points across
/// [0, 2], continuity-checked: sorted eigenvalue curves of a smooth
/// one-parameter family are continuous, so any jump beyond the local slope
/// scale indicates a solver fault.
pub fn dispersion(
    params: PotentialParams,
    q_points: usize,
    n_bands: usize,
) -> Result<Dispersion, Error> {
    if q_points < 16 {
        return Err(Error::InvalidParams("dispersion needs at least 16 q points"));
    }
    let q_grid: Vec<f64> =
        (0..q_points).map(|j| 2.0 * j as f64 / (q_points - 1) as f64).collect();
    let mut columns = Vec::with_capacity(q_points);
    for &q in &q_grid {
        columns.push(hill_eigenvalues(params, q, DEFAULT_BASIS_CUT, n_bands)?);
    }
    let mut bands = Vec::with_capacity(n_bands);
    for b in 0..n_bands {
        bands.push(columns.iter().map(|c| c[b]).collect::<Vec<f64>>());
    }
    let scale = bands
        .iter()
        .flatten()
        .fold(1.0f64, |s, &e| s.max(e.abs()));
    for (b, band) in bands.iter().enumerate() {
        let jumps: Vec<f64> = band.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
        for (j, &d) in jumps.iter().enumerate() {
            let left = if j > 0 { jumps[j - 1] } else { f64::INFINITY };
            let right = if j + 1 < jumps.len() { jumps[j + 1] } else { f64::INFINITY };
            if d > 4.0 * left.min(right) + 1e-8 * scale {
                return Err(Error::BandDiscontinuity { band: b });
            }
        }
    }
    Ok(Dispersion { q_grid, bands })
}
