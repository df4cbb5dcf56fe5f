//! Algebraic eigenfunctions assembled from gauge factors and truncated
//! polynomial series, in every realization the two potentials admit, plus
//! the checks used to validate them: zero counting over a period, the
//! finite-(trigonometric-)solution test, and a high-order Schrödinger
//! residual.
//!
//! Double well `V(x) = (ζ cosh 2x − M)²`:
//!   * hat realization, `z = cosh 2x`:
//!     `ψ = (z−1)^{¼(1−σ−η)} (z+1)^{¼(1−σ+η)} e^{−ζz/2} Σ_k c_k (z+1)^k`
//!     with `c_k = P̂_k(E) / (2^k (2k+t)!)`, `t = (η−σ+1)/2 ∈ {0,1}`;
//!     the square-root factor `(z−1)^{1/2}` is taken as the signed
//!     `√2·sinh x`, so odd levels come out genuinely odd.
//!   * tilde realization, `z = e^{2x}`:
//!     `ψ = z^{(1−M)/2} e^{−(ζ/4)(z+1/z)} Σ_k c_k z^k`
//!     with `c_k = (−1)^k P̃_k(E) / ((2ζ)^k k!)`.
//!
//! Periodic potential `U(x) = −(ζ cos 2x − M)²`:
//!   * complex realization:
//!     `ψ = e^{−(ζ/2)cos 2x} e^{−i(M−1)x} Σ_{k<M} c_k e^{2ikx}`
//!     with real `c_k = P̃^per_k(E) / ((2ζ)^k k!)`.
//!   * four real shapes (even/odd M × even/odd about x = 0) built from the
//!     hat polynomials evaluated at −E; see [`TrigForm`].

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::families::{self, FamilySpec, PotentialParams};
use crate::fp;
use crate::polyseq::PolyFamilyHandle;

/// Residual tolerance of the series-truncation certificate: the first
/// coefficient past the stored series must vanish to this fraction of the
/// critical polynomial's magnitude scale.
const TRUNCATION_TOL: f64 = 1e-8;
/// Harmonics above the allowed cutoff must stay below this fraction of the
/// largest spectral magnitude for a sampled function to count as finite.
const FINITE_TOL: f64 = 1e-8;
/// Samples with |f| below this fraction of ‖f‖_∞ are treated as touching
/// zero when counting sign changes.
const TANGENT_FRAC: f64 = 1e-12;
/// Bisection stops once a zero is localized to a window this wide.
const ZERO_X_TOL: f64 = 1e-13;
/// The half-open counting window is shifted left by this much so a zero
/// sitting exactly on the period boundary is counted exactly once.
const WINDOW_SHIFT: f64 = 1e-9;
/// Points with |f| below this fraction of ‖f‖_∞ are excluded from
/// pointwise-ratio comparisons.
const RATIO_FLOOR: f64 = 1e-3;
/// Centered 8th-order second-derivative stencil (multiply by 1/h²).
const D2_STENCIL: [f64; 9] = [
    -1.0 / 560.0,
    8.0 / 315.0,
    -0.2,
    1.6,
    -205.0 / 72.0,
    1.6,
    -0.2,
    8.0 / 315.0,
    -1.0 / 560.0,
];

const TAU: f64 = core::f64::consts::TAU;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

fn cnorm(c: Complex64) -> f64 {
    fp::hypot(c.re, c.im)
}

/// The four real trigonometric eigenfunction shapes, classified by the
/// parity of M and the parity of the function about x = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigForm {
    /// M even, even about x = 0: `Σ_k c_k cos^{2k+1}x`, `c_k` from (σ=0, η=+1).
    Ee,
    /// M even, odd about x = 0: `sin x · Σ_k c_k cos^{2k}x`, from (σ=0, η=−1).
    Eo,
    /// M odd, even about x = 0: `Σ_k c_k cos^{2k}x`, from (σ=+1, η=0).
    Oe,
    /// M odd, odd about x = 0: `sin x · Σ_k c_k cos^{2k+1}x`, from (σ=−1, η=0).
    Oo,
}

impl TrigForm {
    pub const ALL: [TrigForm; 4] = [TrigForm::Ee, TrigForm::Eo, TrigForm::Oe, TrigForm::Oo];

    /// Hat branch (σ, η) whose polynomials build this shape.
    pub fn branch(self) -> (i8, i8) {
        match self {
            TrigForm::Ee => (0, 1),
            TrigForm::Eo => (0, -1),
            TrigForm::Oe => (1, 0),
            TrigForm::Oo => (-1, 0),
        }
    }

    pub fn from_branch(sigma: i8, eta: i8) -> Option<TrigForm> {
        TrigForm::ALL.into_iter().find(|f| f.branch() == (sigma, eta))
    }

    /// True when this shape belongs to even M (antiperiodic levels).
    pub fn wants_even_m(self) -> bool {
        matches!(self, TrigForm::Ee | TrigForm::Eo)
    }

    /// True when the shape carries a `sin x` factor (odd about x = 0).
    pub fn is_odd(self) -> bool {
        matches!(self, TrigForm::Eo | TrigForm::Oo)
    }

    /// True when the cosine powers in the series are odd (`cos^{2k+1}x`);
    /// these shapes use `(2k+1)!` denominators, the others `(2k)!`.
    fn cos_power_is_odd(self) -> bool {
        matches!(self, TrigForm::Ee | TrigForm::Oo)
    }

    pub fn label(self) -> &'static str {
        match self {
            TrigForm::Ee => "ee",
            TrigForm::Eo => "eo",
            TrigForm::Oe => "oe",
            TrigForm::Oo => "oo",
        }
    }

    /// Classical Ince-polynomial label the gauge-stripped shape is
    /// proportional to (metadata only; k is the series index, M−1 the order).
    pub fn ince_label(self) -> &'static str {
        match self {
            TrigForm::Ee => "C_{M-1}^{2k+1}",
            TrigForm::Eo => "S_{M-1}^{2k+1}",
            TrigForm::Oe => "C_{M-1}^{2k}",
            TrigForm::Oo => "S_{M-1}^{2k}",
        }
    }
}

/// Which gauge-times-series assembly an [`EigenfunctionSeries`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realization {
    /// Double well, series in z+1 with z = cosh 2x.
    HatCosh,
    /// Double well, series in z = e^{2x}.
    TildeExp,
    /// Periodic potential, complex form e^{−i(M−1)x} × polynomial in e^{2ix}.
    PeriodicComplex,
    /// Periodic potential, one of the four real shapes.
    PeriodicRealForm(TrigForm),
}

/// A truncated eigenfunction series: realization, energy, and the
/// normalized coefficients. Coefficients are real in every realization —
/// the complex form keeps its complexity in the basis functions.
///
/// Construction certifies the truncation: the first coefficient past the
/// stored series (index n+1) must vanish relative to the critical
/// polynomial's scale, which is exactly the statement that `energy` is an
/// algebraic (critical) energy.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenfunctionSeries {
    pub realization: Realization,
    pub energy: f64,
    pub coeffs: Vec<f64>,
    pub family: FamilySpec,
}

/// Fails with `EnergyNotCritical` unless `e` is a root of the handle's
/// critical polynomial, measured against the polynomial's magnitude scale.
fn certify_critical(handle: &PolyFamilyHandle, e: f64) -> Result<(), Error> {
    let crit = handle.critical_poly()?;
    let residual = handle.eval_critical(e).abs();
    let tol = TRUNCATION_TOL * crit.eval_abs(e).max(crit.coeff_scale());
    if residual > tol {
        return Err(Error::EnergyNotCritical { residual, tol });
    }
    Ok(())
}

/// Index shift of the factorial in the hat normalization, t = (η−σ+1)/2.
/// Integral on every valid branch; asserted rather than generalized.
fn factorial_shift(sigma: i8, eta: i8) -> usize {
    let num = 1 + eta as i32 - sigma as i32;
    assert!(num >= 0 && num % 2 == 0, "hat factorial shift must be a non-negative integer");
    (num / 2) as usize
}

fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
}

impl EigenfunctionSeries {
    /// Double-well eigenfunction for a hyperbolic family at one of its
    /// algebraic energies (hat or tilde realization, following the family).
    pub fn hyperbolic(family: FamilySpec, energy: f64) -> Result<Self, Error> {
        if family.kind.is_periodic() {
            return Err(Error::InvalidParams("hyperbolic series requires a hyperbolic family"));
        }
        let handle = PolyFamilyHandle::new(family);
        certify_critical(&handle, energy)?;
        let zeta = family.params.zeta();
        let mut coeffs = Vec::with_capacity(family.n + 1);
        let realization = if family.kind.is_hat() {
            let t = factorial_shift(family.sigma, family.eta);
            for k in 0..=family.n {
                let denom = fp::powi(2.0, k as i32) * factorial(2 * k + t);
                coeffs.push(handle.eval_poly(k, energy) / denom);
            }
            Realization::HatCosh
        } else {
            for k in 0..=family.n {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let denom = fp::powi(2.0 * zeta, k as i32) * factorial(k);
                coeffs.push(sign * handle.eval_poly(k, energy) / denom);
            }
            Realization::TildeExp
        };
        Ok(EigenfunctionSeries { realization, energy, coeffs, family })
    }

    /// Complex eigenfunction of the periodic potential at an algebraic
    /// energy (a root of the periodic tilde critical polynomial).
    pub fn periodic_complex(family: FamilySpec, energy: f64) -> Result<Self, Error> {
        if !family.kind.is_periodic() {
            return Err(Error::InvalidParams("periodic series requires a periodic family"));
        }
        let tilde = families::make_tilde(family.params, true);
        let handle = PolyFamilyHandle::new(tilde);
        certify_critical(&handle, energy)?;
        let zeta = tilde.params.zeta();
        let m = tilde.params.m_int() as usize;
        let mut coeffs = Vec::with_capacity(m);
        for k in 0..m {
            let denom = fp::powi(2.0 * zeta, k as i32) * factorial(k);
            coeffs.push(handle.eval_poly(k, energy) / denom);
        }
        Ok(EigenfunctionSeries {
            realization: Realization::PeriodicComplex,
            energy,
            coeffs,
            family: tilde,
        })
    }

    /// Real eigenfunction of the periodic potential in the requested shape.
    /// The shape must match the parity of M (and, when a hat branch is
    /// passed, that branch); the coefficients come from the matching hat
    /// branch's polynomials evaluated at −energy.
    pub fn periodic_real(family: FamilySpec, energy: f64, form: TrigForm) -> Result<Self, Error> {
        if !family.kind.is_periodic() {
            return Err(Error::FormMismatch);
        }
        let m = family.params.m_int();
        if form.wants_even_m() != (m % 2 == 0) {
            return Err(Error::FormMismatch);
        }
        let (sigma, eta) = form.branch();
        if family.kind.is_hat() && (family.sigma, family.eta) != (sigma, eta) {
            return Err(Error::FormMismatch);
        }
        let hat = FamilySpec::hat_branch(family.params, sigma, eta).map_err(|_| Error::FormMismatch)?;
        let handle = PolyFamilyHandle::new(hat);
        certify_critical(&handle, -energy)?;
        let mut coeffs = Vec::with_capacity(hat.n + 1);
        for k in 0..=hat.n {
            let denom = if form.cos_power_is_odd() {
                factorial(2 * k + 1)
            } else {
                factorial(2 * k)
            };
            coeffs.push(handle.eval_poly(k, -energy) / denom);
        }
        Ok(EigenfunctionSeries {
            realization: Realization::PeriodicRealForm(form),
            energy,
            coeffs,
            family: hat.to_periodic(),
        })
    }

    /// True for every realization except the complex periodic one.
    pub fn is_real(&self) -> bool {
        !matches!(self.realization, Realization::PeriodicComplex)
    }

    /// Evaluate a real realization at one point. For the complex
    /// realization this returns the real part; use [`Self::eval_complex`].
    pub fn eval_real(&self, x: f64) -> f64 {
        let zeta = self.family.params.zeta();
        match self.realization {
            Realization::HatCosh => {
                let z = fp::cosh(2.0 * x);
                let mut g = fp::exp(-0.5 * zeta * z);
                // (z−1)^{1/2} present when σ+η = −1, as the signed √2·sinh x;
                // (z+1)^{1/2} = √2·cosh x present when η−σ = +1.
                let sigma = self.family.sigma as i32;
                let eta = self.family.eta as i32;
                if sigma + eta == -1 {
                    g *= core::f64::consts::SQRT_2 * fp::sinh(x);
                }
                if eta - sigma == 1 {
                    g *= core::f64::consts::SQRT_2 * fp::cosh(x);
                }
                g * horner(&self.coeffs, z + 1.0)
            }
            Realization::TildeExp => {
                let z = fp::exp(2.0 * x);
                let g = fp::exp((1.0 - self.family.params.m()) * x - 0.5 * zeta * fp::cosh(2.0 * x));
                g * horner(&self.coeffs, z)
            }
            Realization::PeriodicRealForm(form) => {
                let c = fp::cos(x);
                let mut s = horner(&self.coeffs, c * c);
                if form.cos_power_is_odd() {
                    s *= c;
                }
                if form.is_odd() {
                    s *= fp::sin(x);
                }
                fp::exp(-0.5 * zeta * fp::cos(2.0 * x)) * s
            }
            Realization::PeriodicComplex => self.eval_complex(x).re,
        }
    }

    pub fn eval_complex(&self, x: f64) -> Complex64 {
        match self.realization {
            Realization::PeriodicComplex => {
                let w = Complex64::new(fp::cos(2.0 * x), fp::sin(2.0 * x));
                let s = self
                    .coeffs
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c);
                let ang = (self.family.params.m() - 1.0) * x;
                let phase = Complex64::new(fp::cos(ang), -fp::sin(ang));
                let g = fp::exp(-0.5 * self.family.params.zeta() * fp::cos(2.0 * x));
                phase * s * g
            }
            _ => Complex64::new(self.eval_real(x), 0.0),
        }
    }

    /// Sample onto a grid; real realizations yield real samples.
    pub fn sample(&self, xs: &[f64]) -> Result<SampledFunction, Error> {
        let domain = if self.family.kind.is_periodic() {
            Domain::Periodic
        } else {
            Domain::Line
        };
        let values = if self.is_real() {
            Samples::Real(xs.iter().map(|&x| self.eval_real(x)).collect())
        } else {
            Samples::Complex(xs.iter().map(|&x| self.eval_complex(x)).collect())
        };
        SampledFunction::new(xs.to_vec(), values, domain)
    }
}

/// Which x-domain a sampled function lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// The real line (double-well eigenfunctions).
    Line,
    /// A 2π-periodic coordinate (periodic-potential eigenfunctions; these
    /// have period 2π even when antiperiodic over π).
    Periodic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Samples {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

impl Samples {
    pub fn len(&self) -> usize {
        match self {
            Samples::Real(v) => v.len(),
            Samples::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Function values on a strictly increasing grid, all finite
/// (constructor-enforced).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    xs: Vec<f64>,
    values: Samples,
    domain: Domain,
}

impl SampledFunction {
    pub fn new(xs: Vec<f64>, values: Samples, domain: Domain) -> Result<Self, Error> {
        if xs.is_empty() || xs.len() != values.len() {
            return Err(Error::InvalidParams("sample grid and values must have equal nonzero length"));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) || xs.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("sample grid must be finite and strictly increasing"));
        }
        let finite = match &values {
            Samples::Real(v) => v.iter().all(|y| y.is_finite()),
            Samples::Complex(v) => v.iter().all(|y| y.re.is_finite() && y.im.is_finite()),
        };
        if !finite {
            return Err(Error::InvalidParams("sample values must be finite"));
        }
        Ok(SampledFunction { xs, values, domain })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &Samples {
        &self.values
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn real_values(&self) -> Option<&[f64]> {
        match &self.values {
            Samples::Real(v) => Some(v),
            Samples::Complex(_) => None,
        }
    }

    /// Value at index i as a complex number (real samples get a zero
    /// imaginary part).
    pub fn complex_value(&self, i: usize) -> Complex64 {
        match &self.values {
            Samples::Real(v) => Complex64::new(v[i], 0.0),
            Samples::Complex(v) => v[i],
        }
    }

    pub fn max_abs(&self) -> f64 {
        match &self.values {
            Samples::Real(v) => v.iter().fold(0.0f64, |a, &y| a.max(y.abs())),
            Samples::Complex(v) => v.iter().fold(0.0f64, |a, &y| a.max(cnorm(y))),
        }
    }
}

/// `count` evenly spaced points covering [−half_width, half_width],
/// endpoints included.
pub fn symmetric_grid(half_width: f64, count: usize) -> Vec<f64> {
    assert!(count >= 2 && half_width > 0.0);
    let h = 2.0 * half_width / (count - 1) as f64;
    (0..count).map(|j| -half_width + j as f64 * h).collect()
}

/// `count` points j·2π/count on [0, 2π) — one full period, endpoint excluded.
pub fn period_grid(count: usize) -> Vec<f64> {
    assert!(count >= 2);
    let h = TAU / count as f64;
    (0..count).map(|j| j as f64 * h).collect()
}

/// Default per-period sampling density for zero counting.
pub fn default_samples(m_int: u32) -> usize {
    1024 * (m_int as usize / 4).max(1)
}

/// Sample the double-well eigenfunction of a hyperbolic family at an
/// algebraic energy.
pub fn hyperbolic_eigenfunction(
    family: &FamilySpec,
    energy: f64,
    xs: &[f64],
) -> Result<SampledFunction, Error> {
    EigenfunctionSeries::hyperbolic(*family, energy)?.sample(xs)
}

/// Sample a periodic-potential eigenfunction at an algebraic energy:
/// `form = None` selects the complex realization, `Some(form)` the matching
/// real shape.
pub fn trig_eigenfunction(
    family: &FamilySpec,
    energy: f64,
    xs: &[f64],
    form: Option<TrigForm>,
) -> Result<SampledFunction, Error> {
    let series = match form {
        None => EigenfunctionSeries::periodic_complex(*family, energy)?,
        Some(f) => EigenfunctionSeries::periodic_real(*family, energy, f)?,
    };
    series.sample(xs)
}

/// Zeros found in a counting window: genuine sign changes, and tangential
/// touches (|f| below threshold with no sign change) reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroCount {
    pub crossings: usize,
    pub tangential: usize,
}

/// Scan samples for zeros inside `window` (half-open, shifted by
/// `WINDOW_SHIFT` so boundary zeros land on exactly one period's count).
/// `refine(xl, fl, xr, fr)` localizes a crossing bracketed by two samples.
fn scan_zeros(
    xs: &[f64],
    vals: &[f64],
    window: (f64, f64),
    refine: &dyn Fn(f64, f64, f64, f64) -> f64,
) -> ZeroCount {
    let lo = window.0 - WINDOW_SHIFT;
    let hi = window.1 - WINDOW_SHIFT;
    let in_window = |x: f64| x >= lo && x < hi;
    let max_abs = vals.iter().fold(0.0f64, |a, &y| a.max(y.abs()));
    let thresh = TANGENT_FRAC * max_abs;

    let mut crossings = 0usize;
    let mut tangential = 0usize;
    let mut prev: Option<(f64, f64)> = None; // last sample clear of the threshold
    let mut i = 0usize;
    while i < xs.len() {
        if vals[i].abs() <= thresh {
            let start = i;
            while i < xs.len() && vals[i].abs() <= thresh {
                i += 1;
            }
            let mid = 0.5 * (xs[start] + xs[i - 1]);
            let before = prev.map(|(_, f)| f > 0.0);
            let after = if i < xs.len() { Some(vals[i] > 0.0) } else { None };
            if in_window(mid) {
                match (before, after) {
                    (Some(b), Some(a)) if b != a => crossings += 1,
                    _ => tangential += 1,
                }
            }
            prev = None; // the run already accounted for any sign change
        } else {
            if let Some((xl, fl)) = prev {
                if (fl > 0.0) != (vals[i] > 0.0) {
                    let x = refine(xl, fl, xs[i], vals[i]);
                    if in_window(x) {
                        crossings += 1;
                    }
                }
            }
            prev = Some((xs[i], vals[i]));
            i += 1;
        }
    }
    ZeroCount { crossings, tangential }
}

/// Count zeros of real samples inside the half-open window. Crossings are
/// localized on the secant between bracketing samples; for boundary zeros
/// to be attributed correctly the grid should extend slightly past the
/// window on both sides (as [`count_series_zeros`] arranges).
pub fn count_zeros(f: &SampledFunction, window: (f64, f64)) -> Result<ZeroCount, Error> {
    let vals = f
        .real_values()
        .ok_or(Error::InvalidParams("zero counting requires real samples"))?;
    if !(window.1 > window.0) {
        return Err(Error::InvalidParams("zero-count window must have positive width"));
    }
    let inside = f.xs().iter().filter(|&&x| x >= window.0 && x < window.1).count();
    if inside < 16 {
        return Err(Error::GridTooCoarse);
    }
    Ok(scan_zeros(f.xs(), vals, window, &|xl, fl, xr, fr| {
        xl - fl * (xr - xl) / (fr - fl)
    }))
}

fn bisect_zero(f: &dyn Fn(f64) -> f64, mut a: f64, mut fa: f64, mut b: f64) -> f64 {
    if fa == 0.0 {
        return a;
    }
    while b - a > ZERO_X_TOL {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Count zeros of a real eigenfunction series inside the window, sampling
/// at `samples` points (at least 64) with a one-cell margin on both sides
/// and refining each crossing by bisection. The count is recomputed at
/// double density; a mismatch means the grid missed a close pair of zeros.
pub fn count_series_zeros(
    series: &EigenfunctionSeries,
    window: (f64, f64),
    samples: usize,
) -> Result<ZeroCount, Error> {
    if !series.is_real() {
        return Err(Error::InvalidParams("zero counting requires a real-valued realization"));
    }
    if !(window.1 > window.0) {
        return Err(Error::InvalidParams("zero-count window must have positive width"));
    }
    let f = |x: f64| series.eval_real(x);
    let count_at = |n: usize| -> ZeroCount {
        let h = (window.1 - window.0) / n as f64;
        let xs: Vec<f64> = (0..n + 3).map(|j| window.0 + (j as f64 - 1.0) * h).collect();
        let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        scan_zeros(&xs, &vals, window, &|xl, fl, xr, _fr| bisect_zero(&f, xl, fl, xr))
    };
    let n = samples.max(64);
    let coarse = count_at(n);
    let fine = count_at(2 * n + 1);
    // tangential touches are grid-sensitive by nature; stability is judged
    // on the crossing count alone
    if coarse.crossings != fine.crossings {
        return Err(Error::GridTooCoarse);
    }
    Ok(fine)
}

/// Outcome of the finite-solution test: after stripping the exponential
/// gauge, does the sampled function reduce to a trigonometric polynomial of
/// degree < M?
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSolutionReport {
    pub is_finite: bool,
    /// Highest harmonic of e^{ix} surviving above the detection threshold.
    pub trig_degree: usize,
    /// Largest above-cutoff harmonic magnitude relative to the spectral peak.
    pub residual: f64,
}

fn uniform_spacing(xs: &[f64]) -> Result<f64, Error> {
    if xs.len() < 2 {
        return Err(Error::GridTooCoarse);
    }
    let h = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    let tol = 1e-9 * h.max(1.0);
    if xs.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > tol) {
        return Err(Error::InvalidParams("grid must be uniformly spaced"));
    }
    Ok(h)
}

/// Multiply samples by e^{+(ζ/2)cos 2x} to strip the gauge, Fourier-analyze
/// over one 2π period, and test that no harmonic above M−1 survives.
/// The grid must be uniform with spacing h = 2π/N (endpoint excluded).
pub fn finite_solution_check(
    f: &SampledFunction,
    params: PotentialParams,
) -> Result<FiniteSolutionReport, Error> {
    let xs = f.xs();
    let n = xs.len();
    if n < 8 {
        return Err(Error::GridTooCoarse);
    }
    let h = uniform_spacing(xs)?;
    if (h * n as f64 - TAU).abs() > 1e-9 {
        return Err(Error::InvalidParams(
            "finite-solution check requires samples covering one 2\u{3c0} period",
        ));
    }
    let zeta = params.zeta();
    let stripped: Vec<Complex64> = (0..n)
        .map(|j| f.complex_value(j) * fp::exp(0.5 * zeta * fp::cos(2.0 * xs[j])))
        .collect();

    // naive DFT with exact angle reduction (indices mod n keep the twiddle
    // arguments small, so no precision is lost to huge angles)
    let twiddle: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = -TAU * k as f64 / n as f64;
            Complex64::new(fp::cos(ang), fp::sin(ang))
        })
        .collect();
    let mut mags = vec![0.0f64; n];
    for (m, mag) in mags.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &g) in stripped.iter().enumerate() {
            acc += g * twiddle[(m * j) % n];
        }
        *mag = cnorm(acc);
    }

    let peak = mags.iter().fold(0.0f64, |a, &b| a.max(b));
    if peak == 0.0 {
        return Ok(FiniteSolutionReport { is_finite: true, trig_degree: 0, residual: 0.0 });
    }
    let cutoff = (params.m_int() - 1) as usize;
    let mut trig_degree = 0usize;
    let mut worst = 0.0f64;
    for (m, &mag) in mags.iter().enumerate() {
        let freq = if m <= n / 2 { m } else { n - m };
        if mag > FINITE_TOL * peak && freq > trig_degree {
            trig_degree = freq;
        }
        if freq > cutoff {
            worst = worst.max(mag);
        }
    }
    let residual = worst / peak;
    Ok(FiniteSolutionReport { is_finite: residual <= FINITE_TOL, trig_degree, residual })
}

/// ‖−ψ″ + (V−E)ψ‖_∞ / ‖ψ‖_∞ with the second derivative taken by a centered
/// 8th-order stencil. Periodic-domain samples must cover exactly one 2π
/// period (the stencil then wraps around); line-domain residuals are taken
/// on the interior only.
pub fn schrodinger_residual<F: Fn(f64) -> f64>(
    f: &SampledFunction,
    potential: F,
    energy: f64,
) -> Result<f64, Error> {
    let xs = f.xs();
    let n = xs.len();
    if n < 16 {
        return Err(Error::GridTooCoarse);
    }
    let h = uniform_spacing(xs)?;
    let psi_max = f.max_abs();
    if psi_max == 0.0 {
        return Err(Error::InvalidParams("residual of the zero function is undefined"));
    }
    let periodic = f.domain() == Domain::Periodic;
    if periodic && (h * n as f64 - TAU).abs() > 1e-9 {
        return Err(Error::InvalidParams(
            "periodic residual requires samples covering one 2\u{3c0} period",
        ));
    }
    let inv_h2 = 1.0 / (h * h);
    let value = |i: isize| -> Complex64 {
        let idx = if periodic {
            i.rem_euclid(n as isize) as usize
        } else {
            i as usize
        };
        f.complex_value(idx)
    };
    let range = if periodic { 0..n } else { 4..n - 4 };
    let mut worst = 0.0f64;
    for i in range {
        let mut d2 = Complex64::new(0.0, 0.0);
        for (k, &w) in D2_STENCIL.iter().enumerate() {
            d2 += value(i as isize + k as isize - 4) * w;
        }
        d2 *= inv_h2;
        let r = -d2 + f.complex_value(i) * (potential(xs[i]) - energy);
        worst = worst.max(cnorm(r));
    }
    Ok(worst / psi_max)
}

/// Relative spread of the pointwise ratio g/f over samples where
/// |f| > 1e−3·‖f‖_∞: max |ratio − mean| / |mean|. The two functions must
/// share a grid. Small spread certifies proportionality.
pub fn ratio_spread(f: &SampledFunction, g: &SampledFunction) -> Result<f64, Error> {
    if f.xs() != g.xs() {
        return Err(Error::InvalidParams("ratio comparison requires a shared grid"));
    }
    let floor = RATIO_FLOOR * f.max_abs();
    let mut ratios: Vec<Complex64> = Vec::new();
    for i in 0..f.len() {
        if cnorm(f.complex_value(i)) > floor {
            ratios.push(g.complex_value(i) / f.complex_value(i));
        }
    }
    if ratios.is_empty() {
        return Err(Error::InvalidParams("no samples above the ratio floor"));
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    if cnorm(mean) == 0.0 {
        return Err(Error::InvalidParams("mean ratio vanishes"));
    }
    let spread = ratios.iter().fold(0.0f64, |a, &r| a.max(cnorm(r - mean)));
    Ok(spread / cnorm(mean))
}
