//! Error type shared by every module in the crate.

use core::fmt;

/// Everything that can go wrong while building families, extracting spectra,
/// or running the numerical cross-checks. Each variant names the violated
/// invariant; payloads carry the offending magnitudes so callers can report
/// them without re-deriving anything.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Parameter domain violation: ζ must be finite and > 0, M ≥ 1.
    InvalidParams(&'static str),
    /// Requested hat branch does not exist for the given parity of M.
    InvalidBranch { m_int: u32, sigma: i8, eta: i8 },
    /// A polynomial coefficient exceeded 1e300 in magnitude; the coefficient
    /// expansion is no longer trustworthy at this degree.
    CoefficientOverflow { index: usize },
    /// Imaginary part of a critical root exceeded the realness tolerance.
    RootsNotReal { max_imag: f64, tol: f64 },
    /// Two critical roots closer than the coincidence tolerance.
    RootsCoincide { separation: f64, tol: f64 },
    /// Linear system for the moment weights is numerically singular.
    SingularSystem,
    /// An eigenfunction was requested at an energy that is not a root of the
    /// critical polynomial.
    EnergyNotCritical { residual: f64, tol: f64 },
    /// Eigenfunction form incompatible with the family kind (e.g. a complex
    /// Bloch series for a hyperbolic family).
    FormMismatch,
    /// Zero counting: doubling the sample grid changed the count.
    GridTooCoarse,
    /// Finite-difference domain too small: V at the boundary does not clear
    /// the largest requested eigenvalue by the required margin.
    DomainTooSmall { v_edge: f64, needed: f64 },
    /// Plane-wave basis too small: the top requested eigenvalue still moves
    /// by more than the stability tolerance when the cutoff grows.
    BasisTooSmall { shift: f64, tol: f64 },
    /// A matched band edge and algebraic level disagree beyond tolerance.
    EdgeMismatch { edge: f64, algebraic: f64, tol: f64 },
    /// Band edges violate the periodic/antiperiodic interleaving order.
    OrderingViolation { index: usize },
    /// A band sheet jumped discontinuously between adjacent Bloch momenta.
    BandDiscontinuity { band: usize },
    /// An iterative eigenvalue sweep failed to converge.
    NoConvergence,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidBranch { m_int, sigma, eta } => write!(
                f,
                "no hat branch (sigma={sigma}, eta={eta}) exists for M={m_int}"
            ),
            Error::CoefficientOverflow { index } => write!(
                f,
                "polynomial coefficient overflow past 1e300 at index {index}"
            ),
            Error::RootsNotReal { max_imag, tol } => write!(
                f,
                "critical roots not real: |Im| = {max_imag:e} exceeds {tol:e}"
            ),
            Error::RootsCoincide { separation, tol } => write!(
                f,
                "critical roots coincide: separation {separation:e} below {tol:e}"
            ),
            Error::SingularSystem => write!(f, "moment system is numerically singular"),
            Error::EnergyNotCritical { residual, tol } => write!(
                f,
                "energy is not a critical root: |P(E)| = {residual:e} exceeds {tol:e}"
            ),
            Error::FormMismatch => write!(f, "eigenfunction form incompatible with family kind"),
            Error::GridTooCoarse => write!(f, "zero count unstable under grid refinement"),
            Error::DomainTooSmall { v_edge, needed } => write!(
                f,
                "potential at the box edge ({v_edge:.3}) below required {needed:.3}"
            ),
            Error::BasisTooSmall { shift, tol } => write!(
                f,
                "plane-wave cutoff too small: top eigenvalue shifted {shift:e} > {tol:e}"
            ),
            Error::EdgeMismatch { edge, algebraic, tol } => write!(
                f,
                "band edge {edge:.12} does not match algebraic level {algebraic:.12} within {tol:e}"
            ),
            Error::OrderingViolation { index } => {
                write!(f, "band-edge interleaving violated at position {index}")
            }
            Error::BandDiscontinuity { band } => {
                write!(f, "dispersion sheet {band} is discontinuous in q")
            }
            Error::NoConvergence => write!(f, "eigenvalue iteration failed to converge"),
        }
    }
}
