//! Polynomial-family definitions: potential parameters, branch enumeration,
//! and the three-term recurrence coefficients for the hat and tilde families
//! of weakly orthogonal polynomials, together with their periodic duals.
//!
//! Branch bookkeeping for the hat family (`M = 2(n+1) − σ`):
//!
//! | σ  | η  | M      | n         |
//! |----|----|--------|-----------|
//! | +1 |  0 | odd    | (M−1)/2   |
//! | −1 |  0 | odd ≥3 | (M−3)/2   |
//! |  0 | +1 | even   | M/2 − 1   |
//! |  0 | −1 | even   | M/2 − 1   |
//!
//! For `M = 1` only (σ=+1, η=0) exists. The tilde family always has
//! `n = M − 1`.

use alloc::vec::Vec;

use crate::error::Error;

/// Parameters of the potential pair `V(x) = (ζ cosh 2x − M)²` and
/// `U(x) = −(ζ cos 2x − M)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    zeta: f64,
    m_int: u32,
}

impl PotentialParams {
    /// ζ must be finite and strictly positive, M ≥ 1. ζ = 0 collapses the
    /// recurrence (every a_k vanishes), so it is rejected here rather than
    /// special-cased downstream.
    pub fn new(zeta: f64, m_int: u32) -> Result<Self, Error> {
        if !zeta.is_finite() || zeta <= 0.0 {
            return Err(Error::InvalidParams("zeta must be finite and > 0"));
        }
        if m_int < 1 {
            return Err(Error::InvalidParams("M must be a positive integer"));
        }
        Ok(PotentialParams { zeta, m_int })
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn m_int(&self) -> u32 {
        self.m_int
    }

    pub fn m(&self) -> f64 {
        self.m_int as f64
    }

    /// Double-well potential `V(x) = (ζ cosh 2x − M)²`.
    pub fn v_hyperbolic(&self, x: f64) -> f64 {
        let t = self.zeta * crate::fp::cosh(2.0 * x) - self.m();
        t * t
    }

    /// Periodic potential `U(x) = −(ζ cos 2x − M)²`.
    pub fn u_periodic(&self, x: f64) -> f64 {
        let t = self.zeta * crate::fp::cos(2.0 * x) - self.m();
        -(t * t)
    }
}

/// Which of the four polynomial families a spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    HyperbolicHat,
    HyperbolicTilde,
    PeriodicHat,
    PeriodicTilde,
}

impl FamilyKind {
    pub fn is_periodic(self) -> bool {
        matches!(self, FamilyKind::PeriodicHat | FamilyKind::PeriodicTilde)
    }

    pub fn is_hat(self) -> bool {
        matches!(self, FamilyKind::HyperbolicHat | FamilyKind::PeriodicHat)
    }

    /// Hyperbolic ↔ periodic partner of the same family.
    pub fn dual(self) -> FamilyKind {
        match self {
            FamilyKind::HyperbolicHat => FamilyKind::PeriodicHat,
            FamilyKind::PeriodicHat => FamilyKind::HyperbolicHat,
            FamilyKind::HyperbolicTilde => FamilyKind::PeriodicTilde,
            FamilyKind::PeriodicTilde => FamilyKind::HyperbolicTilde,
        }
    }
}

/// One concrete polynomial family: kind, parameters, and the branch data
/// (n, σ, η). Immutable after construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: PotentialParams,
    pub n: usize,
    pub sigma: i8,
    pub eta: i8,
    branch_label: &'static str,
}

/// Recurrence coefficients materialized up to a fixed index.
/// `a` is indexed from k = 1 (entry `a[k]`; `a[0]` is stored as 0 and never
/// read), `b` from k = 0. Both families force `a_{n+1} = 0` exactly, which is
/// what truncates the eigenfunction series at the critical index.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl RecurrenceCoeffs {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }
}

/// The hat branches compatible with M, in the fixed order
/// (σ=+1), (σ=−1) for odd M and (η=+1), (η=−1) for even M.
/// M = 1 admits the single branch (σ=+1, η=0, n=0).
pub fn enumerate_hat_branches(params: PotentialParams) -> Vec<FamilySpec> {
    let m = params.m_int();
    let mut out = Vec::new();
    if m == 1 {
        out.push(FamilySpec {
            kind: FamilyKind::HyperbolicHat,
            params,
            n: 0,
            sigma: 1,
            eta: 0,
            branch_label: "sigma=+1",
        });
    } else if m % 2 == 1 {
        // M odd: η = 0, σ = ±1, n = (M + σ)/2 − 1, i.e. M = 2(n+1) − σ.
        out.push(FamilySpec {
            kind: FamilyKind::HyperbolicHat,
            params,
            n: ((m + 1) / 2 - 1) as usize,
            sigma: 1,
            eta: 0,
            branch_label: "sigma=+1",
        });
        out.push(FamilySpec {
            kind: FamilyKind::HyperbolicHat,
            params,
            n: ((m - 1) / 2 - 1) as usize,
            sigma: -1,
            eta: 0,
            branch_label: "sigma=-1",
        });
    } else {
        // M even: σ = 0, η = ±1, n = M/2 − 1.
        for (eta, branch_label) in [(1, "eta=+1"), (-1, "eta=-1")] {
            out.push(FamilySpec {
                kind: FamilyKind::HyperbolicHat,
                params,
                n: (m / 2 - 1) as usize,
                sigma: 0,
                eta,
                branch_label,
            });
        }
    }
    out
}

/// The tilde family for the given parameters (n = M − 1); `periodic` selects
/// the anti-isospectral partner.
pub fn make_tilde(params: PotentialParams, periodic: bool) -> FamilySpec {
    FamilySpec {
        kind: if periodic {
            FamilyKind::PeriodicTilde
        } else {
            FamilyKind::HyperbolicTilde
        },
        params,
        n: (params.m_int() - 1) as usize,
        sigma: 0,
        eta: 0,
        branch_label: "tilde",
    }
}

impl FamilySpec {
    /// Look up a single hat branch by (σ, η).
    pub fn hat_branch(params: PotentialParams, sigma: i8, eta: i8) -> Result<FamilySpec, Error> {
        enumerate_hat_branches(params)
            .into_iter()
            .find(|s| s.sigma == sigma && s.eta == eta)
            .ok_or(Error::InvalidBranch {
                m_int: params.m_int(),
                sigma,
                eta,
            })
    }

    pub fn branch_label(&self) -> &'static str {
        self.branch_label
    }

    /// Same branch, periodic kind.
    pub fn to_periodic(&self) -> FamilySpec {
        let mut s = *self;
        s.kind = match s.kind {
            FamilyKind::HyperbolicHat | FamilyKind::PeriodicHat => FamilyKind::PeriodicHat,
            _ => FamilyKind::PeriodicTilde,
        };
        s
    }

    /// Same branch, hyperbolic kind.
    pub fn to_hyperbolic(&self) -> FamilySpec {
        let mut s = *self;
        s.kind = match s.kind {
            FamilyKind::HyperbolicHat | FamilyKind::PeriodicHat => FamilyKind::HyperbolicHat,
            _ => FamilyKind::HyperbolicTilde,
        };
        s
    }

    /// Index of the critical polynomial: n+1 (equals M for tilde kinds).
    pub fn critical_index(&self) -> usize {
        self.n + 1
    }

    /// a_k of the three-term recurrence, k ≥ 1. Vanishes identically at
    /// k = n+1 in both families (factor k−n−1 resp. n+1−k).
    pub fn a(&self, k: usize) -> f64 {
        let zeta = self.params.zeta();
        let kf = k as f64;
        let nf = self.n as f64;
        if self.kind.is_hat() {
            16.0 * zeta * kf * (2.0 * kf - self.sigma as f64 + self.eta as f64) * (kf - nf - 1.0)
        } else {
            4.0 * kf * (nf + 1.0 - kf) * zeta * zeta
        }
    }

    /// b_k of the three-term recurrence, k ≥ 0.
    pub fn b(&self, k: usize) -> f64 {
        let zeta = self.params.zeta();
        let kf = k as f64;
        let nf = self.n as f64;
        if self.kind.is_hat() {
            let sf = self.sigma as f64;
            let ef = self.eta as f64;
            -4.0 * kf * (kf + 1.0 - sf + 2.0 * zeta)
                + (2.0 * nf + 1.0) * (2.0 * (nf - sf) + 3.0)
                + zeta * (zeta - 2.0 * ef + 4.0 * nf)
        } else {
            4.0 * kf * (nf - kf) + 2.0 * nf + 1.0 + zeta * zeta
        }
    }

    /// Materialize a_1..a_{k_max} and b_0..b_{k_max}. Periodic kinds return
    /// the same arrays as their hyperbolic base; the sign flip enters through
    /// the recurrence (`P^per_{k+1} = (E + b_k) P^per_k − a_k P^per_{k−1}`).
    pub fn coeffs(&self, k_max: usize) -> RecurrenceCoeffs {
        let mut a = Vec::with_capacity(k_max + 1);
        let mut b = Vec::with_capacity(k_max + 1);
        a.push(0.0);
        b.push(self.b(0));
        for k in 1..=k_max {
            a.push(self.a(k));
            b.push(self.b(k));
        }
        RecurrenceCoeffs { a, b }
    }
}
