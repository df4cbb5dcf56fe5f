//! Quasi-exactly solvable spectra for the hyperbolic Razavy potential
//! `V(x) = (ζ cosh 2x − M)²` and its trigonometric partner
//! `U(x) = −(ζ cos 2x − M)²`.
//!
//! For integer `M ≥ 1` the lowest `M` levels of `V` (and `M` selected band
//! edges of `U`) are roots of critical polynomials taken from two families of
//! weakly orthogonal polynomials defined by three-term recurrences. This crate
//! builds those families ([`families`], [`polyseq`]), extracts the algebraic
//! spectra and moment functionals ([`spectrum`]), realizes the eigenfunctions
//! in closed form ([`wavefunc`]), and checks everything against independent
//! matrix discretizations ([`oracle`]) including the band-gap placement rule
//! for the periodic problem ([`bands`]).
//!
//! The crate is `no_std` (with `alloc`); all floating-point special functions
//! go through [`libm`] so results do not depend on the host `std`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bands;
pub mod error;
pub mod families;
mod fp;
pub mod linalg;
pub mod oracle;
pub mod polyseq;
pub mod spectrum;
pub mod wavefunc;

pub use error::Error;
pub use families::{FamilyKind, FamilySpec, PotentialParams};
pub use polyseq::{MonicPoly, PolyFamilyHandle};
pub use spectrum::{CriticalSpectrum, JacobiMatrix, MomentFunctional, PositivityReport};
pub use wavefunc::{EigenfunctionSeries, Realization, SampledFunction, TrigForm};
