//! Thin floating-point shim over `libm`.
//!
//! `f64::sqrt` and friends live in `std`, which this crate does not assume.
//! Routing every transcendental through `libm` keeps the numerics identical
//! whether the crate is built for a hosted target or not.

#![allow(dead_code)]

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub(crate) fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

pub(crate) fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

/// Integer power by repeated squaring (exact operation sequence, no_std-safe).
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    let (mut base, mut e) = if n < 0 { (1.0 / x, -(n as i64)) } else { (x, n as i64) };
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Fortran-style transfer of sign: |a| with the sign of b.
pub(crate) fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}
