//! Dense/tridiagonal eigenvalue kernels and a pivoted linear solver.
//!
//! Everything here is a small, allocation-light port of the classical
//! EISPACK/Numerical-Recipes routines, specialized to what the crate needs:
//!
//! * implicit-QL for all eigenvalues of a symmetric tridiagonal matrix,
//! * Sturm-sequence bisection for the lowest few eigenvalues of a large
//!   symmetric tridiagonal matrix (finite-difference grids),
//! * Householder reduction of a dense symmetric matrix to tridiagonal form
//!   (plane-wave Hamiltonians),
//! * Francis double-shift QR for real upper-Hessenberg matrices (hat-family
//!   Jacobi matrices, which cannot be symmetrized),
//! * scaled partial-pivot Gaussian elimination (moment-weight systems).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::fp;

const MAX_QL_SWEEPS: usize = 50;
const MAX_QR_SWEEPS: usize = 60;

/// All eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
/// and subdiagonal `sub` (`sub.len() == diag.len() - 1`), sorted ascending.
/// Implicit QL with Wilkinson shifts.
pub fn symtri_eigenvalues(diag: &[f64], sub: &[f64]) -> Result<Vec<f64>, Error> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    debug_assert_eq!(sub.len(), n - 1);
    let mut d = diag.to_vec();
    let mut e = sub.to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = fp::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + fp::sign(r, g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = fp::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    // rotation annihilated early: split and restart this l
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_unstable_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(d)
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `x`, by the Sturm sequence of LDLᵀ pivots.
fn sturm_count_below(diag: &[f64], sub: &[f64], x: f64) -> usize {
    let n = diag.len();
    // Guard against exactly-zero pivots (x hitting a leading-minor eigenvalue).
    let mut pivmin = f64::MIN_POSITIVE;
    for &s in sub {
        pivmin = pivmin.max(f64::EPSILON * f64::EPSILON * s * s);
    }
    let mut count = 0usize;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let denom = if q.abs() < pivmin { fp::sign(pivmin, q) } else { q };
        q = diag[i] - x - sub[i - 1] * sub[i - 1] / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` lowest eigenvalues of a symmetric tridiagonal matrix via
/// Sturm-sequence bisection. O(count · n · 70) — the right tool when the
/// matrix is a long finite-difference grid and only a handful of levels are
/// wanted.
pub fn symtri_lowest(diag: &[f64], sub: &[f64], count: usize) -> Vec<f64> {
    let n = diag.len();
    let count = count.min(n);
    // Gershgorin interval containing the whole spectrum.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += sub[i - 1].abs();
        }
        if i + 1 < n {
            r += sub[i].abs();
        }
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let scale = lo.abs().max(hi.abs()).max(1.0);
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        // eigenvalue #j (0-based): smallest x with count_below(x) >= j+1
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if sturm_count_below(diag, sub, mid) > j {
                b = mid;
            } else {
                a = mid;
            }
            if b - a <= 2.0 * f64::EPSILON * scale {
                break;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Dense row-major symmetric storage helper.
#[inline]
fn at(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// Householder reduction of the dense symmetric matrix `a` (row-major n×n,
/// destroyed) to tridiagonal form; returns (diagonal, subdiagonal). Only the
/// lower triangle of `a` is referenced.
pub fn householder_tridiag(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut e = vec![0.0; n.saturating_sub(1)];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let mut scale = 0.0;
        for i in k + 1..n {
            scale += a[at(n, i, k)].abs();
        }
        if scale == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let mut h = 0.0;
        for i in k + 1..n {
            a[at(n, i, k)] /= scale;
            h += a[at(n, i, k)] * a[at(n, i, k)];
        }
        let f = a[at(n, k + 1, k)];
        let g = -fp::sign(fp::sqrt(h), f);
        e[k] = scale * g;
        h -= f * g; // ½‖v‖² with v = x − g·e₁
        a[at(n, k + 1, k)] = f - g;
        // p = A v / h on the trailing block (read lower triangle only)
        for i in k + 1..n {
            let mut s = 0.0;
            for j in k + 1..n {
                let aij = if j <= i { a[at(n, i, j)] } else { a[at(n, j, i)] };
                s += aij * a[at(n, j, k)];
            }
            p[i] = s / h;
        }
        let mut kvp = 0.0;
        for i in k + 1..n {
            kvp += a[at(n, i, k)] * p[i];
        }
        kvp /= 2.0 * h;
        for i in k + 1..n {
            p[i] -= kvp * a[at(n, i, k)];
        }
        // A ← A − v wᵀ − w vᵀ (lower triangle)
        for i in k + 1..n {
            let (vi, wi) = (a[at(n, i, k)], p[i]);
            for j in k + 1..=i {
                a[at(n, i, j)] -= vi * p[j] + wi * a[at(n, j, k)];
            }
        }
    }
    if n >= 2 {
        e[n - 2] = a[at(n, n - 1, n - 2)];
    }
    let d = (0..n).map(|i| a[at(n, i, i)]).collect();
    (d, e)
}

/// The `count` lowest eigenvalues of a dense symmetric matrix (row-major,
/// destroyed). Householder + Sturm bisection.
pub fn dense_symmetric_lowest(a: &mut [f64], n: usize, count: usize) -> Vec<f64> {
    let (d, e) = householder_tridiag(a, n);
    symtri_lowest(&d, &e, count)
}

/// All eigenvalues (re, im) of a real upper-Hessenberg matrix, by the Francis
/// double-shift QR iteration (EISPACK `hqr`). `a` is row-major n×n and is
/// destroyed. No balancing pass: callers feed pre-balanced tridiagonals.
pub fn hessenberg_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<(f64, f64)>, Error> {
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[at(n, i, j)].abs();
        }
    }

    let mut t = 0.0;
    let mut nn = n as isize - 1;
    while nn >= 0 {
        let mut its = 0;
        loop {
            // look for a negligible subdiagonal to split the problem
            let mut l = 0usize;
            for ll in (1..=nn as usize).rev() {
                let mut s = a[at(n, ll - 1, ll - 1)].abs() + a[at(n, ll, ll)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[at(n, ll, ll - 1)].abs() + s == s {
                    a[at(n, ll, ll - 1)] = 0.0;
                    l = ll;
                    break;
                }
            }
            let x = a[at(n, nn as usize, nn as usize)];
            if l as isize == nn {
                // one root found
                wr[nn as usize] = x + t;
                wi[nn as usize] = 0.0;
                nn -= 1;
                break;
            }
            let y = a[at(n, nn as usize - 1, nn as usize - 1)];
            let w = a[at(n, nn as usize, nn as usize - 1)] * a[at(n, nn as usize - 1, nn as usize)];
            if l as isize == nn - 1 {
                // 2×2 block: solve its quadratic directly
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let z = fp::sqrt(q.abs());
                let x = x + t;
                if q >= 0.0 {
                    let z = p + fp::sign(z, p);
                    wr[nn as usize - 1] = x + z;
                    wr[nn as usize] = if z != 0.0 { x - w / z } else { x + z };
                    wi[nn as usize - 1] = 0.0;
                    wi[nn as usize] = 0.0;
                } else {
                    wr[nn as usize - 1] = x + p;
                    wr[nn as usize] = x + p;
                    wi[nn as usize - 1] = -z;
                    wi[nn as usize] = z;
                }
                nn -= 2;
                break;
            }
            if its == MAX_QR_SWEEPS {
                return Err(Error::NoConvergence);
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its == 10 || its == 20 {
                // exceptional shift
                t += x;
                for i in 0..=nn as usize {
                    a[at(n, i, i)] -= x;
                }
                let s = a[at(n, nn as usize, nn as usize - 1)].abs()
                    + a[at(n, nn as usize - 1, nn as usize - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            // find two consecutive small subdiagonals
            let mut m = nn as usize - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = a[at(n, m, m)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[at(n, m + 1, m)] + a[at(n, m, m + 1)];
                q = a[at(n, m + 1, m + 1)] - z - rr - ss;
                r = a[at(n, m + 2, m + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[at(n, m, m - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[at(n, m - 1, m - 1)].abs() + z.abs() + a[at(n, m + 1, m + 1)].abs());
                if u + v == v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nn as usize {
                a[at(n, i, i - 2)] = 0.0;
                if i != m + 2 {
                    a[at(n, i, i - 3)] = 0.0;
                }
            }
            // double QR step on rows/columns l..nn
            for k in m..nn as usize {
                if k != m {
                    p = a[at(n, k, k - 1)];
                    q = a[at(n, k + 1, k - 1)];
                    r = if k != nn as usize - 1 { a[at(n, k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = fp::sign(fp::sqrt(p * p + q * q + r * r), p);
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        a[at(n, k, k - 1)] = -a[at(n, k, k - 1)];
                    }
                } else {
                    a[at(n, k, k - 1)] = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                let z = r / s;
                q /= p;
                r /= p;
                for j in k..=nn as usize {
                    p = a[at(n, k, j)] + q * a[at(n, k + 1, j)];
                    if k != nn as usize - 1 {
                        p += r * a[at(n, k + 2, j)];
                        a[at(n, k + 2, j)] -= p * z;
                    }
                    a[at(n, k + 1, j)] -= p * y;
                    a[at(n, k, j)] -= p * x;
                }
                let mmin = if (nn as usize) < k + 3 { nn as usize } else { k + 3 };
                for i in l..=mmin {
                    p = x * a[at(n, i, k)] + y * a[at(n, i, k + 1)];
                    if k != nn as usize - 1 {
                        p += z * a[at(n, i, k + 2)];
                        a[at(n, i, k + 2)] -= p * r;
                    }
                    a[at(n, i, k + 1)] -= p * q;
                    a[at(n, i, k)] -= p;
                }
            }
        }
    }
    Ok(wr.into_iter().zip(wi).collect())
}

/// Solve `A x = b` in place by Gaussian elimination with scaled partial
/// pivoting. `a` is row-major n×n (destroyed); `b` becomes the solution.
pub fn solve_dense(a: &mut [f64], n: usize, b: &mut [f64]) -> Result<(), Error> {
    let mut scale = vec![0.0; n];
    for i in 0..n {
        let mut big: f64 = 0.0;
        for j in 0..n {
            big = big.max(a[at(n, i, j)].abs());
        }
        if big == 0.0 {
            return Err(Error::SingularSystem);
        }
        scale[i] = 1.0 / big;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        // pick pivot
        let mut best = col;
        let mut bestval = -1.0;
        for row in col..n {
            let v = a[at(n, perm[row], col)].abs() * scale[perm[row]];
            if v > bestval {
                bestval = v;
                best = row;
            }
        }
        perm.swap(col, best);
        let piv = a[at(n, perm[col], col)];
        if piv == 0.0 || bestval < 1e-14 {
            return Err(Error::SingularSystem);
        }
        for row in col + 1..n {
            let f = a[at(n, perm[row], col)] / piv;
            if f != 0.0 {
                for j in col + 1..n {
                    a[at(n, perm[row], j)] -= f * a[at(n, perm[col], j)];
                }
                b[perm[row]] -= f * b[perm[col]];
            }
            a[at(n, perm[row], col)] = 0.0;
        }
    }
    // back substitution
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[perm[col]];
        for j in col + 1..n {
            s -= a[at(n, perm[col], j)] * x[j];
        }
        x[col] = s / a[at(n, perm[col], col)];
    }
    b.copy_from_slice(&x);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Deterministic pseudo-random stream for test matrices.
    struct Lcg(u64);
    impl Lcg {
        fn next_f64(&mut self) -> f64 {
            // Numerical Recipes LCG constants
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (self.0 >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        }
    }

    fn laplacian_eigenvalues(n: usize) -> Vec<f64> {
        // tridiag(-1, 2, -1): eigenvalues 2 - 2 cos(k pi / (n+1)), k = 1..n
        (1..=n)
            .map(|k| 2.0 - 2.0 * (core::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos())
            .collect()
    }

    #[test]
    fn ql_matches_laplacian_spectrum() {
        for n in [1usize, 2, 3, 10, 57] {
            let d = vec![2.0; n];
            let e = vec![-1.0; n - 1];
            let got = symtri_eigenvalues(&d, &e).unwrap();
            let want = laplacian_eigenvalues(n);
            for (g, w) in got.iter().zip(&want) {
                assert_relative_eq!(g, w, epsilon = 1e-12, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn sturm_bisection_matches_ql() {
        let mut rng = Lcg(0x9e3779b97f4a7c15);
        for n in [3usize, 8, 33] {
            let d: Vec<f64> = (0..n).map(|_| 4.0 * rng.next_f64()).collect();
            let e: Vec<f64> = (0..n - 1).map(|_| 2.0 * rng.next_f64()).collect();
            let all = symtri_eigenvalues(&d, &e).unwrap();
            let low = symtri_lowest(&d, &e, n.min(5));
            for (g, w) in low.iter().zip(&all) {
                assert_relative_eq!(g, w, epsilon = 1e-10, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn sturm_count_handles_exact_eigenvalue_probe() {
        // 2x2 with eigenvalues {1, 3}; probing exactly at an eigenvalue of the
        // leading minor (d[0]=2) exercises the pivmin guard.
        let d = [2.0, 2.0];
        let e = [1.0];
        assert_eq!(sturm_count_below(&d, &e, 2.0), 1);
        assert_eq!(sturm_count_below(&d, &e, 0.5), 0);
        assert_eq!(sturm_count_below(&d, &e, 3.5), 2);
    }

    #[test]
    fn householder_reduces_ones_matrix() {
        // all-ones n×n: eigenvalues {n, 0, ..., 0}
        let n = 6;
        let mut a = vec![1.0; n * n];
        let (d, e) = householder_tridiag(&mut a, n);
        let eig = symtri_eigenvalues(&d, &e).unwrap();
        for v in &eig[..n - 1] {
            assert_relative_eq!(*v, 0.0, epsilon = 1e-12);
        }
        assert_relative_eq!(eig[n - 1], n as f64, max_relative = 1e-13);
    }

    #[test]
    fn householder_leaves_tridiagonal_untouched_in_spectrum() {
        // feeding an already tridiagonal matrix must reproduce its spectrum
        let n = 9;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = i as f64;
            if i + 1 < n {
                a[(i + 1) * n + i] = 0.5;
                a[i * n + (i + 1)] = 0.5;
            }
        }
        let d0: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let e0 = vec![0.5; n - 1];
        let want = symtri_eigenvalues(&d0, &e0).unwrap();
        let (d, e) = householder_tridiag(&mut a, n);
        let got = symtri_eigenvalues(&d, &e).unwrap();
        for (g, w) in got.iter().zip(&want) {
            assert_relative_eq!(g, w, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn householder_random_symmetric_cross_check() {
        let mut rng = Lcg(42);
        let n = 24;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = rng.next_f64();
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let mut a2 = a.clone();
        let (d, e) = householder_tridiag(&mut a, n);
        let all = symtri_eigenvalues(&d, &e).unwrap();
        // trace is preserved
        let trace: f64 = (0..n).map(|i| a2[i * n + i]).sum();
        assert_relative_eq!(all.iter().sum::<f64>(), trace, epsilon = 1e-10);
        let low = dense_symmetric_lowest(&mut a2, n, 4);
        for (g, w) in low.iter().zip(&all) {
            assert_relative_eq!(g, w, epsilon = 1e-10);
        }
    }

    #[test]
    fn hqr_companion_matrix_roots() {
        // companion of (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6 (upper Hessenberg)
        let n = 3;
        let mut a = vec![
            6.0, -11.0, 6.0, //
            1.0, 0.0, 0.0, //
            0.0, 1.0, 0.0,
        ];
        let mut eig = hessenberg_eigenvalues(&mut a, n).unwrap();
        eig.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        for (i, want) in [1.0, 2.0, 3.0].iter().enumerate() {
            assert_relative_eq!(eig[i].0, want, max_relative = 1e-10);
            assert_relative_eq!(eig[i].1, 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn hqr_rotation_gives_pure_imaginary_pair() {
        let mut a = vec![0.0, -1.0, 1.0, 0.0];
        let mut eig = hessenberg_eigenvalues(&mut a, 2).unwrap();
        eig.sort_by(|p, q| p.1.partial_cmp(&q.1).unwrap());
        assert_relative_eq!(eig[0].0, 0.0, epsilon = 1e-14);
        assert_relative_eq!(eig[0].1, -1.0, max_relative = 1e-14);
        assert_relative_eq!(eig[1].1, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn hqr_matches_ql_on_symmetric_tridiagonal() {
        let mut rng = Lcg(7);
        let n = 12;
        let d: Vec<f64> = (0..n).map(|_| 3.0 * rng.next_f64()).collect();
        let e: Vec<f64> = (0..n - 1).map(|_| rng.next_f64()).collect();
        let want = symtri_eigenvalues(&d, &e).unwrap();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = d[i];
            if i + 1 < n {
                a[(i + 1) * n + i] = e[i];
                a[i * n + (i + 1)] = e[i];
            }
        }
        let mut got: Vec<f64> = hessenberg_eigenvalues(&mut a, n)
            .unwrap()
            .into_iter()
            .map(|(re, im)| {
                assert!(im.abs() < 1e-10);
                re
            })
            .collect();
        got.sort_by(|p, q| p.partial_cmp(q).unwrap());
        for (g, w) in got.iter().zip(&want) {
            assert_relative_eq!(g, w, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn hqr_single_element() {
        let mut a = vec![4.25];
        let eig = hessenberg_eigenvalues(&mut a, 1).unwrap();
        assert_eq!(eig, vec![(4.25, 0.0)]);
    }

    #[test]
    fn solve_dense_known_system() {
        // A = [[2,1],[1,3]], b = [5, 10] -> x = [1, 3]
        let mut a = vec![2.0, 1.0, 1.0, 3.0];
        let mut b = vec![5.0, 10.0];
        solve_dense(&mut a, 2, &mut b).unwrap();
        assert_relative_eq!(b[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(b[1], 3.0, max_relative = 1e-14);
    }

    #[test]
    fn solve_dense_vandermonde_and_residual() {
        // Vandermonde on nodes {0,1,2,3}: interpolate f(x) = x^3
        let nodes = [0.0, 1.0, 2.0, 3.0];
        let n = 4;
        let mut a = vec![0.0; n * n];
        for (i, &t) in nodes.iter().enumerate() {
            for j in 0..n {
                a[i * n + j] = fp::powi(t, j as i32);
            }
        }
        let mut b: Vec<f64> = nodes.iter().map(|&t| t * t * t).collect();
        solve_dense(&mut a, n, &mut b).unwrap();
        let want = [0.0, 0.0, 0.0, 1.0];
        for (g, w) in b.iter().zip(&want) {
            assert_relative_eq!(g, w, epsilon = 1e-12);
        }
    }

    #[test]
    fn solve_dense_detects_singularity() {
        let mut a = vec![1.0, 2.0, 2.0, 4.0];
        let mut b = vec![1.0, 2.0];
        assert_eq!(solve_dense(&mut a, 2, &mut b), Err(Error::SingularSystem));
        let mut z = vec![0.0, 0.0, 0.0, 0.0];
        let mut b2 = vec![0.0, 0.0];
        assert_eq!(solve_dense(&mut z, 2, &mut b2), Err(Error::SingularSystem));
    }
}
