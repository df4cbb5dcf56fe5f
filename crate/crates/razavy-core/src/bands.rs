//! Placement of the algebraic energies inside the numerically computed band
//! structure: which band edges they are, which gaps they bound, and the
//! observation that those gaps are never consecutive — so no allowed band
//! has both edges algebraically known.
//!
//! For M even the M algebraic energies are the lowest M antiperiodic
//! eigenvalues and bound the first M/2 odd-indexed gaps; for M odd they are
//! the lowest M periodic eigenvalues: the ground band bottom plus the
//! bounds of the first (M−1)/2 even-indexed gaps.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::families::{make_tilde, PotentialParams};
use crate::oracle::{self, BandEdges};
use crate::polyseq::PolyFamilyHandle;
use crate::spectrum::algebraic_energies;

/// Matching an algebraic energy to an oracle edge uses this relative cap.
const EDGE_MATCH_TOL: f64 = 1e-6;
/// Gaps narrower than this are closed but still counted (they keep their
/// index in the energy-ordered gap list).
pub const CLOSED_GAP_WIDTH: f64 = 1e-9;

/// One matched band edge: its conventional label (E_k or Ebar_k), the
/// oracle value, the algebraic root, and their absolute difference.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedEdge {
    pub edge_label: String,
    pub oracle_value: f64,
    pub algebraic_value: f64,
    pub abs_error: f64,
}

/// Where the M algebraic energies sit in the band structure.
#[derive(Debug, Clone, PartialEq)]
pub struct GapClassification {
    pub m_int: u32,
    pub zeta: f64,
    pub algebraic_energies: Vec<f64>,
    pub matched_edges: Vec<MatchedEdge>,
    /// 1-based indices into the energy-ordered list of all gaps (both
    /// types, closed gaps included) that the algebraic energies bound.
    pub gap_indices: Vec<usize>,
    pub includes_ground_state: bool,
}

/// A gap in the energy-ordered list: its 1-based index, bounding edges, and
/// whether its edges are periodic or antiperiodic eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Gap {
    index: usize,
    lo: f64,
    hi: f64,
    antiperiodic: bool,
}

/// Gaps in energy order: (Ē_1,Ē_2), (E_1,E_2), (Ē_3,Ē_4), … with 1-based
/// indices. The interleaving check in the oracle guarantees this order.
fn enumerate_gaps(edges: &BandEdges) -> Vec<Gap> {
    let mut gaps = Vec::new();
    let n_anti = edges.antiperiodic.len() / 2;
    let n_per = (edges.periodic.len() - 1) / 2;
    let mut index = 0;
    for k in 0..n_anti.max(n_per) {
        if k < n_anti {
            index += 1;
            gaps.push(Gap {
                index,
                lo: edges.antiperiodic[2 * k],
                hi: edges.antiperiodic[2 * k + 1],
                antiperiodic: true,
            });
        }
        if k < n_per {
            index += 1;
            gaps.push(Gap {
                index,
                lo: edges.periodic[2 * k + 1],
                hi: edges.periodic[2 * k + 2],
                antiperiodic: false,
            });
        }
    }
    gaps
}

/// Conventional label of the j-th eigenvalue of the matched type:
/// E_j for periodic, Ebar_j for antiperiodic (j counts from 0 and 1
/// respectively, matching the interleaving chain).
fn edge_label(antiperiodic: bool, j: usize) -> String {
    let mut s = String::new();
    if antiperiodic {
        s.push_str("Ebar_");
        push_usize(&mut s, j + 1);
    } else {
        s.push_str("E_");
        push_usize(&mut s, j);
    }
    s
}

fn push_usize(s: &mut String, v: usize) {
    let mut digits = [0u8; 20];
    let mut n = v;
    let mut i = 0;
    loop {
        digits[i] = b'0' + (n % 10) as u8;
        n /= 10;
        i += 1;
        if n == 0 {
            break;
        }
    }
    while i > 0 {
        i -= 1;
        s.push(digits[i] as char);
    }
}

/// Match the sorted algebraic energies of the periodic problem to the
/// lowest M oracle eigenvalues of the correct type (antiperiodic for M
/// even, periodic for M odd) and read off which gaps they bound. Both
/// lists are sorted, so the k-th root pairs with the k-th pool value;
/// this stays well-defined even when a narrow gap puts two oracle edges
/// within the match cap of each other.
pub fn classify(params: PotentialParams) -> Result<GapClassification, Error> {
    let m = params.m_int() as usize;
    let roots = algebraic_energies(&PolyFamilyHandle::new(make_tilde(params, true)))?.energies;
    let even_m = m % 2 == 0;
    // enough gaps that the lowest M eigenvalues of either type are present
    let n_gaps = m / 2 + 2;
    let edges = oracle::band_edges(params, n_gaps)?;
    let pool: &[f64] = if even_m { &edges.antiperiodic } else { &edges.periodic };
    if pool.len() < m {
        return Err(Error::InvalidParams("oracle returned too few band edges"));
    }

    let mut matched_edges = Vec::with_capacity(m);
    for (j, &e) in roots.iter().enumerate() {
        let cap = EDGE_MATCH_TOL * e.abs().max(1.0);
        let v = pool[j];
        let err = (v - e).abs();
        if err > cap {
            return Err(Error::EdgeMismatch { edge: v, algebraic: e, tol: cap });
        }
        // rank matching went wrong if some other pool eigenvalue is
        // decisively closer (beyond closed-gap degeneracy slack)
        let nearest = pool.iter().fold(f64::INFINITY, |best, &w| best.min((w - e).abs()));
        if err > nearest + CLOSED_GAP_WIDTH {
            return Err(Error::OrderingViolation { index: j });
        }
        matched_edges.push(MatchedEdge {
            edge_label: edge_label(even_m, j),
            oracle_value: v,
            algebraic_value: e,
            abs_error: err,
        });
    }

    let gaps = enumerate_gaps(&edges);
    let mut gap_indices = Vec::new();
    let mut includes_ground_state = false;
    for &e in &roots {
        let cap = EDGE_MATCH_TOL * e.abs().max(1.0);
        if !even_m && (e - edges.periodic[0]).abs() <= cap {
            includes_ground_state = true;
            continue;
        }
        if let Some(g) = gaps
            .iter()
            .find(|g| (g.lo - e).abs() <= cap || (g.hi - e).abs() <= cap)
        {
            if gap_indices.last() != Some(&g.index) {
                gap_indices.push(g.index);
            }
        }
    }

    Ok(GapClassification {
        m_int: params.m_int(),
        zeta: params.zeta(),
        algebraic_energies: roots,
        matched_edges,
        gap_indices,
        includes_ground_state,
    })
}

/// True iff the algebraically bounded gaps are pairwise non-consecutive in
/// the energy-ordered gap list — equivalently, no allowed band has both of
/// its edges among the algebraic energies.
pub fn consecutive_gap_check(params: PotentialParams) -> Result<bool, Error> {
    let c = classify(params)?;
    Ok(c.gap_indices.windows(2).all(|w| w[1] > w[0] + 1))
}

/// One row of the band-structure sweep dataset: band `band_index` of the
/// potential at `zeta` spans [edge_lo, edge_hi]; each edge is tagged
/// `algebraic` when it matches a critical root, `numeric` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct BandRow {
    pub zeta: f64,
    pub band_index: usize,
    pub edge_lo: f64,
    pub edge_hi: f64,
    pub lo_tag: &'static str,
    pub hi_tag: &'static str,
}

fn tag_for(e: f64, roots: &[f64]) -> &'static str {
    let cap = EDGE_MATCH_TOL * e.abs().max(1.0);
    if roots.iter().any(|&r| (r - e).abs() <= cap) {
        "algebraic"
    } else {
        "numeric"
    }
}

/// Band-edge table for `n_bands` bands at each ζ of an increasing grid.
/// Band b spans [merged[2b], merged[2b+1]] of the interleaved edge chain.
pub fn fig_sweep(
    m_int: u32,
    zeta_grid: &[f64],
    n_bands: usize,
) -> Result<Vec<BandRow>, Error> {
    if zeta_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParams("zeta grid must be strictly increasing"));
    }
    if n_bands == 0 {
        return Err(Error::InvalidParams("need at least one band"));
    }
    let mut rows = Vec::with_capacity(zeta_grid.len() * n_bands);
    for &zeta in zeta_grid {
        let params = PotentialParams::new(zeta, m_int)?;
        // near the free-particle limit the critical roots pair up closer than
        // the root-separation guard resolves; the edges are still fine, so
        // tag everything numeric for that zeta instead of failing the sweep
        let roots = match algebraic_energies(&PolyFamilyHandle::new(make_tilde(params, true))) {
            Ok(s) => s.energies,
            Err(Error::RootsCoincide { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        let edges = oracle::band_edges(params, n_bands / 2 + 2)?;
        let merged = edges.merged();
        for b in 0..n_bands {
            let (lo, hi) = (merged[2 * b], merged[2 * b + 1]);
            rows.push(BandRow {
                zeta,
                band_index: b + 1,
                edge_lo: lo,
                edge_hi: hi,
                lo_tag: tag_for(lo, &roots),
                hi_tag: tag_for(hi, &roots),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(zeta: f64, m: u32) -> PotentialParams {
        PotentialParams::new(zeta, m).unwrap()
    }

    #[test]
    fn m4_bounds_first_and_third_gaps() {
        let c = classify(params(1.0, 4)).unwrap();
        assert_eq!(c.gap_indices, [1, 3]);
        assert!(!c.includes_ground_state);
        assert_eq!(c.matched_edges.len(), 4);
        let labels: Vec<&str> = c.matched_edges.iter().map(|e| e.edge_label.as_str()).collect();
        assert_eq!(labels, ["Ebar_1", "Ebar_2", "Ebar_3", "Ebar_4"]);
    }

    #[test]
    fn m5_bounds_ground_state_and_even_gaps() {
        let c = classify(params(1.0, 5)).unwrap();
        assert_eq!(c.gap_indices, [2, 4]);
        assert!(c.includes_ground_state);
        let labels: Vec<&str> = c.matched_edges.iter().map(|e| e.edge_label.as_str()).collect();
        assert_eq!(labels, ["E_0", "E_1", "E_2", "E_3", "E_4"]);
    }

    #[test]
    fn m1_is_ground_state_only() {
        for &zeta in &[0.5, 1.0, 2.0] {
            let c = classify(params(zeta, 1)).unwrap();
            assert!(c.gap_indices.is_empty());
            assert!(c.includes_ground_state);
            assert_eq!(c.matched_edges.len(), 1);
            assert_eq!(c.matched_edges[0].edge_label, "E_0");
        }
    }

    #[test]
    fn classification_matches_parity_rule_across_m() {
        for m in 1..=8u32 {
            for &zeta in &[0.5, 1.0, 2.0] {
                let c = classify(params(zeta, m)).unwrap();
                let expected: Vec<usize> = if m % 2 == 0 {
                    (0..m as usize / 2).map(|k| 2 * k + 1).collect()
                } else {
                    (1..=m as usize / 2).map(|k| 2 * k).collect()
                };
                assert_eq!(c.gap_indices, expected, "M={m} zeta={zeta}");
                assert_eq!(c.includes_ground_state, m % 2 == 1);
                // gap indices share the parity of M-1
                assert!(c.gap_indices.iter().all(|g| g % 2 == (m as usize - 1) % 2));
                assert_eq!(c.matched_edges.len(), m as usize);
                // matched edges strictly increasing
                assert!(c
                    .matched_edges
                    .windows(2)
                    .all(|w| w[1].oracle_value > w[0].oracle_value));
            }
        }
    }

    #[test]
    fn matched_gaps_are_never_consecutive() {
        for m in 1..=8u32 {
            assert!(consecutive_gap_check(params(1.0, m)).unwrap(), "M={m}");
        }
        let c = classify(params(0.5, 6)).unwrap();
        assert_eq!(c.gap_indices, [1, 3, 5]);
    }

    #[test]
    fn sweep_tags_follow_m_parity() {
        let grid = [0.4, 1.0, 1.6];
        // M=5: algebraic tags only where the edge is a periodic eigenvalue;
        // exactly 5 algebraic tags per zeta (ground bottom + 2 gaps)
        let rows = fig_sweep(5, &grid, 5).unwrap();
        for &zeta in &grid {
            let tagged: usize = rows
                .iter()
                .filter(|r| r.zeta == zeta)
                .map(|r| {
                    (r.lo_tag == "algebraic") as usize + (r.hi_tag == "algebraic") as usize
                })
                .sum();
            assert_eq!(tagged, 5, "zeta={zeta}");
        }
        // band 1 of M=5 starts at the algebraic ground state
        assert!(rows.iter().filter(|r| r.band_index == 1).all(|r| r.lo_tag == "algebraic"));
        // M=4: the ground band bottom is periodic, hence numeric
        let rows4 = fig_sweep(4, &grid, 5).unwrap();
        assert!(rows4.iter().filter(|r| r.band_index == 1).all(|r| r.lo_tag == "numeric"));
        for &zeta in &grid {
            let tagged: usize = rows4
                .iter()
                .filter(|r| r.zeta == zeta)
                .map(|r| {
                    (r.lo_tag == "algebraic") as usize + (r.hi_tag == "algebraic") as usize
                })
                .sum();
            assert_eq!(tagged, 4, "zeta={zeta}");
        }
    }

    #[test]
    fn sweep_gaps_vanish_in_weak_coupling() {
        let rows = fig_sweep(3, &[1e-6], 4).unwrap();
        // consecutive bands nearly touch: every gap below 1e-4
        for w in rows.windows(2) {
            assert!(
                w[1].edge_lo - w[0].edge_hi < 1e-4,
                "gap {} at weak coupling",
                w[1].edge_lo - w[0].edge_hi
            );
        }
    }

    #[test]
    fn sweep_validates_input() {
        assert!(fig_sweep(4, &[1.0, 0.5], 3).is_err());
        assert!(fig_sweep(4, &[0.5, 1.0], 0).is_err());
    }

    #[test]
    fn no_band_has_two_algebraic_edges() {
        for m in 2..=8u32 {
            let rows = fig_sweep(m, &[1.0], 6).unwrap();
            for r in &rows {
                assert!(
                    !(r.lo_tag == "algebraic" && r.hi_tag == "algebraic"),
                    "M={m} band {} has both edges algebraic",
                    r.band_index
                );
            }
        }
    }
}

