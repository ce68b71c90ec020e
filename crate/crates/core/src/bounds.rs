//! Closed-form maxima for the face numbers of a Minkowski sum of two
//! d-polytopes, together with exact checkers for the h-vector identities and
//! inequalities that establish them.
//!
//! Index convention: `k` counts as in the lifted picture, so
//! [`max_faces`]`(d, n1, n2, k)` bounds the number of (k-1)-faces of the sum,
//! 1 ≤ k ≤ d. The CLI converts from the user-facing 0-based face dimension.

use alloc::vec::Vec;
use thiserror::Error;

use crate::vectors::{binom, cyclic_f, FVector, GVector, HVector, VectorError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionRange(usize),
    #[error("need n >= {need} vertices, got {got}")]
    VertexRange { need: i64, got: i64 },
    #[error("index k = {k} out of range {lo}..={hi}")]
    IndexRange { k: i64, lo: i64, hi: i64 },
    #[error("vector grading mismatch: {0}")]
    Grading(&'static str),
    #[error(transparent)]
    Vector(#[from] VectorError),
}

/// Tight upper bound on the number of (k-1)-faces of the Minkowski sum of
/// two d-polytopes with n1 and n2 vertices:
/// `f_k(C_{d+1}(n1+n2)) - sum_{i=0}^{⌊(d+1)/2⌋} C(d+1-i, k+1-i)
///  (C(n1-d-2+i, i) + C(n2-d-2+i, i))`, for 1 ≤ k ≤ d.
pub fn max_faces(d: usize, n1: i64, n2: i64, k: usize) -> Result<i64, BoundsError> {
    if d < 2 {
        return Err(BoundsError::DimensionRange(d));
    }
    let dd = d as i64;
    for n in [n1, n2] {
        if n < dd + 1 {
            return Err(BoundsError::VertexRange {
                need: dd + 1,
                got: n,
            });
        }
    }
    if k < 1 || k > d {
        return Err(BoundsError::IndexRange {
            k: k as i64,
            lo: 1,
            hi: dd,
        });
    }
    let kk = k as i64;
    let mut v = cyclic_f(d + 1, n1 + n2, k + 1)?;
    for i in 0..=((d + 1) / 2) as i64 {
        v -=
            binom(dd + 1 - i, kk + 1 - i) * (binom(n1 - dd - 2 + i, i) + binom(n2 - dd - 2 + i, i));
    }
    Ok(v)
}

/// The three tight 3-polytope maxima parameterized by vertex counts:
/// `(n1 n2, 2 n1 n2 + n1 + n2 - 8, n1 n2 + n1 + n2 - 6)`.
pub fn max_faces_3d_by_vertices(n1: i64, n2: i64) -> Result<(i64, i64, i64), BoundsError> {
    for n in [n1, n2] {
        if n < 4 {
            return Err(BoundsError::VertexRange { need: 4, got: n });
        }
    }
    Ok((n1 * n2, 2 * n1 * n2 + n1 + n2 - 8, n1 * n2 + n1 + n2 - 6))
}

/// The three tight 3-polytope maxima parameterized by facet counts:
/// `(4 m1 m2 - 8 m1 - 8 m2 + 16, 8 m1 m2 - 17 m1 - 17 m2 + 40,
///   4 m1 m2 - 9 m1 - 9 m2 + 26)`.
pub fn max_faces_3d_by_facets(m1: i64, m2: i64) -> Result<(i64, i64, i64), BoundsError> {
    for m in [m1, m2] {
        if m < 4 {
            return Err(BoundsError::VertexRange { need: 4, got: m });
        }
    }
    Ok((
        4 * m1 * m2 - 8 * m1 - 8 * m2 + 16,
        8 * m1 * m2 - 17 * m1 - 17 * m2 + 40,
        4 * m1 * m2 - 9 * m1 - 9 * m2 + 26,
    ))
}

/// The two-summand product bound on k-faces of the sum,
/// `sum_{j=1}^{k+1} C(n1, j) C(n2, k+2-j)`; tight only for
/// k ≤ ⌊d/2⌋ - 2. Equals [`mixed_subset_count`]`(n1, n2, k+2)` by the
/// Vandermonde convolution.
pub fn pairwise_product_bound(n1: i64, n2: i64, k: i64) -> Result<i64, BoundsError> {
    if k < 0 {
        return Err(BoundsError::IndexRange {
            k,
            lo: 0,
            hi: i64::MAX,
        });
    }
    Ok((1..=k + 1)
        .map(|j| binom(n1, j) * binom(n2, k + 2 - j))
        .sum())
}

/// Number of k-subsets of two disjoint vertex classes of sizes n1, n2 that
/// meet both classes: `C(n1+n2, k) - C(n1, k) - C(n2, k)`. This is also the
/// tight cap on the number of (k-1)-faces having vertices in both classes.
pub fn mixed_subset_count(n1: i64, n2: i64, k: i64) -> i64 {
    binom(n1 + n2, k) - binom(n1, k) - binom(n2, k)
}

/// Cap on h_k of the mixed face set of a lifted sum:
/// `C(n1+n2-d-2+k, k) - C(n1-d-2+k, k) - C(n2-d-2+k, k)`, 0 ≤ k ≤ d+1.
/// Equality at all indices up to l holds iff the lifted hull is
/// l-bineighborly (l ≤ ⌊(d+1)/2⌋).
pub fn mixed_h_cap(d: usize, n1: i64, n2: i64, k: usize) -> Result<i64, BoundsError> {
    let dd = d as i64;
    if k > d + 1 {
        return Err(BoundsError::IndexRange {
            k: k as i64,
            lo: 0,
            hi: dd + 1,
        });
    }
    let kk = k as i64;
    Ok(
        binom(n1 + n2 - dd - 2 + kk, kk)
            - binom(n1 - dd - 2 + kk, kk)
            - binom(n2 - dd - 2 + kk, kk),
    )
}

/// Cap on h_{d+1-k} of the mixed face set: `C(n1+n2-d-2+k, k)`,
/// 0 ≤ k ≤ d+1. Refines [`mixed_h_cap`] in the upper index range; equality
/// up to l holds iff the lifted hull is l-neighborly (l ≤ ⌊d/2⌋).
pub fn mixed_h_cap_high(d: usize, n1: i64, n2: i64, k: usize) -> Result<i64, BoundsError> {
    let dd = d as i64;
    if k > d + 1 {
        return Err(BoundsError::IndexRange {
            k: k as i64,
            lo: 0,
            hi: dd + 1,
        });
    }
    let kk = k as i64;
    Ok(binom(n1 + n2 - dd - 2 + kk, kk))
}

/// The recurrence inequality driving the h-cap induction:
/// `(k+1) h_{k+1}(F) ≤ (n1+n2-d-1+k) h_k(F) + n1 g_k(∂P2) + n2 g_k(∂P1)`
/// for all 0 ≤ k ≤ d. `h_f` must have grading d+1; the g-vectors are the
/// summand boundaries' extended g-vectors.
pub fn h_recurrence_holds(
    h_f: &HVector,
    g_p1: &GVector,
    g_p2: &GVector,
    n1: i64,
    n2: i64,
    d: usize,
) -> Result<bool, BoundsError> {
    if h_f.grading() != d + 1 {
        return Err(BoundsError::Grading("h_f must have grading d+1"));
    }
    if g_p1.grading() != d || g_p2.grading() != d {
        return Err(BoundsError::Grading(
            "summand g-vectors must have grading d",
        ));
    }
    let dd = d as i64;
    Ok((0..=dd).all(|k| {
        (k + 1) * h_f.get(k + 1)
            <= (n1 + n2 - dd - 1 + k) * h_f.get(k) + n1 * g_p2.get(k) + n2 * g_p1.get(k)
    }))
}

/// All h/g-vectors of one lifted-sum instance, for the exact identity
/// battery of [`h_identities_hold`].
pub struct InstanceVectors<'a> {
    /// h of the apex polytope boundary, grading d+1.
    pub h_q: &'a HVector,
    /// h of the mixed face set, grading d+1.
    pub h_f: &'a HVector,
    /// h of the summand boundaries, grading d.
    pub h_p1: &'a HVector,
    pub h_p2: &'a HVector,
    /// h of the mixed complex and its two apex-star extensions, grading d+1.
    pub h_k: &'a HVector,
    pub h_k1: &'a HVector,
    pub h_k2: &'a HVector,
    /// extended g of the summand boundaries.
    pub g_p1: &'a GVector,
    pub g_p2: &'a GVector,
}

/// The four exact identities tying the lifted instance's h-vectors together,
/// checked for all 0 ≤ k ≤ d+1:
///
/// * h_k(∂Q)  = h_k(F) + h_k(∂P1) + h_k(∂P2)
/// * h_k(K)   = h_k(F) + g_k(∂P1) + g_k(∂P2)
/// * h_k(K_j) = h_k(K) + h_{k-1}(∂P_j)
/// * h_{d+1-k}(F) = h_k(F) + g_k(∂P1) + g_k(∂P2)
///
/// The last line is the Dehn–Sommerville analogue for the mixed face set.
pub fn h_identities_hold(v: &InstanceVectors<'_>, d: usize) -> Result<bool, BoundsError> {
    for (h, grading, what) in [
        (v.h_q, d + 1, "h_q"),
        (v.h_f, d + 1, "h_f"),
        (v.h_k, d + 1, "h_k"),
        (v.h_k1, d + 1, "h_k1"),
        (v.h_k2, d + 1, "h_k2"),
        (v.h_p1, d, "h_p1"),
        (v.h_p2, d, "h_p2"),
    ] {
        if h.grading() != grading {
            return Err(BoundsError::Grading(what));
        }
    }
    let top = d as i64 + 1;
    for k in 0..=top {
        if v.h_q.get(k) != v.h_f.get(k) + v.h_p1.get(k) + v.h_p2.get(k) {
            return Ok(false);
        }
        if v.h_k.get(k) != v.h_f.get(k) + v.g_p1.get(k) + v.g_p2.get(k) {
            return Ok(false);
        }
        if v.h_k1.get(k) != v.h_k.get(k) + v.h_p1.get(k - 1) {
            return Ok(false);
        }
        if v.h_k2.get(k) != v.h_k.get(k) + v.h_p2.get(k - 1) {
            return Ok(false);
        }
        if v.h_f.get(top - k) != v.h_f.get(k) + v.g_p1.get(k) + v.g_p2.get(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of a bound table: the shifted index k, the bound on
/// (k-1)-faces of the sum, and optionally an attained value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub bound: i64,
    pub attained: Option<i64>,
}

impl BoundRow {
    pub fn equality(&self) -> Option<bool> {
        self.attained.map(|a| a == self.bound)
    }
}

/// Bound table for one (d, n1, n2) triple, with optional attained values
/// from a computed sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub d: usize,
    pub n1: i64,
    pub n2: i64,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn new(d: usize, n1: i64, n2: i64) -> Result<Self, BoundsError> {
        let rows = (1..=d)
            .map(|k| {
                Ok(BoundRow {
                    k,
                    bound: max_faces(d, n1, n2, k)?,
                    attained: None,
                })
            })
            .collect::<Result<Vec<_>, BoundsError>>()?;
        Ok(BoundReport { d, n1, n2, rows })
    }

    /// Fills attained values from a computed sum f-vector
    /// (f_{-1}, f_0, …, f_{d-1}).
    pub fn with_attained(mut self, f_sum: &FVector) -> Self {
        for row in &mut self.rows {
            row.attained = Some(f_sum.get(row.k as i64 - 1));
        }
        self
    }

    /// True when every attained value is present and bounds hold with
    /// equality everywhere.
    pub fn all_tight(&self) -> bool {
        self.rows.iter().all(|r| r.equality() == Some(true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::{f_to_h, g_from_h};
    use alloc::vec;

    #[test]
    fn two_dimensional_sums_cap_at_n1_plus_n2() {
        for n1 in 3..=8 {
            for n2 in 3..=8 {
                for k in [1, 2] {
                    assert_eq!(max_faces(2, n1, n2, k).unwrap(), n1 + n2);
                }
            }
        }
    }

    #[test]
    fn three_dimensional_maxima() {
        assert_eq!(max_faces(3, 4, 4, 1).unwrap(), 16);
        assert_eq!(max_faces(3, 4, 4, 2).unwrap(), 32);
        assert_eq!(max_faces(3, 4, 4, 3).unwrap(), 18);
        assert_eq!(max_faces_3d_by_vertices(4, 4).unwrap(), (16, 32, 18));
        assert_eq!(max_faces_3d_by_vertices(5, 4).unwrap(), (20, 41, 23));
        // the general formula specializes to the 3d expressions
        for n1 in 4..=12 {
            for n2 in 4..=12 {
                let (f0, f1, f2) = max_faces_3d_by_vertices(n1, n2).unwrap();
                assert_eq!(max_faces(3, n1, n2, 1).unwrap(), f0);
                assert_eq!(max_faces(3, n1, n2, 2).unwrap(), f1);
                assert_eq!(max_faces(3, n1, n2, 3).unwrap(), f2);
            }
        }
    }

    #[test]
    fn facet_parameterized_3d_maxima() {
        // Euler pins these: f0 - f1 + f2 = 2 at every (m1, m2)
        assert_eq!(max_faces_3d_by_facets(4, 4).unwrap(), (16, 32, 18));
        assert_eq!(max_faces_3d_by_facets(5, 5).unwrap(), (36, 70, 36));
        assert_eq!(max_faces_3d_by_facets(4, 5).unwrap().0, 24);
        for m1 in 4..=9 {
            for m2 in 4..=9 {
                let (f0, f1, f2) = max_faces_3d_by_facets(m1, m2).unwrap();
                assert_eq!(f0 - f1 + f2, 2, "m1 {m1} m2 {m2}");
            }
        }
        assert!(max_faces_3d_by_facets(3, 4).is_err());
    }

    #[test]
    fn vertex_product_bound_at_k1() {
        // needs 2 = r < d; at d = 2 the true maximum is n1 + n2
        for d in 3..=7 {
            for n1 in (d as i64 + 1)..=(d as i64 + 4) {
                for n2 in (d as i64 + 1)..=(d as i64 + 4) {
                    assert_eq!(max_faces(d, n1, n2, 1).unwrap(), n1 * n2);
                }
            }
        }
    }

    #[test]
    fn product_bound_matches_mixed_subsets() {
        assert_eq!(pairwise_product_bound(4, 4, 0).unwrap(), 16);
        assert_eq!(pairwise_product_bound(4, 4, 1).unwrap(), 48);
        for n1 in 2..=9 {
            for n2 in 2..=9 {
                for k in 0..=6 {
                    assert_eq!(
                        pairwise_product_bound(n1, n2, k).unwrap(),
                        mixed_subset_count(n1, n2, k + 2),
                        "n1 {n1} n2 {n2} k {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn mixed_subset_count_edges() {
        assert_eq!(mixed_subset_count(5, 9, 1), 0);
        assert_eq!(mixed_subset_count(2, 2, 2), 4);
        assert_eq!(mixed_subset_count(7, 7, 3), 294);
    }

    #[test]
    fn h_caps() {
        assert_eq!(mixed_h_cap(3, 4, 4, 0).unwrap(), -1);
        assert_eq!(mixed_h_cap(3, 4, 4, 2).unwrap(), 10);
        assert_eq!(mixed_h_cap(4, 6, 6, 1).unwrap(), 5);
        assert_eq!(mixed_h_cap_high(3, 4, 4, 0).unwrap(), 1);
        // C(n1+n2-d-2+k, k) = C(4, 1); tight on the extremal d=3 pair,
        // whose mixed h-vector is (-1, 4, 10, 4, 1)
        assert_eq!(mixed_h_cap_high(3, 4, 4, 1).unwrap(), 4);
        assert_eq!(mixed_h_cap_high(5, 7, 7, 2).unwrap(), 36);
        assert!(mixed_h_cap(3, 4, 4, 5).is_err());
    }

    #[test]
    fn recurrence_on_attaining_instance() {
        // d = 3, n1 = n2 = 4 extremal instance
        let h_f = f_to_h(&FVector::new(vec![-1, 0, 16, 32, 18]).unwrap());
        let h_simplex = f_to_h(&FVector::new(vec![1, 4, 6, 4]).unwrap());
        let g = g_from_h(&h_simplex);
        assert!(h_recurrence_holds(&h_f, &g, &g, 4, 4, 3).unwrap());
        // negative control: inflate one h entry
        let bad = HVector::from_raw(vec![-1, 4, 10, 400, 1]);
        assert!(!h_recurrence_holds(&bad, &g, &g, 4, 4, 3).unwrap());
        // grading mismatch rejected
        assert!(h_recurrence_holds(&h_simplex, &g, &g, 4, 4, 3).is_err());
    }

    #[test]
    fn identities_on_synthetic_instance() {
        // Assemble an instance algebraically from the d = 3 extremal sums:
        // h_q = h_f + h_p1 + h_p2, h_k = h_f + g1 + g2, h_kj = h_k + shift.
        let h_f = f_to_h(&FVector::new(vec![-1, 0, 16, 32, 18]).unwrap());
        let h_p = f_to_h(&FVector::new(vec![1, 4, 6, 4]).unwrap());
        let g = g_from_h(&h_p);
        let top = 4i64;
        let h_q = HVector::from_raw((0..=top).map(|k| h_f.get(k) + 2 * h_p.get(k)).collect());
        let h_k = HVector::from_raw((0..=top).map(|k| h_f.get(k) + 2 * g.get(k)).collect());
        let h_kj = HVector::from_raw((0..=top).map(|k| h_k.get(k) + h_p.get(k - 1)).collect());
        let v = InstanceVectors {
            h_q: &h_q,
            h_f: &h_f,
            h_p1: &h_p,
            h_p2: &h_p,
            h_k: &h_k,
            h_k1: &h_kj,
            h_k2: &h_kj,
            g_p1: &g,
            g_p2: &g,
        };
        assert!(h_identities_hold(&v, 3).unwrap());
        // corrupt one entry of h_f: some identity must break
        let mut f_bad = h_f.entries().to_vec();
        f_bad[2] += 1;
        let h_f_bad = HVector::from_raw(f_bad);
        let v_bad = InstanceVectors { h_f: &h_f_bad, ..v };
        assert!(!h_identities_hold(&v_bad, 3).unwrap());
    }

    #[test]
    fn report_rows_and_tightness() {
        let report = BoundReport::new(3, 4, 4).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert_eq!(report.rows[1].bound, 32);
        let f = FVector::new(vec![1, 16, 32, 18]).unwrap();
        let report = report.with_attained(&f);
        assert!(report.all_tight());
        let f = FVector::new(vec![1, 16, 32, 17]).unwrap();
        let report = BoundReport::new(3, 4, 4).unwrap().with_attained(&f);
        assert!(!report.all_tight());
    }

    #[test]
    fn parameter_validation() {
        assert!(max_faces(1, 3, 3, 1).is_err());
        assert!(max_faces(3, 3, 4, 1).is_err());
        assert!(max_faces(3, 4, 4, 0).is_err());
        assert!(max_faces(3, 4, 4, 4).is_err());
        assert!(pairwise_product_bound(4, 4, -1).is_err());
    }
}
