//! f-/h-/g-vector algebra for simplicial polytope boundaries and for the
//! graded face sets arising from the lifted-sum construction.
//!
//! Gradings are carried implicitly by vector length: an [`FVector`] of
//! length δ+1 holds (f_{-1}, f_0, …, f_{δ-1}) and transforms to an
//! [`HVector`] (h_0, …, h_δ) of the same length. A d-polytope boundary uses
//! δ = d; the mixed face set of a lifted sum uses δ = d+1 and the f_{-1} = -1
//! convention.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::{rat_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("vector too short (need at least {0} entries)")]
    TooShort(usize),
    #[error("f_{{-1}} must be 1 or -1, got {0}")]
    BadFMinusOne(i64),
    #[error("face counts for dimension >= 0 must be non-negative")]
    NegativeCount,
    #[error("need n >= d+1 vertices, got n = {n}, d = {d}")]
    TooFewVertices { n: i64, d: i64 },
    #[error("index {k} out of range 0..={max}")]
    IndexRange { k: i64, max: i64 },
    #[error("nu must be 1 or 2")]
    BadNu,
    #[error("expected {expect} terms, got {got}")]
    TermCount { expect: usize, got: usize },
}

/// Binomial coefficient with the conventions this crate's formulas rely on:
/// C(a, b) = 0 for b < 0; C(a, 0) = 1 for every a (including negative a);
/// C(a, b) = 0 for b > 0 when a < b. Arguments stay desk-scale, so i64
/// arithmetic with an i128 accumulator is exact.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 {
        return 0;
    }
    if b == 0 {
        return 1;
    }
    if a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial out of i64 range")
}

/// Graded face-count vector (f_{-1}, f_0, …, f_{δ-1}); grading δ = len - 1.
/// f_{-1} is 1 for polytope boundaries and complexes containing the empty
/// face, and -1 for the mixed face set of a lifted sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<i64>);

impl FVector {
    pub fn new(counts: Vec<i64>) -> Result<Self, VectorError> {
        if counts.len() < 2 {
            return Err(VectorError::TooShort(2));
        }
        if counts[0] != 1 && counts[0] != -1 {
            return Err(VectorError::BadFMinusOne(counts[0]));
        }
        if counts[1..].iter().any(|&c| c < 0) {
            return Err(VectorError::NegativeCount);
        }
        Ok(FVector(counts))
    }

    /// Unvalidated constructor for intermediate vectors in tests and
    /// round-trips.
    pub fn from_raw(counts: Vec<i64>) -> Self {
        FVector(counts)
    }

    /// Grading δ: entries run f_{-1} .. f_{δ-1}.
    pub fn grading(&self) -> usize {
        self.0.len() - 1
    }

    /// f_k; 0 outside the stored range above, f_{-1} at k = -1.
    pub fn get(&self, k: i64) -> i64 {
        let idx = k + 1;
        if idx < 0 || idx as usize >= self.0.len() {
            0
        } else {
            self.0[idx as usize]
        }
    }

    pub fn counts(&self) -> &[i64] {
        &self.0
    }

    /// Euler–Poincaré alternating sum over proper faces,
    /// `sum_{i=0}^{δ-1} (-1)^i f_i`.
    pub fn euler_sum(&self) -> i64 {
        self.0[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c } else { -c })
            .sum()
    }
}

/// h-vector (h_0, …, h_δ); grading δ = len - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn from_raw(entries: Vec<i64>) -> Self {
        HVector(entries)
    }

    pub fn grading(&self) -> usize {
        self.0.len() - 1
    }

    /// h_k; 0 outside 0..=δ (matching the h_{δ+1} = 0 convention).
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 || k as usize >= self.0.len() {
            0
        } else {
            self.0[k as usize]
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// g-vector stored as the full extension (g_0, …, g_{δ+1}) computed with the
/// h_{δ+1} = 0 convention; [`GVector::half`] is the canonical
/// (g_0, …, g_{⌊δ/2⌋}) prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVector(Vec<i64>);

impl GVector {
    pub fn from_raw(entries: Vec<i64>) -> Self {
        GVector(entries)
    }

    /// Grading δ of the underlying h-vector.
    pub fn grading(&self) -> usize {
        self.0.len() - 2
    }

    /// g_k; 0 outside the stored range.
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 || k as usize >= self.0.len() {
            0
        } else {
            self.0[k as usize]
        }
    }

    /// The canonical prefix (g_0, …, g_{⌊δ/2⌋}).
    pub fn half(&self) -> &[i64] {
        &self.0[..=self.grading() / 2]
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Whether g_{δ+1-k} = -g_k holds for all k, the shape forced by
    /// Dehn–Sommerville on the underlying h-vector.
    pub fn is_antisymmetric(&self) -> bool {
        let top = (self.grading() + 1) as i64;
        (0..=top).all(|k| self.get(top - k) == -self.get(k))
    }
}

/// h from f: `h_k = sum_{i=0}^{k} (-1)^(k-i) C(δ-i, δ-k) f_{i-1}` with δ the
/// grading of `f`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.grading() as i64;
    let entries = (0..=d)
        .map(|k| {
            let mut h = 0i64;
            for i in 0..=k {
                let c = binom(d - i, d - k) * f.get(i - 1);
                if (k - i) % 2 == 0 {
                    h += c;
                } else {
                    h -= c;
                }
            }
            h
        })
        .collect();
    HVector::from_raw(entries)
}

/// f from h: `f_{k-1} = sum_i C(δ-i, k-i) h_i`. Exact inverse of
/// [`f_to_h`].
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.grading() as i64;
    let counts = (0..=d)
        .map(|k| (0..=d).map(|i| binom(d - i, k - i) * h.get(i)).sum())
        .collect();
    FVector::from_raw(counts)
}

/// Full extended g-vector of `h`: g_0 = h_0, g_k = h_k - h_{k-1} up to
/// k = δ+1 with h_{δ+1} = 0.
pub fn g_from_h(h: &HVector) -> GVector {
    let top = h.grading() as i64 + 1;
    GVector::from_raw((0..=top).map(|k| h.get(k) - h.get(k - 1)).collect())
}

/// Dehn–Sommerville: h_k = h_{δ-k} for all k. Holds for boundary complexes
/// of simplicial polytopes.
pub fn satisfies_dehn_sommerville(h: &HVector) -> bool {
    let d = h.grading() as i64;
    (0..=d).all(|k| h.get(k) == h.get(d - k))
}

/// Componentwise maximum of g_k over simplicial d-polytopes with n vertices:
/// `C(n-d-2+k, k)`, attained exactly by the neighborly polytopes.
pub fn max_g(d: usize, n: i64, k: usize) -> Result<i64, VectorError> {
    let dd = d as i64;
    if n < dd + 1 {
        return Err(VectorError::TooFewVertices { n, d: dd });
    }
    if k > d / 2 {
        return Err(VectorError::IndexRange {
            k: k as i64,
            max: (d / 2) as i64,
        });
    }
    Ok(binom(n - dd - 2 + k as i64, k as i64))
}

/// h-vector of the cyclic polytope C_D(n): h_i = C(n-D-1+i, i) for
/// i ≤ ⌊D/2⌋, completed by Dehn–Sommerville.
pub fn cyclic_h_vector(dim: usize, n: i64) -> Result<HVector, VectorError> {
    let d = dim as i64;
    if n < d + 1 {
        return Err(VectorError::TooFewVertices { n, d });
    }
    let mut h = vec![0i64; dim + 1];
    for i in 0..=dim / 2 {
        h[i] = binom(n - d - 1 + i as i64, i as i64);
        h[dim - i] = h[i];
    }
    Ok(HVector::from_raw(h))
}

/// Boundary f-vector of the cyclic polytope C_D(n), from its maximal
/// h-vector via [`h_to_f`].
pub fn cyclic_f_vector(dim: usize, n: i64) -> Result<FVector, VectorError> {
    Ok(h_to_f(&cyclic_h_vector(dim, n)?))
}

/// f_{k-1}(C_D(n)) for 0 ≤ k ≤ D.
pub fn cyclic_f(dim: usize, n: i64, k: usize) -> Result<i64, VectorError> {
    if k > dim {
        return Err(VectorError::IndexRange {
            k: k as i64,
            max: dim as i64,
        });
    }
    Ok(cyclic_f_vector(dim, n)?.get(k as i64 - 1))
}

/// The alternating binomial sum
/// `sum_{i=1}^{δ} (-1)^(k-i) C(δ-i, δ-k) f_{i-ν}` over a graded f-vector,
/// for ν in {1, 2}. Entries outside the stored range count as zero, so δ may
/// exceed the vector's natural grading.
pub fn alternating_f_sum(
    f: &FVector,
    k: i64,
    delta: i64,
    nu: i64,
) -> Result<Rational, VectorError> {
    if nu != 1 && nu != 2 {
        return Err(VectorError::BadNu);
    }
    let mut acc = Rational::zero();
    for i in 1..=delta {
        let term = rat_int(binom(delta - i, delta - k) * f.get(i - nu));
        if (k - i).rem_euclid(2) == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Sum of ⌊δ/2⌋+1 terms with the last term halved when δ is even.
pub fn starred_sum(terms: &[Rational], delta: usize) -> Result<Rational, VectorError> {
    let expect = delta / 2 + 1;
    if terms.len() != expect {
        return Err(VectorError::TermCount {
            expect,
            got: terms.len(),
        });
    }
    let mut acc = Rational::zero();
    for (i, t) in terms.iter().enumerate() {
        if delta % 2 == 0 && i + 1 == terms.len() {
            acc += t / rat_int(2);
        } else {
            acc += t;
        }
    }
    Ok(acc)
}

/// Exact identity folding two binomial sums into one starred sum: for any
/// sequence α_0..α_{⌊(d+1)/2⌋},
/// `sum_{i<=⌊(d+1)/2⌋} C(d+1-i, k-i) α_i + sum_{i<=⌊d/2⌋} C(i, k-d-1+i) α_i`
/// equals the starred sum (δ = d+1) of `(C(d+1-i, k-i) + C(i, k-d-1+i)) α_i`.
/// Returns whether both sides agree; they always must.
pub fn starred_sum_identity_holds(
    d: usize,
    k: i64,
    alpha: &[Rational],
) -> Result<bool, VectorError> {
    let m = (d + 1) / 2;
    if alpha.len() != m + 1 {
        return Err(VectorError::TermCount {
            expect: m + 1,
            got: alpha.len(),
        });
    }
    let dd = d as i64;
    let mut lhs = Rational::zero();
    for (i, a) in alpha.iter().enumerate().take(m + 1) {
        lhs += rat_int(binom(dd + 1 - i as i64, k - i as i64)) * a;
    }
    for (i, a) in alpha.iter().enumerate().take(d / 2 + 1) {
        lhs += rat_int(binom(i as i64, k - dd - 1 + i as i64)) * a;
    }
    let terms: Vec<Rational> = alpha
        .iter()
        .enumerate()
        .map(|(i, a)| {
            rat_int(binom(dd + 1 - i as i64, k - i as i64) + binom(i as i64, k - dd - 1 + i as i64))
                * a
        })
        .collect();
    let rhs = starred_sum(&terms, d + 1)?;
    Ok(lhs == rhs)
}

/// f_{k-1}(C_D(n)) by the starred-sum closed form,
/// `sum*_{i=0}^{D/2} (C(D-i, k-i) + C(i, k-D+i)) C(n-D-1+i, i)`.
/// Independent of the h-vector route; used to cross-check [`cyclic_f`].
pub fn cyclic_f_closed_form(dim: usize, n: i64, k: usize) -> Result<i64, VectorError> {
    let d = dim as i64;
    if n < d + 1 {
        return Err(VectorError::TooFewVertices { n, d });
    }
    let kk = k as i64;
    let terms: Vec<Rational> = (0..=dim / 2)
        .map(|i| {
            let i = i as i64;
            rat_int((binom(d - i, kk - i) + binom(i, kk - d + i)) * binom(n - d - 1 + i, i))
        })
        .collect();
    let s = starred_sum(&terms, dim)?;
    debug_assert!(s.denom() == &num_bigint::BigInt::from(1));
    Ok(i64::try_from(s.to_integer()).expect("face count out of i64 range"))
}
