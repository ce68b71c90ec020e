//! Construction of summand pairs attaining the face-count maxima.
//!
//! Even dimension: two cyclic polytopes on the moment curve with disjoint
//! parameter sets. Odd dimension: vertices on two moment-like curves in
//! E^{d+1}, where a scale parameter tau squeezes the first summand's
//! parameters and a dampening parameter zeta makes the summands
//! full-dimensional. Both parameters must be "sufficiently small"; this
//! module certifies concrete values by successive halving, checking strict
//! positivity of every contact-hyperplane determinant exactly.

use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combo::k_subsets;
use crate::exact::{det, rat, rat_int, ExactError, Matrix, Rational};
use crate::polytope::{Point, PolytopeError, VPolytope};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("construction requires {expected} dimension, got d = {got}")]
    Parity { expected: &'static str, got: usize },
    #[error("need at least d+1 = {need} vertices per summand, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("dimension must be at least 2")]
    DimensionRange,
    #[error("parameter lists must be strictly increasing and positive, with epsilon > 0 fitting below every gap")]
    BadParameters,
    #[error("subset must have {expect} elements from both summands")]
    BadSubset { expect: usize },
    #[error("probe must be a point of E^{0}")]
    BadProbe(usize),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Point on the d-dimensional moment curve (t, t^2, …, t^d).
pub fn moment_curve_point(t: &Rational, d: usize) -> Point {
    let mut coords = Vec::with_capacity(d);
    let mut p = Rational::one();
    for _ in 0..d {
        p *= t;
        coords.push(p.clone());
    }
    Point::new(coords)
}

/// Two cyclic d-polytopes with disjoint parameter sets on the moment curve
/// (parameters 1..=n1 and n1+1..=n1+n2). Their Minkowski sum attains the
/// face-count maxima in every even dimension d >= 2.
pub fn even_witness(
    d: usize,
    n1: usize,
    n2: usize,
) -> Result<(VPolytope, VPolytope), WitnessError> {
    if d < 2 {
        return Err(WitnessError::DimensionRange);
    }
    if d % 2 != 0 {
        return Err(WitnessError::Parity {
            expected: "even",
            got: d,
        });
    }
    for n in [n1, n2] {
        if n < d + 1 {
            return Err(WitnessError::TooFewVertices {
                need: d + 1,
                got: n,
            });
        }
    }
    let verts = |lo: usize, hi: usize| -> Result<VPolytope, WitnessError> {
        let pts: Vec<Point> = (lo..=hi)
            .map(|t| moment_curve_point(&rat_int(t as i64), d))
            .collect();
        Ok(VPolytope::new(d, pts)?)
    };
    Ok((verts(1, n1)?, verts(n1 + 1, n1 + n2)?))
}

/// The two d-dimensional moment-like curves in E^{d+1}:
/// the first is (t, ζ t^d, t^2, …, t^{d-1}, 0), the second
/// (ζ t^d, t, t^2, …, t^{d-1}, 1). For ζ = 0 both degenerate to copies of
/// the (d-1)-dimensional moment curve inside coordinate subspaces.
pub fn moment_like_points(t: &Rational, zeta: &Rational, d: usize) -> (Point, Point) {
    let mut powers = Vec::with_capacity(d + 1);
    let mut p = Rational::one();
    for _ in 0..=d {
        p *= t;
        powers.push(p.clone()); // powers[i] = t^{i+1}
    }
    let damped = zeta * &powers[d - 1]; // ζ t^d
    let mut c1 = Vec::with_capacity(d + 1);
    let mut c2 = Vec::with_capacity(d + 1);
    c1.push(powers[0].clone());
    c1.push(damped.clone());
    c2.push(damped);
    c2.push(powers[0].clone());
    for power in powers.iter().take(d - 1).skip(1) {
        c1.push(power.clone());
        c2.push(power.clone());
    }
    c1.push(Rational::zero());
    c2.push(Rational::one());
    (Point::new(c1), Point::new(c2))
}

/// Which summand's curve a vertex lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveSide {
    First,
    Second,
}

/// A mixed parameter subset: sorted indices into the alpha list and the
/// beta list, both non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSubset {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Parameters of the odd-dimensional construction. `tau` scales the first
/// summand's curve parameters, `zeta` dampens the extra coordinate; both
/// start unset (1 and 0) and are replaced by certified values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessParams {
    pub d: usize,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub epsilon: Rational,
    pub tau: Rational,
    pub zeta: Rational,
}

impl WitnessParams {
    /// Validates orderings, positivity, and the gap condition
    /// alpha_i + epsilon < alpha_{i+1} (same for beta).
    pub fn new(
        d: usize,
        alpha: Vec<Rational>,
        beta: Vec<Rational>,
        epsilon: Rational,
    ) -> Result<Self, WitnessError> {
        if d < 3 || d % 2 == 0 {
            return Err(WitnessError::Parity {
                expected: "odd >= 3",
                got: d,
            });
        }
        for list in [&alpha, &beta] {
            if list.len() < d + 1 {
                return Err(WitnessError::TooFewVertices {
                    need: d + 1,
                    got: list.len(),
                });
            }
            if !list[0].is_positive() {
                return Err(WitnessError::BadParameters);
            }
            for w in list.windows(2) {
                if &w[0] + &epsilon >= w[1] {
                    return Err(WitnessError::BadParameters);
                }
            }
        }
        if !epsilon.is_positive() {
            return Err(WitnessError::BadParameters);
        }
        Ok(WitnessParams {
            d,
            alpha,
            beta,
            epsilon,
            tau: Rational::one(),
            zeta: Rational::zero(),
        })
    }

    /// Default parameter choice: alpha_i = i, beta_j = j, epsilon = 1/2.
    /// Smallest integers keep determinant bit sizes down.
    pub fn with_defaults(d: usize, n1: usize, n2: usize) -> Result<Self, WitnessError> {
        let alpha = (1..=n1 as i64).map(rat_int).collect();
        let beta = (1..=n2 as i64).map(rat_int).collect();
        WitnessParams::new(d, alpha, beta, rat(1, 2))
    }

    pub fn n1(&self) -> usize {
        self.alpha.len()
    }

    pub fn n2(&self) -> usize {
        self.beta.len()
    }

    /// Mixed subset size required for the contact hyperplanes:
    /// ⌊(d+1)/2⌋.
    pub fn subset_size(&self) -> usize {
        (self.d + 1) / 2
    }

    /// Curve parameter of a vertex: alpha_i·tau on the first curve, beta_j
    /// on the second.
    fn parameter(&self, side: CurveSide, i: usize) -> Rational {
        match side {
            CurveSide::First => &self.alpha[i] * &self.tau,
            CurveSide::Second => self.beta[i].clone(),
        }
    }

    fn shifted_parameter(&self, side: CurveSide, i: usize) -> Rational {
        match side {
            CurveSide::First => (&self.alpha[i] + &self.epsilon) * &self.tau,
            CurveSide::Second => &self.beta[i] + &self.epsilon,
        }
    }

    /// The embedded vertex in E^{d+1} for the current (tau, zeta).
    pub fn curve_vertex(&self, side: CurveSide, i: usize) -> Point {
        let t = self.parameter(side, i);
        let (p1, p2) = moment_like_points(&t, &self.zeta, self.d);
        match side {
            CurveSide::First => p1,
            CurveSide::Second => p2,
        }
    }

    fn shifted_vertex(&self, side: CurveSide, i: usize) -> Point {
        let t = self.shifted_parameter(side, i);
        let (p1, p2) = moment_like_points(&t, &self.zeta, self.d);
        match side {
            CurveSide::First => p1,
            CurveSide::Second => p2,
        }
    }

    /// The (d+2)×(d+2) contact-hyperplane determinant for a mixed subset:
    /// first column (1, probe), then per chosen vertex the pair of columns
    /// at its parameter and its epsilon-shifted parameter. Vanishes exactly
    /// on the hyperplane through the doubled columns; its sign at the other
    /// curve vertices is what the tau/zeta searches certify positive.
    pub fn contact_det(&self, u: &MixedSubset, probe: &Point) -> Result<Rational, WitnessError> {
        let m = self.subset_size();
        if u.left.is_empty()
            || u.right.is_empty()
            || u.left.len() + u.right.len() != m
            || u.left.windows(2).any(|w| w[0] >= w[1])
            || u.right.windows(2).any(|w| w[0] >= w[1])
            || u.left.iter().any(|&i| i >= self.n1())
            || u.right.iter().any(|&j| j >= self.n2())
        {
            return Err(WitnessError::BadSubset { expect: m });
        }
        if probe.dim() != self.d + 1 {
            return Err(WitnessError::BadProbe(self.d + 1));
        }
        let mut columns: Vec<Point> = Vec::with_capacity(self.d + 2);
        columns.push(probe.clone());
        for &i in &u.left {
            columns.push(self.curve_vertex(CurveSide::First, i));
            columns.push(self.shifted_vertex(CurveSide::First, i));
        }
        for &j in &u.right {
            columns.push(self.curve_vertex(CurveSide::Second, j));
            columns.push(self.shifted_vertex(CurveSide::Second, j));
        }
        debug_assert_eq!(columns.len(), self.d + 2);
        let n = self.d + 2;
        let matrix = Matrix::from_fn(n, n, |i, j| {
            if i == 0 {
                Rational::one()
            } else {
                columns[j].coords()[i - 1].clone()
            }
        });
        Ok(det(&matrix)?)
    }

    /// All mixed subsets of the required size.
    pub fn mixed_subsets(&self) -> Vec<MixedSubset> {
        let m = self.subset_size();
        let mut out = Vec::new();
        for take_left in 1..m {
            let take_right = m - take_left;
            if take_left > self.n1() || take_right > self.n2() {
                continue;
            }
            for left in k_subsets(self.n1(), take_left) {
                for right in k_subsets(self.n2(), take_right) {
                    out.push(MixedSubset {
                        left: left.clone(),
                        right,
                    });
                }
            }
        }
        out
    }

    /// All curve vertices outside the subset, as probe points for the
    /// current (tau, zeta).
    fn probes(&self, u: &MixedSubset) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.n1() + self.n2() - self.subset_size());
        for i in 0..self.n1() {
            if !u.left.contains(&i) {
                out.push(self.curve_vertex(CurveSide::First, i));
            }
        }
        for j in 0..self.n2() {
            if !u.right.contains(&j) {
                out.push(self.curve_vertex(CurveSide::Second, j));
            }
        }
        out
    }

    /// The minimum contact determinant over every (subset, probe) pair at
    /// the current parameters, with no early exit. The parameters are
    /// certified iff this is strictly positive.
    pub fn min_contact_det(&self) -> Rational {
        let mut min: Option<Rational> = None;
        for u in self.mixed_subsets() {
            for probe in self.probes(&u) {
                let v = self.contact_det(&u, &probe).expect("valid subset");
                if min.as_ref().is_none_or(|m| &v < m) {
                    min = Some(v);
                }
            }
        }
        min.expect("at least one subset")
    }

    /// Checks every (subset, probe) determinant at the current parameters.
    /// Returns the minimum value seen, or the first non-positive value.
    fn certify_current(&self, stats: &mut SearchStats) -> Option<Rational> {
        let mut min: Option<Rational> = None;
        for u in self.mixed_subsets() {
            for probe in self.probes(&u) {
                stats.determinants += 1;
                let v = self.contact_det(&u, &probe).expect("valid subset");
                if !v.is_positive() {
                    return None;
                }
                if min.as_ref().is_none_or(|m| &v < m) {
                    min = Some(v);
                }
            }
        }
        min
    }
}

#[derive(Default)]
struct SearchStats {
    determinants: u64,
    halvings: u32,
}

/// Exhaustive positivity certificate for one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// The certified value (tau or zeta).
    pub value: Rational,
    /// Number of mixed subsets inspected in the accepting pass.
    pub subsets: u64,
    /// Probes per subset.
    pub probes_per_subset: u64,
    /// Determinants evaluated across all halving attempts.
    pub determinants_checked: u64,
    /// Minimum determinant value in the accepting pass.
    pub min_determinant: Rational,
    /// Halvings performed before acceptance.
    pub halvings: u32,
}

fn run_halving_search(
    params: &mut WitnessParams,
    set: fn(&mut WitnessParams, Rational),
) -> Certificate {
    let mut stats = SearchStats::default();
    let mut candidate = Rational::one();
    loop {
        set(params, candidate.clone());
        if let Some(min) = params.certify_current(&mut stats) {
            let subsets = params.mixed_subsets().len() as u64;
            let probes = (params.n1() + params.n2() - params.subset_size()) as u64;
            return Certificate {
                value: candidate,
                subsets,
                probes_per_subset: probes,
                determinants_checked: stats.determinants,
                min_determinant: min,
                halvings: stats.halvings,
            };
        }
        stats.halvings += 1;
        candidate /= rat_int(2);
    }
}

/// Certifies a scale tau > 0 making every contact determinant at zeta = 0
/// strictly positive, by successive halving from 1. Sets `params.tau`.
pub fn find_tau(params: &mut WitnessParams) -> Certificate {
    params.zeta = Rational::zero();
    run_halving_search(params, |p, v| p.tau = v)
}

/// With tau already certified, certifies a dampening zeta > 0 keeping every
/// contact determinant strictly positive. Sets `params.zeta`.
pub fn find_zeta(params: &mut WitnessParams) -> Certificate {
    run_halving_search(params, |p, v| p.zeta = v)
}

/// The fully certified odd-dimensional witness pair.
pub struct OddWitness {
    pub p1: VPolytope,
    pub p2: VPolytope,
    pub params: WitnessParams,
    pub tau_certificate: Certificate,
    pub zeta_certificate: Certificate,
}

/// Builds the odd-d witness pair with default parameters: certifies tau and
/// zeta, then drops the lifting coordinate to obtain two ⌊d/2⌋-neighborly
/// d-polytopes whose sum attains the face-count maxima for every k.
pub fn odd_witness(d: usize, n1: usize, n2: usize) -> Result<OddWitness, WitnessError> {
    if d % 2 == 0 {
        return Err(WitnessError::Parity {
            expected: "odd",
            got: d,
        });
    }
    let mut params = WitnessParams::with_defaults(d, n1, n2)?;
    let tau_certificate = find_tau(&mut params);
    let zeta_certificate = find_zeta(&mut params);
    let verts1: Vec<Point> = (0..n1)
        .map(|i| params.curve_vertex(CurveSide::First, i).projected())
        .collect();
    let verts2: Vec<Point> = (0..n2)
        .map(|j| params.curve_vertex(CurveSide::Second, j).projected())
        .collect();
    let p1 = VPolytope::new(d, verts1)?;
    let p2 = VPolytope::new(d, verts2)?;
    Ok(OddWitness {
        p1,
        p2,
        params,
        tau_certificate,
        zeta_certificate,
    })
}
