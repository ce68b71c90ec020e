//! Shared helpers for the integration and acceptance suites.
#![allow(dead_code)]

use minksum_core::exact::{rat, rat_int, Rational};
use minksum_core::polytope::{convex_hull_with, HullConfig, Point, VPolytope};
use minksum_core::witness::{odd_witness, OddWitness};
use std::sync::OnceLock;

/// Deterministic xorshift64* generator; fixed seeds keep every randomized
/// suite reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in 0..n.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Integer in [lo, hi].
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.below((hi - lo + 1) as u64) as i64)
    }

    /// Small random rational with numerator in [-bound, bound] and
    /// denominator in 1..=den.
    pub fn rational(&mut self, bound: i64, den: i64) -> Rational {
        rat(self.int(-bound, bound), self.int(1, den))
    }
}

/// A random full-dimensional d-polytope with at most max_pts vertices,
/// built by hulling random integer points until the hull spans E^d.
pub fn random_polytope(rng: &mut Rng, d: usize, max_pts: usize) -> VPolytope {
    loop {
        let n = max_pts.max(d + 1);
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new((0..d).map(|_| rat_int(rng.int(-6, 6))).collect()))
            .collect();
        let cfg = HullConfig {
            max_dim: d,
            max_points: pts.len(),
        };
        let Ok(lat) = convex_hull_with(&pts, d, &cfg) else {
            continue;
        };
        if lat.intrinsic_dim() != d || lat.num_vertices() < d + 1 {
            continue;
        }
        if lat.num_vertices() > max_pts {
            continue;
        }
        return VPolytope::new(d, lat.vertices().to_vec()).expect("hull vertices are extreme");
    }
}

/// Points on the d-dimensional moment curve at integer parameters.
pub fn moment_points(d: usize, ts: std::ops::RangeInclusive<i64>) -> Vec<Point> {
    ts.map(|t| Point::new((1..=d).map(|e| rat_int(t.pow(e as u32))).collect()))
        .collect()
}

/// The d = 5 witness is the heavy shared fixture; certify it once per test
/// binary.
pub fn d5_witness() -> &'static OddWitness {
    static W: OnceLock<OddWitness> = OnceLock::new();
    W.get_or_init(|| odd_witness(5, 7, 7).expect("d=5 witness construction"))
}
