//! Seeded random polytope generation for reproducible test corpora.

use minksum_core::exact::rat_int;
use minksum_core::polytope::{convex_hull_with, HullConfig, Point, VPolytope};

/// xorshift64* with a fixed multiplier; identical seeds give identical
/// polytopes on every platform.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }
}

/// A random full-dimensional d-polytope with at most `max_vertices`
/// vertices, drawn from small integer coordinates.
pub fn random_polytope(rng: &mut XorShift, d: usize, max_vertices: usize) -> VPolytope {
    loop {
        let n = max_vertices.max(d + 1) + 2;
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::new((0..d).map(|_| rat_int(rng.int(-9, 9))).collect()))
            .collect();
        let cfg = HullConfig {
            max_dim: d,
            max_points: pts.len(),
        };
        let Ok(lat) = convex_hull_with(&pts, d, &cfg) else {
            continue;
        };
        if lat.intrinsic_dim() != d
            || lat.num_vertices() < d + 1
            || lat.num_vertices() > max_vertices
        {
            continue;
        }
        return VPolytope::new(d, lat.vertices().to_vec()).expect("hull vertices are extreme");
    }
}
