//! Cross-route oracles for the combinatorial kernels: cyclic face counts
//! against brute-force Gale-evenness enumeration and against exact hulls of
//! moment-curve points, and the summation-operator identities on computed
//! f-vectors.

mod common;

use common::moment_points;
use minksum_core::exact::rat_int;
use minksum_core::polytope::{convex_hull_with, HullConfig};
use minksum_core::vectors::{alternating_f_sum, binom, cyclic_f, cyclic_f_vector, f_to_h, FVector};

/// Facets of the cyclic D-polytope on n ordered parameters, by Gale's
/// evenness condition: a D-subset is a facet iff any two non-members are
/// separated by an even number of members.
fn gale_facets(dim: usize, n: usize) -> Vec<Vec<usize>> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if k > n {
            return vec![];
        }
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(cur.clone());
            let mut i = k as isize - 1;
            while i >= 0 && cur[i as usize] == n - k + i as usize {
                i -= 1;
            }
            if i < 0 {
                return out;
            }
            let i = i as usize;
            cur[i] += 1;
            for j in i + 1..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }
    subsets(n, dim)
        .into_iter()
        .filter(|s| {
            let mut member = vec![false; n];
            for &i in s {
                member[i] = true;
            }
            let non: Vec<usize> = (0..n).filter(|&i| !member[i]).collect();
            non.windows(2).all(|w| (w[1] - w[0] - 1) % 2 == 0)
        })
        .collect()
}

/// f-vector of the simplicial complex generated by the facet list: counts
/// of the subsets contained in at least one facet.
fn f_from_facets(facets: &[Vec<usize>], n: usize, dim: usize) -> Vec<i64> {
    fn all_subsets(n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut Vec::new(), out);
    }
    let mut counts = vec![1i64]; // f_{-1}
    for size in 1..=dim {
        let mut subs = Vec::new();
        all_subsets(n, size, &mut subs);
        let c = subs
            .iter()
            .filter(|s| facets.iter().any(|f| s.iter().all(|v| f.contains(v))))
            .count();
        counts.push(c as i64);
    }
    counts
}

#[test]
fn cyclic_counts_match_gale_enumeration() {
    for dim in 2..=6usize {
        for n in (dim + 1)..=12usize {
            let facets = gale_facets(dim, n);
            assert_eq!(facets.len() as i64, cyclic_f(dim, n as i64, dim).unwrap());
            let brute = f_from_facets(&facets, n, dim);
            let algebraic = cyclic_f_vector(dim, n as i64).unwrap();
            assert_eq!(brute, algebraic.counts(), "dim {dim} n {n}");
        }
    }
}

#[test]
fn cyclic_counts_match_exact_hulls() {
    for (dim, n) in [(2usize, 6i64), (3, 8), (4, 8), (5, 9), (6, 10)] {
        let pts = moment_points(dim, 1..=n);
        let cfg = HullConfig {
            max_dim: dim,
            max_points: pts.len(),
        };
        let lat = convex_hull_with(&pts, dim, &cfg).unwrap();
        assert_eq!(
            lat.f_vector(),
            cyclic_f_vector(dim, n).unwrap(),
            "dim {dim} n {n}"
        );
    }
}

#[test]
fn dehn_sommerville_on_computed_simplicial_hulls() {
    use minksum_core::vectors::satisfies_dehn_sommerville;
    for (dim, n) in [(2usize, 5i64), (3, 6), (4, 7), (5, 8), (6, 9)] {
        let pts = moment_points(dim, 1..=n);
        let cfg = HullConfig {
            max_dim: dim,
            max_points: pts.len(),
        };
        let lat = convex_hull_with(&pts, dim, &cfg).unwrap();
        let h = f_to_h(&lat.f_vector());
        assert!(satisfies_dehn_sommerville(&h), "dim {dim} n {n}");
    }
}

#[test]
fn two_neighborliness_of_cyclic_counts() {
    // f_{k-1} = C(n, k) for k <= ⌊D/2⌋
    for dim in 4..=6usize {
        for n in (dim as i64 + 1)..=12 {
            for k in 0..=(dim / 2) {
                assert_eq!(cyclic_f(dim, n, k).unwrap(), binom(n, k as i64));
            }
        }
    }
}

/// The operator identities on a computed f-vector of grading δ:
/// at its own grading (ν = 1) and one grading up (ν = 1 and ν = 2).
fn check_operator_identities(f: &FVector) {
    let delta = f.grading() as i64;
    let h = f_to_h(f);
    let sign = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    for k in 0..=delta + 1 {
        // matching grading, ν = 1
        if k <= delta {
            let s = alternating_f_sum(f, k, delta, 1).unwrap();
            let expect = h.get(k) - sign(k) * binom(delta, delta - k) * f.get(-1);
            assert_eq!(s, rat_int(expect));
        }
        // one grading up, ν = 1
        let s = alternating_f_sum(f, k, delta + 1, 1).unwrap();
        let expect =
            h.get(k) - h.get(k - 1) - sign(k) * binom(delta + 1, delta + 1 - k) * f.get(-1);
        assert_eq!(s, rat_int(expect));
        // one grading up, ν = 2
        let s = alternating_f_sum(f, k, delta + 1, 2).unwrap();
        assert_eq!(s, rat_int(h.get(k - 1)));
    }
}

#[test]
fn operator_identities_on_computed_vectors() {
    let mut count = 0;
    for dim in 2..=7usize {
        for n in (dim as i64 + 1)..=14 {
            check_operator_identities(&cyclic_f_vector(dim, n).unwrap());
            count += 1;
        }
    }
    // a few hull-computed non-cyclic vectors as well
    let cross3 = minksum_core::polytope::convex_hull(
        &[
            minksum_core::polytope::Point::from_ints(&[1, 0, 0]),
            minksum_core::polytope::Point::from_ints(&[-1, 0, 0]),
            minksum_core::polytope::Point::from_ints(&[0, 1, 0]),
            minksum_core::polytope::Point::from_ints(&[0, -1, 0]),
            minksum_core::polytope::Point::from_ints(&[0, 0, 1]),
            minksum_core::polytope::Point::from_ints(&[0, 0, -1]),
        ],
        3,
    )
    .unwrap();
    check_operator_identities(&cross3.f_vector());
    count += 1;
    assert!(count >= 50, "need at least 50 vectors, had {count}");
}
