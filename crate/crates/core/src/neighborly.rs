//! Exact neighborliness and bineighborliness predicates on face lattices.
//!
//! A lattice is k-neighborly when every k vertices span a (k-1)-face, and
//! k-bineighborly with respect to a vertex bipartition when every subset of
//! size at most k that meets both classes spans a simplex face. Predicates
//! are decided by direct enumeration over vertex subsets with an early
//! counterexample exit; membership queries go against the lattice's face
//! index.

use alloc::vec::Vec;
use thiserror::Error;

use crate::combo::k_subsets;
use crate::polytope::{FaceLattice, FaceSet};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NeighborlyError {
    #[error("k must be at least 1")]
    BadK,
    #[error("partition classes must be non-empty, disjoint, and cover the vertices")]
    BadPartition,
}

/// Vertex bipartition of a lattice, given as the two sorted index classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub class1: Vec<u32>,
    pub class2: Vec<u32>,
}

impl Bipartition {
    pub fn new(
        lat: &FaceLattice,
        class1: Vec<u32>,
        class2: Vec<u32>,
    ) -> Result<Self, NeighborlyError> {
        let n = lat.num_vertices() as u32;
        if class1.is_empty() || class2.is_empty() {
            return Err(NeighborlyError::BadPartition);
        }
        let mut seen = alloc::vec![false; n as usize];
        for &v in class1.iter().chain(&class2) {
            if v >= n || seen[v as usize] {
                return Err(NeighborlyError::BadPartition);
            }
            seen[v as usize] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(NeighborlyError::BadPartition);
        }
        let mut class1 = class1;
        let mut class2 = class2;
        class1.sort_unstable();
        class2.sort_unstable();
        Ok(Bipartition { class1, class2 })
    }
}

fn face_index(lat: &FaceLattice) -> FaceSet {
    let mut set = lat.proper_faces();
    let top = lat.top();
    set.insert(top.vertex_set().to_vec(), lat.intrinsic_dim() as i64);
    set
}

/// Whether the given vertex subset spans a face of exactly dimension
/// |subset| - 1 (a simplex on those vertices).
fn spans_simplex_face(index: &FaceSet, subset: &[u32]) -> bool {
    index.dim_of(subset) == Some(subset.len() as i64 - 1)
}

/// True iff every k-subset of vertices is the vertex set of a (k-1)-face.
pub fn is_k_neighborly(lat: &FaceLattice, k: usize) -> Result<bool, NeighborlyError> {
    Ok(first_non_neighborly(lat, k)?.is_none())
}

/// First k-subset of vertices that is not a (k-1)-face, if any.
pub fn first_non_neighborly(
    lat: &FaceLattice,
    k: usize,
) -> Result<Option<Vec<u32>>, NeighborlyError> {
    if k == 0 {
        return Err(NeighborlyError::BadK);
    }
    let index = face_index(lat);
    let n = lat.num_vertices();
    if k > n {
        return Ok(None);
    }
    for subset in k_subsets(n, k) {
        let vs: Vec<u32> = subset.iter().map(|&v| v as u32).collect();
        if !spans_simplex_face(&index, &vs) {
            return Ok(Some(vs));
        }
    }
    Ok(None)
}

/// True iff every mixed subset of size 2..=k (non-empty intersection with
/// both partition classes) spans a simplex face. Vacuously true for k = 1.
pub fn is_k_bineighborly(
    lat: &FaceLattice,
    partition: &Bipartition,
    k: usize,
) -> Result<bool, NeighborlyError> {
    Ok(first_non_bineighborly(lat, partition, k)?.is_none())
}

/// First mixed subset of size <= k that fails to span a simplex face.
pub fn first_non_bineighborly(
    lat: &FaceLattice,
    partition: &Bipartition,
    k: usize,
) -> Result<Option<Vec<u32>>, NeighborlyError> {
    if k == 0 {
        return Err(NeighborlyError::BadK);
    }
    let index = face_index(lat);
    let (c1, c2) = (&partition.class1, &partition.class2);
    for size in 2..=k {
        for take1 in 1..size {
            let take2 = size - take1;
            if take1 > c1.len() || take2 > c2.len() {
                continue;
            }
            for s1 in k_subsets(c1.len(), take1) {
                for s2 in k_subsets(c2.len(), take2) {
                    let mut vs: Vec<u32> = s1
                        .iter()
                        .map(|&i| c1[i])
                        .chain(s2.iter().map(|&j| c2[j]))
                        .collect();
                    vs.sort_unstable();
                    if !spans_simplex_face(&index, &vs) {
                        return Ok(Some(vs));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Largest k for which the lattice is k-neighborly.
pub fn max_neighborliness(lat: &FaceLattice) -> usize {
    let n = lat.num_vertices();
    let mut best = 0;
    for k in 1..=n {
        if is_k_neighborly(lat, k) == Ok(true) {
            best = k;
        } else {
            break;
        }
    }
    best
}

/// Largest k for which the lattice is k-bineighborly w.r.t. the partition.
pub fn max_bineighborliness(lat: &FaceLattice, partition: &Bipartition) -> usize {
    let n = lat.num_vertices();
    let mut best = 1; // size-1 mixed subsets do not exist, so k = 1 always holds
    for k in 2..=n {
        if is_k_bineighborly(lat, partition, k) == Ok(true) {
            best = k;
        } else {
            break;
        }
    }
    best
}

/// The implication "k-bineighborly implies (k-1)-neighborly", evaluated on
/// this instance. Never false on correct lattices; exposed as a checkable
/// report item.
pub fn bineighborly_implies_neighborly(
    lat: &FaceLattice,
    partition: &Bipartition,
    k: usize,
) -> Result<bool, NeighborlyError> {
    if k < 2 {
        return Err(NeighborlyError::BadK);
    }
    if !is_k_bineighborly(lat, partition, k)? {
        return Ok(true);
    }
    is_k_neighborly(lat, k - 1)
}

/// The implication "k-bineighborly with both induced subcomplexes
/// k-neighborly implies k-neighborly", evaluated on this instance.
pub fn neighborly_from_parts(
    lat: &FaceLattice,
    partition: &Bipartition,
    k: usize,
) -> Result<bool, NeighborlyError> {
    if k == 0 {
        return Err(NeighborlyError::BadK);
    }
    if !is_k_bineighborly(lat, partition, k)? {
        return Ok(true);
    }
    let index = face_index(lat);
    for class in [&partition.class1, &partition.class2] {
        if k > class.len() {
            continue;
        }
        for subset in k_subsets(class.len(), k) {
            let vs: Vec<u32> = subset.iter().map(|&i| class[i]).collect();
            if !spans_simplex_face(&index, &vs) {
                // an antecedent fails, so the implication is vacuous
                return Ok(true);
            }
        }
    }
    is_k_neighborly(lat, k)
}

/// Summary of the neighborliness structure of one lattice with a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborlinessReport {
    pub max_k_neighborly: usize,
    pub max_k_bineighborly: usize,
    /// First vertex subset witnessing the failure at the next k, if any.
    pub counterexample: Option<Vec<u32>>,
}

pub fn report(lat: &FaceLattice, partition: &Bipartition) -> NeighborlinessReport {
    let max_k_neighborly = max_neighborliness(lat);
    let max_k_bineighborly = max_bineighborliness(lat, partition);
    let counterexample = first_non_bineighborly(lat, partition, max_k_bineighborly + 1)
        .ok()
        .flatten();
    NeighborlinessReport {
        max_k_neighborly,
        max_k_bineighborly,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::polytope::{convex_hull, Point};
    use alloc::vec;

    fn pt(coords: &[i64]) -> Point {
        Point::from_ints(coords)
    }

    fn cyclic(dim: usize, n: i64) -> FaceLattice {
        let pts: Vec<Point> = (1..=n)
            .map(|t| Point::new((1..=dim).map(|e| rat(t.pow(e as u32), 1)).collect()))
            .collect();
        convex_hull(&pts, dim).unwrap()
    }

    #[test]
    fn cyclic_polytopes_are_half_dim_neighborly() {
        let lat = cyclic(4, 8);
        assert!(is_k_neighborly(&lat, 1).unwrap());
        assert!(is_k_neighborly(&lat, 2).unwrap());
        assert!(!is_k_neighborly(&lat, 3).unwrap());
        assert_eq!(max_neighborliness(&lat), 2);
    }

    #[test]
    fn cube_is_not_two_neighborly() {
        let mut pts = vec![];
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(pt(&[x, y, z]));
                }
            }
        }
        let lat = convex_hull(&pts, 3).unwrap();
        assert!(is_k_neighborly(&lat, 1).unwrap());
        assert!(!is_k_neighborly(&lat, 2).unwrap());
        let witness = first_non_neighborly(&lat, 2).unwrap().unwrap();
        assert_eq!(witness.len(), 2);
    }

    #[test]
    fn prism_fails_bineighborliness() {
        let pts = [
            pt(&[0, 0, 0]),
            pt(&[1, 0, 0]),
            pt(&[0, 1, 0]),
            pt(&[0, 0, 1]),
            pt(&[1, 0, 1]),
            pt(&[0, 1, 1]),
        ];
        let lat = convex_hull(&pts, 3).unwrap();
        let bottom: Vec<u32> = (0..lat.num_vertices() as u32)
            .filter(|&v| lat.vertex(v as usize).coords()[2].numer().bits() == 0)
            .collect();
        let top: Vec<u32> = (0..lat.num_vertices() as u32)
            .filter(|v| !bottom.contains(v))
            .collect();
        let part = Bipartition::new(&lat, bottom, top).unwrap();
        assert!(is_k_bineighborly(&lat, &part, 1).unwrap());
        assert!(!is_k_bineighborly(&lat, &part, 2).unwrap());
        // vertical edges exist, diagonals do not
        let bad = first_non_bineighborly(&lat, &part, 2).unwrap().unwrap();
        assert_eq!(bad.len(), 2);
        assert_eq!(max_bineighborliness(&lat, &part), 1);
        // the failed antecedent makes both implications vacuous
        assert!(bineighborly_implies_neighborly(&lat, &part, 2).unwrap());
        assert!(neighborly_from_parts(&lat, &part, 2).unwrap());
    }

    #[test]
    fn partition_validation() {
        let lat = cyclic(2, 4);
        assert!(Bipartition::new(&lat, vec![0, 1], vec![2, 3]).is_ok());
        assert!(Bipartition::new(&lat, vec![], vec![0, 1, 2, 3]).is_err());
        assert!(Bipartition::new(&lat, vec![0, 1], vec![1, 2, 3]).is_err());
        assert!(Bipartition::new(&lat, vec![0], vec![2, 3]).is_err());
        assert!(Bipartition::new(&lat, vec![0, 9], vec![1, 2, 3]).is_err());
    }

    #[test]
    fn simplex_is_fully_neighborly() {
        let lat = convex_hull(
            &[
                pt(&[0, 0, 0]),
                pt(&[1, 0, 0]),
                pt(&[0, 1, 0]),
                pt(&[0, 0, 1]),
            ],
            3,
        )
        .unwrap();
        assert_eq!(max_neighborliness(&lat), 4);
        let part = Bipartition::new(&lat, vec![0], vec![1, 2, 3]).unwrap();
        assert_eq!(max_bineighborliness(&lat, &part), 4);
        let rep = report(&lat, &part);
        assert_eq!(rep.max_k_neighborly, 4);
        assert!(rep.counterexample.is_none());
    }

    #[test]
    fn downward_closure_of_bineighborliness() {
        // k-bineighborly implies j-bineighborly for j <= k, on a sample
        let lat = cyclic(4, 7);
        let part = Bipartition::new(&lat, vec![0, 1, 2], vec![3, 4, 5, 6]).unwrap();
        let max = max_bineighborliness(&lat, &part);
        for j in 1..=max {
            assert!(is_k_bineighborly(&lat, &part, j).unwrap());
        }
    }
}
