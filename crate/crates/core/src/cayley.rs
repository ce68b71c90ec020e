//! Lifting a two-summand Minkowski sum one dimension up.
//!
//! The two d-dimensional summands are embedded at heights 0 and 1 in
//! E^{d+1} and hulled. Every proper face of that hull with vertices at both
//! heights meets each intermediate hyperplane, and those mixed faces carry
//! the sum's combinatorics: the sum's (k-1)-faces correspond to the mixed
//! k-faces. On top of the hull, the module derives the auxiliary complexes
//! (the mixed complex and its two apex-star extensions over an apex
//! polytope) whose h-vectors tie the face counts to the tight bounds.

use alloc::vec::Vec;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat, Rational};
use crate::neighborly::{Bipartition, NeighborlyError};
use crate::polytope::{
    convex_hull_with, point_beyond_facet, star_and_link, FaceLattice, FaceSet, HullConfig, Point,
    PolytopeError, VPolytope,
};
use crate::vectors::{f_to_h, FVector, HVector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("summands must share one dimension >= 1, got {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("the slice height must lie strictly between 0 and 1")]
    BadLambda,
    #[error("an embedded summand is not a facet of the hull")]
    EndFacetMissing,
    #[error("hull is not full-dimensional; summands may be degenerate")]
    Degenerate,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Partition(#[from] NeighborlyError),
}

/// The embedded point cloud: summand one lifted to height 0, summand two to
/// height 1.
pub fn embed(p1: &VPolytope, p2: &VPolytope) -> Result<Vec<Point>, CayleyError> {
    if p1.dim() != p2.dim() || p1.dim() == 0 {
        return Err(CayleyError::DimensionMismatch(p1.dim(), p2.dim()));
    }
    let mut pts = Vec::with_capacity(p1.num_vertices() + p2.num_vertices());
    for v in p1.vertices() {
        pts.push(v.lifted(Rational::zero()));
    }
    for v in p2.vertices() {
        pts.push(v.lifted(Rational::one()));
    }
    Ok(pts)
}

/// The apex polytope data built over the lifted hull: two extra points, one
/// beyond each summand facet and beneath every other facet.
pub struct ApexPolytope {
    pub lattice: FaceLattice,
    /// Vertex indices of the two apexes in `lattice`.
    pub apex1: u32,
    pub apex2: u32,
    /// Maps vertex indices of the lifted hull into `lattice`.
    pub vertex_map: Vec<u32>,
}

/// The lifted hull of two summands with its vertex bipartition.
pub struct CayleyComplex {
    d: usize,
    p1: VPolytope,
    p2: VPolytope,
    lattice: FaceLattice,
    class1: Vec<u32>,
    class2: Vec<u32>,
    lambda: Rational,
}

impl CayleyComplex {
    /// Builds the lifted hull with the default slice height 1/2.
    pub fn build(p1: VPolytope, p2: VPolytope) -> Result<Self, CayleyError> {
        Self::build_with_lambda(p1, p2, rat(1, 2))
    }

    pub fn build_with_lambda(
        p1: VPolytope,
        p2: VPolytope,
        lambda: Rational,
    ) -> Result<Self, CayleyError> {
        if !(lambda > Rational::zero() && lambda < Rational::one()) {
            return Err(CayleyError::BadLambda);
        }
        let pts = embed(&p1, &p2)?;
        let d = p1.dim();
        let cfg = HullConfig {
            max_dim: d + 1,
            max_points: pts.len(),
        };
        let lattice = convex_hull_with(&pts, d + 1, &cfg)?;
        if !lattice.non_extreme().is_empty() {
            // summand vertices stay extreme after lifting to distinct heights
            return Err(CayleyError::Polytope(PolytopeError::NonExtremeInput));
        }
        let mut class1 = Vec::new();
        let mut class2 = Vec::new();
        for (i, v) in lattice.vertices().iter().enumerate() {
            if v.coords()[d].is_zero() {
                class1.push(i as u32);
            } else {
                class2.push(i as u32);
            }
        }
        Ok(CayleyComplex {
            d,
            p1,
            p2,
            lattice,
            class1,
            class2,
            lambda,
        })
    }

    pub fn summand_dim(&self) -> usize {
        self.d
    }

    pub fn summand1(&self) -> &VPolytope {
        &self.p1
    }

    pub fn summand2(&self) -> &VPolytope {
        &self.p2
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// Vertex indices at height 0 / height 1.
    pub fn classes(&self) -> (&[u32], &[u32]) {
        (&self.class1, &self.class2)
    }

    pub fn partition(&self) -> Result<Bipartition, CayleyError> {
        Ok(Bipartition::new(
            &self.lattice,
            self.class1.clone(),
            self.class2.clone(),
        )?)
    }

    fn is_mixed(&self, vertex_set: &[u32]) -> bool {
        let in1 = vertex_set
            .iter()
            .any(|v| self.class1.binary_search(v).is_ok());
        let in2 = vertex_set
            .iter()
            .any(|v| self.class2.binary_search(v).is_ok());
        in1 && in2
    }

    /// The mixed face set at the stored slice height: all proper faces whose
    /// span meets the hyperplane at that height. Independent of the height,
    /// since exactly the faces with vertices at both heights qualify.
    pub fn mixed_faces(&self) -> FaceSet {
        self.mixed_faces_at(&self.lambda)
    }

    /// Mixed faces by the geometric slice test at an explicit height in
    /// (0, 1): a face meets the hyperplane iff its minimum height is below
    /// and its maximum above.
    pub fn mixed_faces_at(&self, lambda: &Rational) -> FaceSet {
        let d = self.d;
        let mut out = FaceSet::new();
        for dim in 0..=(d as i64) {
            for f in self.lattice.faces_of_dim(dim) {
                let heights = f
                    .vertex_set()
                    .iter()
                    .map(|&v| &self.lattice.vertex(v as usize).coords()[d]);
                let mut lo = None::<&Rational>;
                let mut hi = None::<&Rational>;
                for h in heights {
                    if lo.is_none_or(|l| h < l) {
                        lo = Some(h);
                    }
                    if hi.is_none_or(|u| h > u) {
                        hi = Some(h);
                    }
                }
                if lo.is_some_and(|l| l < lambda) && hi.is_some_and(|u| u > lambda) {
                    debug_assert!(self.is_mixed(f.vertex_set()));
                    out.insert(f.vertex_set().to_vec(), dim);
                }
            }
        }
        out
    }

    /// f-vector of the mixed face set, with the f_{-1} = -1 convention.
    pub fn mixed_f_vector(&self) -> FVector {
        self.mixed_faces().f_vector_with(self.d + 1, -1)
    }

    /// h-vector of the mixed face set (grading d+1, h_0 = -1).
    pub fn mixed_h_vector(&self) -> HVector {
        f_to_h(&self.mixed_f_vector())
    }

    /// Boundary f-vector of the Minkowski sum read off the mixed faces:
    /// f_{k-1}(sum) = f_k(mixed), 1 <= k <= d.
    pub fn sum_f_vector(&self) -> FVector {
        let mixed = self.mixed_f_vector();
        let mut counts = Vec::with_capacity(self.d + 1);
        counts.push(1);
        for k in 1..=(self.d as i64) {
            counts.push(mixed.get(k));
        }
        FVector::from_raw(counts)
    }

    /// Facet indices of the two summand facets of the lifted hull.
    pub fn end_facets(&self) -> Result<(usize, usize), CayleyError> {
        let find = |class: &[u32]| {
            self.lattice
                .facets()
                .iter()
                .position(|f| f.vertex_set() == class)
        };
        match (find(&self.class1), find(&self.class2)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(CayleyError::EndFacetMissing),
        }
    }

    /// Whether the lifted hull is simplicial apart from the two summand
    /// facets. The h-vector identity battery applies exactly in that case.
    pub fn is_simplicial_except_ends(&self) -> Result<bool, CayleyError> {
        let (e1, e2) = self.end_facets()?;
        Ok(crate::polytope::is_simplicial(&self.lattice, &[e1, e2]))
    }

    /// The mixed complex: every proper face of the lifted hull except the
    /// two summand facets themselves (equivalently, the mixed faces plus all
    /// their subfaces). Indexed by the hull's vertex labels.
    pub fn mixed_complex(&self) -> Result<FaceSet, CayleyError> {
        let (e1, e2) = self.end_facets()?;
        let facet_dim = self.d as i64;
        let skip1 = self.lattice.facets()[e1].vertex_set().to_vec();
        let skip2 = self.lattice.facets()[e2].vertex_set().to_vec();
        let mut out = FaceSet::new();
        for (vs, dim) in self.lattice.proper_faces().iter() {
            if dim == facet_dim && (*vs == skip1 || *vs == skip2) {
                continue;
            }
            out.insert(vs.clone(), dim);
        }
        Ok(out)
    }

    /// Builds the apex polytope: the hull of this complex's vertices plus a
    /// point beyond each summand facet (and beneath all others).
    pub fn apex_polytope(&self) -> Result<ApexPolytope, CayleyError> {
        let (e1, e2) = self.end_facets()?;
        let y1 = point_beyond_facet(&self.lattice, e1)?;
        let y2 = point_beyond_facet(&self.lattice, e2)?;
        let mut pts: Vec<Point> = self.lattice.vertices().to_vec();
        pts.push(y1.clone());
        pts.push(y2.clone());
        let cfg = HullConfig {
            max_dim: self.d + 1,
            max_points: pts.len(),
        };
        let lattice = convex_hull_with(&pts, self.d + 1, &cfg)?;
        if lattice.num_vertices() != pts.len() {
            return Err(CayleyError::Polytope(PolytopeError::Internal(
                "apex polytope lost vertices",
            )));
        }
        let vertex_map: Vec<u32> = self
            .lattice
            .vertices()
            .iter()
            .map(|v| lattice.vertex_index_of(v).expect("hull vertex kept") as u32)
            .collect();
        let apex1 = lattice.vertex_index_of(&y1).expect("apex kept") as u32;
        let apex2 = lattice.vertex_index_of(&y2).expect("apex kept") as u32;
        Ok(ApexPolytope {
            lattice,
            apex1,
            apex2,
            vertex_map,
        })
    }

    /// The mixed complex and its two extensions by the apex stars, all
    /// indexed by the apex polytope's vertex labels:
    /// K, K ∪ star(apex1), K ∪ star(apex2).
    pub fn complexes(
        &self,
        apex: &ApexPolytope,
    ) -> Result<(FaceSet, FaceSet, FaceSet), CayleyError> {
        let base = self.mixed_complex()?;
        let mut k = FaceSet::new();
        for (vs, dim) in base.iter() {
            let mapped: Vec<u32> = {
                let mut m: Vec<u32> = vs.iter().map(|&v| apex.vertex_map[v as usize]).collect();
                m.sort_unstable();
                m
            };
            k.insert(mapped, dim);
        }
        let (star1, _) = star_and_link(&apex.lattice, apex.apex1 as usize)?;
        let (star2, _) = star_and_link(&apex.lattice, apex.apex2 as usize)?;
        let k1 = k.clone().union(&star1);
        let k2 = k.clone().union(&star2);
        Ok((k, k1, k2))
    }
}

/// Face lattice of the Minkowski sum computed without the lifting: the hull
/// of all pairwise vertex sums. Independent oracle for the mixed-face route.
pub fn direct_minkowski_sum(p1: &VPolytope, p2: &VPolytope) -> Result<FaceLattice, CayleyError> {
    if p1.dim() != p2.dim() || p1.dim() == 0 {
        return Err(CayleyError::DimensionMismatch(p1.dim(), p2.dim()));
    }
    let mut sums = Vec::with_capacity(p1.num_vertices() * p2.num_vertices());
    for a in p1.vertices() {
        for b in p2.vertices() {
            sums.push(a.add(b));
        }
    }
    let cfg = HullConfig {
        max_dim: p1.dim(),
        max_points: sums.len(),
    };
    Ok(convex_hull_with(&sums, p1.dim(), &cfg)?)
}

/// Sum f-vector via the lifted route, as a bare function.
pub fn sum_f_vector_via_lift(p1: &VPolytope, p2: &VPolytope) -> Result<FVector, CayleyError> {
    Ok(CayleyComplex::build(p1.clone(), p2.clone())?.sum_f_vector())
}

/// The vertex sets of the lifted hull's mixed k-faces, one per (k-1)-face of
/// the sum, as pairs of summand-vertex index sets. Used by tests to slice
/// the hull geometrically.
pub struct MixedEdgeSection {
    pub points: Vec<Point>,
}

/// Section of the lifted hull at height lambda: one point per mixed edge,
/// namely the edge's intersection with the hyperplane, projected back to
/// E^d. Hulling these reproduces the weighted Minkowski sum.
pub fn edge_section(cx: &CayleyComplex, lambda: &Rational) -> MixedEdgeSection {
    let d = cx.summand_dim();
    let lat = cx.lattice();
    let mut points = Vec::new();
    for f in lat.faces_of_dim(1) {
        let vs = f.vertex_set();
        let a = lat.vertex(vs[0] as usize);
        let b = lat.vertex(vs[1] as usize);
        let (ha, hb) = (&a.coords()[d], &b.coords()[d]);
        if ha == hb {
            continue;
        }
        // parameter along the edge hitting the slice height
        let t = (lambda - ha) / (hb - ha);
        let full: Vec<Rational> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x + &t * (y - x))
            .collect();
        points.push(Point::new(full[..d].to_vec()));
    }
    MixedEdgeSection { points }
}
