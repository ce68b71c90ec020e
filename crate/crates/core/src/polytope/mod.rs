//! Exact V-polytopes in small ambient dimension and their complete face
//! lattices.
//!
//! The hull engine is an incremental beneath-beyond insertion with exact
//! rational orientation predicates. Coplanar patches merge into single
//! non-simplicial facets, lower-dimensional input is hulled inside its
//! affine hull (the intrinsic dimension is recorded), and the full lattice
//! is produced by closing facet vertex sets under intersection.

mod hull;

pub use hull::HullConfig;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{rat_int, Rational};
use crate::vectors::FVector;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("empty input")]
    EmptyInput,
    #[error("all input points coincide")]
    AllCoincident,
    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{got} input points exceed the limit {limit}")]
    TooManyPoints { got: usize, limit: usize },
    #[error("ambient dimension {got} exceeds the limit {limit}")]
    DimensionLimit { got: usize, limit: usize },
    #[error("operation requires a full-dimensional polytope")]
    NotFullDimensional,
    #[error("no facet with index {0}")]
    NoSuchFacet(usize),
    #[error("no vertex with index {0}")]
    NoSuchVertex(usize),
    #[error("input contains duplicate or non-extreme points")]
    NonExtremeInput,
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// A point of E^n with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The point with one extra trailing coordinate appended.
    pub fn lifted(&self, last: Rational) -> Point {
        let mut c = self.coords.clone();
        c.push(last);
        Point::new(c)
    }

    /// The point with its last coordinate dropped.
    pub fn projected(&self) -> Point {
        let mut c = self.coords.clone();
        c.pop();
        Point::new(c)
    }

    pub fn translated(&self, offset: &[Rational]) -> Point {
        Point::new(self.coords.iter().zip(offset).map(|(a, b)| a + b).collect())
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(
            self.coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Affine functional `offset + normal·x`, stored as a primitive integer
/// vector with the sign fixed so the polytope interior evaluates negative
/// ("beneath"). Equal supporting hyperplanes therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hyperplane {
    offset: BigInt,
    normal: Vec<BigInt>,
}

impl Hyperplane {
    /// Builds from rational coefficients, clearing denominators and dividing
    /// out the content. The zero functional is rejected by the callers.
    fn from_rational(offset: Rational, normal: Vec<Rational>) -> Self {
        let mut lcm = offset.denom().clone();
        for c in &normal {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = Vec::with_capacity(normal.len() + 1);
        ints.push(offset.numer() * (&lcm / offset.denom()));
        for c in &normal {
            ints.push(c.numer() * (&lcm / c.denom()));
        }
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        if !gcd.is_zero() && !gcd.is_one() {
            for v in &mut ints {
                *v = &*v / &gcd;
            }
        }
        let normal = ints.split_off(1);
        Hyperplane {
            offset: ints.pop().expect("offset"),
            normal,
        }
    }

    fn negated(mut self) -> Self {
        self.offset = -self.offset;
        for c in &mut self.normal {
            *c = -c.clone();
        }
        self
    }

    pub fn eval(&self, p: &Point) -> Rational {
        self.eval_coords(p.coords())
    }

    fn eval_coords(&self, coords: &[Rational]) -> Rational {
        debug_assert_eq!(coords.len(), self.normal.len());
        let mut acc = Rational::from_integer(self.offset.clone());
        for (c, x) in self.normal.iter().zip(coords) {
            acc += Rational::from_integer(c.clone()) * x;
        }
        acc
    }

    /// The linear part, as a direction pointing to the beyond side.
    pub fn outward_direction(&self) -> Vec<Rational> {
        self.normal
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }
}

/// Exact side of a facet's supporting hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Beyond,
    Beneath,
    On,
}

/// A face identified by its sorted vertex-index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    vertex_set: Vec<u32>,
}

impl Face {
    pub fn vertex_set(&self) -> &[u32] {
        &self.vertex_set
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertex_set.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        is_subset(&self.vertex_set, &other.vertex_set)
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut i = 0;
    for &x in a {
        loop {
            if i == b.len() {
                return false;
            }
            if b[i] == x {
                i += 1;
                break;
            }
            if b[i] > x {
                return false;
            }
            i += 1;
        }
    }
    true
}

/// A collection of faces keyed by sorted vertex-index set, each with its
/// dimension. May contain the empty face (dimension -1). Used for stars,
/// links and the derived face sets of the lifted-sum pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceSet {
    faces: BTreeMap<Vec<u32>, i64>,
}

impl FaceSet {
    pub fn new() -> Self {
        FaceSet::default()
    }

    pub fn insert(&mut self, vertex_set: Vec<u32>, dim: i64) {
        debug_assert!(vertex_set.windows(2).all(|w| w[0] < w[1]));
        self.faces.insert(vertex_set, dim);
    }

    pub fn contains(&self, vertex_set: &[u32]) -> bool {
        self.faces.contains_key(vertex_set)
    }

    pub fn dim_of(&self, vertex_set: &[u32]) -> Option<i64> {
        self.faces.get(vertex_set).copied()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.faces.iter().map(|(v, &d)| (v, d))
    }

    pub fn union(mut self, other: &FaceSet) -> FaceSet {
        for (v, d) in other.iter() {
            self.faces.insert(v.clone(), d);
        }
        self
    }

    /// Count of k-faces.
    pub fn count_dim(&self, dim: i64) -> i64 {
        self.faces.values().filter(|&&d| d == dim).count() as i64
    }

    /// f-vector (f_{-1}, f_0, …, f_{grading-1}). f_{-1} is 1 when the empty
    /// face is present, else 0; use [`FaceSet::f_vector_with`] to override
    /// (the mixed face set of a lifted sum uses f_{-1} = -1).
    pub fn f_vector(&self, grading: usize) -> FVector {
        let fm1 = if self.faces.contains_key(&Vec::new()) {
            1
        } else {
            0
        };
        self.f_vector_with(grading, fm1)
    }

    pub fn f_vector_with(&self, grading: usize, f_minus_one: i64) -> FVector {
        let mut counts = vec![0i64; grading + 1];
        counts[0] = f_minus_one;
        for (v, &d) in &self.faces {
            if v.is_empty() {
                continue;
            }
            debug_assert!(
                d >= 0 && (d as usize) < grading,
                "face dim {d} vs grading {grading}"
            );
            counts[(d + 1) as usize] += 1;
        }
        FVector::from_raw(counts)
    }
}

/// The complete face lattice of a polytope: faces graded by dimension from
/// the empty face to the top face, with cover incidences, the vertex points,
/// and (for full-dimensional polytopes) the exact facet hyperplanes.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    ambient_dim: usize,
    intrinsic_dim: usize,
    vertices: Vec<Point>,
    non_extreme: Vec<Point>,
    /// levels[l] holds the faces of dimension l-1, sorted by vertex set;
    /// levels[0] is the empty face, levels[intrinsic_dim + 1] the top face.
    levels: Vec<Vec<Face>>,
    /// children[l][i]: indices into levels[l-1] of the covered faces.
    children: Vec<Vec<Vec<u32>>>,
    /// parents[l][i]: indices into levels[l+1] of the covering faces.
    parents: Vec<Vec<Vec<u32>>>,
    /// Supporting hyperplanes parallel to the facet level; present only when
    /// intrinsic_dim == ambient_dim.
    facet_planes: Option<Vec<Hyperplane>>,
}

impl FaceLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim == self.ambient_dim
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Distinct input points that turned out not to be extreme.
    pub fn non_extreme(&self) -> &[Point] {
        &self.non_extreme
    }

    pub fn vertex_index_of(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Faces of the given dimension, -1 ..= intrinsic_dim.
    pub fn faces_of_dim(&self, dim: i64) -> &[Face] {
        let l = (dim + 1) as usize;
        &self.levels[l]
    }

    pub fn facets(&self) -> &[Face] {
        self.faces_of_dim(self.intrinsic_dim as i64 - 1)
    }

    pub fn top(&self) -> &Face {
        &self.levels[self.intrinsic_dim + 1][0]
    }

    /// Looks a face up by vertex set; returns its dimension. The top face is
    /// included.
    pub fn face_dim(&self, vertex_set: &[u32]) -> Option<i64> {
        for (l, faces) in self.levels.iter().enumerate() {
            if faces
                .binary_search_by(|f| f.vertex_set.as_slice().cmp(vertex_set))
                .is_ok()
            {
                return Some(l as i64 - 1);
            }
        }
        None
    }

    /// Cover incidences downward: indices into the faces of one dimension
    /// lower.
    pub fn children_of(&self, dim: i64, idx: usize) -> &[u32] {
        &self.children[(dim + 1) as usize][idx]
    }

    /// Cover incidences upward: indices into the faces of one dimension
    /// higher.
    pub fn parents_of(&self, dim: i64, idx: usize) -> &[u32] {
        &self.parents[(dim + 1) as usize][idx]
    }

    /// Boundary f-vector (f_{-1}, f_0, …, f_{D-1}) over the proper faces.
    pub fn f_vector(&self) -> FVector {
        let d = self.intrinsic_dim;
        let mut counts = vec![0i64; d + 1];
        counts[0] = 1;
        for l in 1..=d {
            counts[l] = self.levels[l].len() as i64;
        }
        FVector::from_raw(counts)
    }

    pub fn facet_plane(&self, facet: usize) -> Result<&Hyperplane, PolytopeError> {
        let planes = self
            .facet_planes
            .as_ref()
            .ok_or(PolytopeError::NotFullDimensional)?;
        planes.get(facet).ok_or(PolytopeError::NoSuchFacet(facet))
    }

    /// All proper faces (everything except the top face; includes the empty
    /// face), with dimensions.
    pub fn proper_faces(&self) -> FaceSet {
        let mut set = FaceSet::new();
        for l in 0..=self.intrinsic_dim {
            for f in &self.levels[l] {
                set.insert(f.vertex_set.clone(), l as i64 - 1);
            }
        }
        set
    }

    /// A canonical, input-order-independent image of the lattice: vertices
    /// sorted by coordinates and faces relabeled accordingly.
    pub fn canonical(&self) -> CanonicalLattice {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut relabel = vec![0u32; self.vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let mut faces = BTreeSet::new();
        for (l, level) in self.levels.iter().enumerate() {
            for f in level {
                let mut vs: Vec<u32> = f.vertex_set.iter().map(|&v| relabel[v as usize]).collect();
                vs.sort_unstable();
                faces.insert((l as i64 - 1, vs));
            }
        }
        CanonicalLattice {
            vertices: order.iter().map(|&i| self.vertices[i].clone()).collect(),
            faces,
        }
    }
}

/// Order-independent lattice image for bit-exact comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLattice {
    pub vertices: Vec<Point>,
    pub faces: BTreeSet<(i64, Vec<u32>)>,
}

/// A polytope given by its vertices. Construction verifies that the listed
/// points are pairwise distinct extreme points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Point>,
}

impl VPolytope {
    /// Strict constructor: rejects duplicates and non-extreme points.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self, PolytopeError> {
        let n = points.len();
        let (poly, dropped) = Self::from_points(dim, points)?;
        if !dropped.is_empty() || poly.vertices.len() != n {
            return Err(PolytopeError::NonExtremeInput);
        }
        Ok(poly)
    }

    /// Lenient constructor: deduplicates, keeps the extreme points, and
    /// reports the distinct points that were not extreme.
    pub fn from_points(
        dim: usize,
        points: Vec<Point>,
    ) -> Result<(Self, Vec<Point>), PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::EmptyInput);
        }
        for p in &points {
            if p.dim() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let distinct: Vec<Point> = points
            .into_iter()
            .filter(|p| seen.insert(p.clone()))
            .collect();
        if distinct.len() == 1 {
            return Ok((
                VPolytope {
                    dim,
                    vertices: distinct,
                },
                Vec::new(),
            ));
        }
        let cfg = HullConfig {
            max_points: distinct.len(),
            max_dim: dim,
        };
        let lat = convex_hull_with(&distinct, dim, &cfg)?;
        let dropped = lat.non_extreme().to_vec();
        Ok((
            VPolytope {
                dim,
                vertices: lat.vertices().to_vec(),
            },
            dropped,
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn translated(&self, offset: &[Rational]) -> VPolytope {
        VPolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.translated(offset)).collect(),
        }
    }

    /// Face lattice of this polytope.
    pub fn lattice(&self) -> Result<FaceLattice, PolytopeError> {
        let cfg = HullConfig {
            max_points: self.vertices.len(),
            max_dim: self.dim,
        };
        convex_hull_with(&self.vertices, self.dim, &cfg)
    }
}

/// Convex hull with the complete face lattice, under the default guardrails
/// ([`HullConfig::default`]).
pub fn convex_hull(points: &[Point], ambient_dim: usize) -> Result<FaceLattice, PolytopeError> {
    convex_hull_with(points, ambient_dim, &HullConfig::default())
}

/// Convex hull with explicit size guardrails.
pub fn convex_hull_with(
    points: &[Point],
    ambient_dim: usize,
    cfg: &HullConfig,
) -> Result<FaceLattice, PolytopeError> {
    hull::build(points, ambient_dim, cfg)
}

/// Exact side classification of `p` against a facet's supporting
/// hyperplane, oriented so the polytope interior is beneath.
pub fn classify_point(lat: &FaceLattice, facet: usize, p: &Point) -> Result<Side, PolytopeError> {
    if p.dim() != lat.ambient_dim() {
        return Err(PolytopeError::DimensionMismatch {
            expected: lat.ambient_dim(),
            got: p.dim(),
        });
    }
    let plane = lat.facet_plane(facet)?;
    let v = plane.eval(p);
    Ok(if v.is_positive() {
        Side::Beyond
    } else if v.is_negative() {
        Side::Beneath
    } else {
        Side::On
    })
}

/// A point strictly beyond the given facet and strictly beneath every other
/// facet, found by stepping from the facet's vertex centroid along the
/// outward normal with exact halving.
pub fn point_beyond_facet(lat: &FaceLattice, facet: usize) -> Result<Point, PolytopeError> {
    let plane = lat.facet_plane(facet)?.clone();
    let face = &lat.facets()[facet];
    let dim = lat.ambient_dim();
    let mut centroid = vec![Rational::zero(); dim];
    for &v in face.vertex_set() {
        for (c, x) in centroid.iter_mut().zip(lat.vertex(v as usize).coords()) {
            *c += x;
        }
    }
    let n = rat_int(face.vertex_set().len() as i64);
    for c in &mut centroid {
        *c /= &n;
    }
    let dir = plane.outward_direction();
    let mut step = Rational::one();
    loop {
        let candidate = Point::new(
            centroid
                .iter()
                .zip(&dir)
                .map(|(c, d)| c + d * &step)
                .collect(),
        );
        let ok = (0..lat.facets().len()).all(|g| {
            if g == facet {
                return true;
            }
            matches!(classify_point(lat, g, &candidate), Ok(Side::Beneath))
        });
        if ok {
            debug_assert_eq!(classify_point(lat, facet, &candidate), Ok(Side::Beyond));
            return Ok(candidate);
        }
        step /= rat_int(2);
    }
}

/// Star and link of a vertex: the star is every face lying under some facet
/// that contains the vertex (including the empty face); the link is the
/// subset of the star not containing the vertex.
pub fn star_and_link(lat: &FaceLattice, v: usize) -> Result<(FaceSet, FaceSet), PolytopeError> {
    if v >= lat.num_vertices() {
        return Err(PolytopeError::NoSuchVertex(v));
    }
    let v = v as u32;
    let carriers: Vec<&Face> = lat
        .facets()
        .iter()
        .filter(|f| f.contains_vertex(v))
        .collect();
    let mut star = FaceSet::new();
    let mut link = FaceSet::new();
    for l in 0..=lat.intrinsic_dim() {
        for f in lat.faces_of_dim(l as i64 - 1) {
            if carriers.iter().any(|c| f.is_subset_of(c)) {
                star.insert(f.vertex_set.clone(), l as i64 - 1);
                if !f.contains_vertex(v) {
                    link.insert(f.vertex_set.clone(), l as i64 - 1);
                }
            }
        }
    }
    Ok((star, link))
}

/// True iff every proper face outside the excluded facet list is a simplex
/// (a k-face with exactly k+1 vertices). `exclude` holds facet indices.
pub fn is_simplicial(lat: &FaceLattice, exclude: &[usize]) -> bool {
    let facet_dim = lat.intrinsic_dim() as i64 - 1;
    for l in 1..=lat.intrinsic_dim() {
        let dim = l as i64 - 1;
        for (i, f) in lat.faces_of_dim(dim).iter().enumerate() {
            if dim == facet_dim && exclude.contains(&i) {
                continue;
            }
            if f.vertex_set.len() as i64 != dim + 1 {
                return false;
            }
        }
    }
    true
}
