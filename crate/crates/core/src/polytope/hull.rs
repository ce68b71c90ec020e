//! Incremental beneath-beyond hull with exact orientation predicates.
//!
//! Facets are stored as (supporting functional, all processed points lying
//! on it). Inserting a point removes the facets it is beyond, extends the
//! facets it lies on, and cones new facets over the horizon ridges; new
//! facets that share a hyperplane merge, which is how non-simplicial facets
//! appear. Once all points are in, extreme points are read off via
//! smallest-face kernels and the lattice is closed under intersections.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use super::{Face, FaceLattice, Hyperplane, Point, PolytopeError};
use crate::exact::{det, rat_int, Matrix, Rational};

/// Size guardrails for hull construction. The defaults cover every instance
/// the CLI accepts; internal callers (the pairwise-sum oracle) pass larger
/// explicit limits.
#[derive(Clone, Debug)]
pub struct HullConfig {
    pub max_dim: usize,
    pub max_points: usize,
}

impl Default for HullConfig {
    fn default() -> Self {
        HullConfig {
            max_dim: 8,
            max_points: 32,
        }
    }
}

type Coords = Vec<Rational>;

struct RawFacet {
    plane: Hyperplane,
    /// Sorted indices (into the distinct point list) of every processed
    /// point lying on the plane.
    points: Vec<usize>,
}

/// Row-echelon accumulator for exact rank bookkeeping.
struct Echelon {
    rows: Vec<Coords>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces v against the accumulated rows; if independent, stores it and
    /// returns true.
    fn try_add(&mut self, mut v: Coords) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = &v[p] / &row[p];
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.pivots.push(p);
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn sub(a: &[Rational], b: &[Rational]) -> Coords {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dimension of the affine hull of the listed points.
fn affine_dim(coords: &[Coords], idxs: &[usize]) -> usize {
    if idxs.is_empty() {
        return 0; // unused; callers guarantee non-empty
    }
    let base = &coords[idxs[0]];
    let mut ech = Echelon::new();
    for &i in &idxs[1..] {
        ech.try_add(sub(&coords[i], base));
    }
    ech.rank()
}

/// Greedy affine basis: indices of 1 + rank(points) points spanning the
/// affine hull of the whole set.
fn affine_basis(coords: &[Coords], idxs: &[usize]) -> Vec<usize> {
    let mut basis = vec![idxs[0]];
    let base = &coords[idxs[0]];
    let mut ech = Echelon::new();
    for &i in &idxs[1..] {
        if ech.try_add(sub(&coords[i], base)) {
            basis.push(i);
        }
    }
    basis
}

/// Solves B·λ = rhs for a full-column-rank matrix B given by columns;
/// the system must be consistent.
fn solve_columns(columns: &[Coords], rhs: &Coords) -> Result<Coords, PolytopeError> {
    let rows = rhs.len();
    let r = columns.len();
    let mut aug: Vec<Coords> = (0..rows)
        .map(|i| {
            let mut row: Coords = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(r);
    let mut used = vec![false; rows];
    for col in 0..r {
        let pr = (0..rows)
            .find(|&i| !used[i] && !aug[i][col].is_zero())
            .ok_or(PolytopeError::Internal("rank-deficient basis"))?;
        used[pr] = true;
        pivot_rows.push(pr);
        let pivot = aug[pr][col].clone();
        for i in 0..rows {
            if i != pr && !aug[i][col].is_zero() {
                let factor = &aug[i][col] / &pivot;
                for j in col..=r {
                    let v = &aug[pr][j] * &factor;
                    aug[i][j] -= v;
                }
            }
        }
    }
    for i in 0..rows {
        if !used[i] && !aug[i][r].is_zero() {
            return Err(PolytopeError::Internal("inconsistent affine system"));
        }
    }
    Ok((0..r)
        .map(|col| &aug[pivot_rows[col]][r] / &aug[pivot_rows[col]][col])
        .collect())
}

/// The affine functional (up to scale) vanishing on d affinely independent
/// points of E^d, via cofactors of the stacked [1 | p] matrix.
fn plane_through(points: &[&Coords], dim: usize) -> Result<(Rational, Coords), PolytopeError> {
    debug_assert_eq!(points.len(), dim);
    let n = Matrix::from_fn(dim, dim + 1, |i, j| {
        if j == 0 {
            Rational::one()
        } else {
            points[i][j - 1].clone()
        }
    });
    let all: Vec<usize> = (0..dim).collect();
    let mut coeffs: Vec<Rational> = Vec::with_capacity(dim + 1);
    for j in 0..=dim {
        let keep: Vec<usize> = (0..=dim).filter(|&c| c != j).collect();
        let minor = det(&n.submatrix(&all, &keep)).map_err(|_| PolytopeError::Internal("det"))?;
        coeffs.push(if j % 2 == 0 { minor } else { -minor });
    }
    if coeffs.iter().all(Zero::is_zero) {
        return Err(PolytopeError::Internal("degenerate hyperplane"));
    }
    let normal = coeffs.split_off(1);
    Ok((coeffs.pop().expect("offset"), normal))
}

fn eval_affine(offset: &Rational, normal: &[Rational], coords: &Coords) -> Rational {
    let mut acc = offset.clone();
    for (c, x) in normal.iter().zip(coords) {
        acc += c * x;
    }
    acc
}

/// Oriented plane through the given points with `interior` strictly beneath.
fn oriented_plane(
    points: &[&Coords],
    dim: usize,
    interior: &Coords,
) -> Result<Hyperplane, PolytopeError> {
    let (offset, normal) = plane_through(points, dim)?;
    let at_ref = eval_affine(&offset, &normal, interior);
    if at_ref.is_zero() {
        return Err(PolytopeError::Internal("reference point on facet plane"));
    }
    let plane = Hyperplane::from_rational(offset, normal);
    Ok(if at_ref.is_positive() {
        plane.negated()
    } else {
        plane
    })
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(super) fn build(
    points: &[Point],
    ambient_dim: usize,
    cfg: &HullConfig,
) -> Result<FaceLattice, PolytopeError> {
    if points.is_empty() {
        return Err(PolytopeError::EmptyInput);
    }
    if ambient_dim > cfg.max_dim {
        return Err(PolytopeError::DimensionLimit {
            got: ambient_dim,
            limit: cfg.max_dim,
        });
    }
    if points.len() > cfg.max_points {
        return Err(PolytopeError::TooManyPoints {
            got: points.len(),
            limit: cfg.max_points,
        });
    }
    for p in points {
        if p.dim() != ambient_dim {
            return Err(PolytopeError::DimensionMismatch {
                expected: ambient_dim,
                got: p.dim(),
            });
        }
    }

    // Deduplicate, keeping first-occurrence order.
    let mut seen = BTreeSet::new();
    let distinct: Vec<Point> = points
        .iter()
        .filter(|p| seen.insert((*p).clone()))
        .cloned()
        .collect();
    if distinct.len() == 1 {
        return Err(PolytopeError::AllCoincident);
    }

    let all_idxs: Vec<usize> = (0..distinct.len()).collect();
    let ambient_coords: Vec<Coords> = distinct.iter().map(|p| p.coords().to_vec()).collect();
    let basis = affine_basis(&ambient_coords, &all_idxs);
    let intrinsic = basis.len() - 1;

    // Work in affine-hull coordinates when the input is lower-dimensional.
    let coords: Vec<Coords> = if intrinsic == ambient_dim {
        ambient_coords
    } else {
        let base = ambient_coords[basis[0]].clone();
        let dirs: Vec<Coords> = basis[1..]
            .iter()
            .map(|&i| sub(&ambient_coords[i], &base))
            .collect();
        ambient_coords
            .iter()
            .map(|c| solve_columns(&dirs, &sub(c, &base)))
            .collect::<Result<_, _>>()?
    };

    let facets = if intrinsic == 1 {
        hull_1d(&coords)
    } else {
        hull_nd(&coords, intrinsic, &basis)?
    };
    finalize(ambient_dim, intrinsic, distinct, coords, facets)
}

/// 1-dimensional hull: the two endpoints, as facets of the segment.
fn hull_1d(coords: &[Coords]) -> Vec<RawFacet> {
    let mut min = 0usize;
    let mut max = 0usize;
    for (i, c) in coords.iter().enumerate() {
        if c[0] < coords[min][0] {
            min = i;
        }
        if c[0] > coords[max][0] {
            max = i;
        }
    }
    // x - max <= 0 and min - x <= 0 on the segment
    let lo = Hyperplane::from_rational(coords[min][0].clone(), vec![-Rational::one()]);
    let hi = Hyperplane::from_rational(-coords[max][0].clone(), vec![Rational::one()]);
    vec![
        RawFacet {
            plane: lo,
            points: vec![min],
        },
        RawFacet {
            plane: hi,
            points: vec![max],
        },
    ]
}

fn hull_nd(coords: &[Coords], dim: usize, basis: &[usize]) -> Result<Vec<RawFacet>, PolytopeError> {
    // Interior reference: centroid of the spanning simplex. It stays interior
    // as the hull grows, so it orients every facet ever created.
    let nverts = rat_int(basis.len() as i64);
    let mut interior = vec![Rational::zero(); dim];
    for &i in basis {
        for (acc, x) in interior.iter_mut().zip(&coords[i]) {
            *acc += x;
        }
    }
    for acc in &mut interior {
        *acc /= &nverts;
    }

    let mut facets: Vec<RawFacet> = Vec::new();
    for skip in 0..basis.len() {
        let pts: Vec<&Coords> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != skip)
            .map(|(_, &i)| &coords[i])
            .collect();
        let plane = oriented_plane(&pts, dim, &interior)?;
        let mut on: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != skip)
            .map(|(_, &i)| i)
            .collect();
        on.sort_unstable();
        facets.push(RawFacet { plane, points: on });
    }

    let mut processed: Vec<usize> = basis.to_vec();
    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
    for p in (0..coords.len()).filter(|i| !in_basis.contains(i)) {
        insert_point(&mut facets, &mut processed, coords, dim, &interior, p)?;
    }
    Ok(facets)
}

fn insert_point(
    facets: &mut Vec<RawFacet>,
    processed: &mut Vec<usize>,
    coords: &[Coords],
    dim: usize,
    interior: &Coords,
    p: usize,
) -> Result<(), PolytopeError> {
    let pc = &coords[p];
    let evals: Vec<Rational> = facets.iter().map(|f| f.plane.eval_coords(pc)).collect();
    let beyond: Vec<usize> = (0..facets.len())
        .filter(|&i| evals[i].is_positive())
        .collect();
    if beyond.is_empty() {
        // p is inside the current hull (possibly on its boundary).
        for (f, e) in facets.iter_mut().zip(&evals) {
            if e.is_zero() {
                f.points.push(p);
                f.points.sort_unstable();
            }
        }
        processed.push(p);
        return Ok(());
    }
    let kept: Vec<usize> = (0..facets.len())
        .filter(|&i| !evals[i].is_positive())
        .collect();

    // Horizon ridges: (dim-2)-dimensional intersections between a facet p is
    // beyond and one it is not.
    let mut ridges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &fv in &beyond {
        for &fk in &kept {
            let w = intersect_sorted(&facets[fv].points, &facets[fk].points);
            if w.len() + 1 >= dim && affine_dim(coords, &w) == dim - 2 {
                ridges.insert(w);
            }
        }
    }
    if ridges.is_empty() {
        return Err(PolytopeError::Internal("empty horizon"));
    }

    let on_planes: BTreeSet<Hyperplane> = kept
        .iter()
        .filter(|&&i| evals[i].is_zero())
        .map(|&i| facets[i].plane.clone())
        .collect();
    let mut new_planes: BTreeSet<Hyperplane> = BTreeSet::new();
    for ridge in &ridges {
        let rbasis = affine_basis(coords, ridge);
        let mut pts: Vec<&Coords> = rbasis.iter().map(|&i| &coords[i]).collect();
        pts.push(pc);
        let plane = oriented_plane(&pts, dim, interior)?;
        if !on_planes.contains(&plane) {
            new_planes.insert(plane);
        }
    }

    // Extend coplanar facets, drop the ones p is beyond, cone the rest.
    let mut next: Vec<RawFacet> = Vec::with_capacity(kept.len() + new_planes.len());
    for (i, mut f) in core::mem::take(facets).into_iter().enumerate() {
        if evals[i].is_positive() {
            continue;
        }
        if evals[i].is_zero() {
            f.points.push(p);
            f.points.sort_unstable();
        }
        next.push(f);
    }
    processed.push(p);
    for plane in new_planes {
        let mut on: Vec<usize> = processed
            .iter()
            .copied()
            .filter(|&q| plane.eval_coords(&coords[q]).is_zero())
            .collect();
        on.sort_unstable();
        debug_assert!(on.contains(&p));
        next.push(RawFacet { plane, points: on });
    }
    *facets = next;
    Ok(())
}

fn finalize(
    ambient_dim: usize,
    intrinsic: usize,
    distinct: Vec<Point>,
    coords: Vec<Coords>,
    facets: Vec<RawFacet>,
) -> Result<FaceLattice, PolytopeError> {
    let n = distinct.len();
    // Extreme points: q is a vertex iff the intersection of all facet point
    // sets containing q is exactly {q}.
    let mut is_vertex = vec![false; n];
    for q in 0..n {
        let mut kernel: Option<Vec<usize>> = None;
        for f in &facets {
            if f.points.binary_search(&q).is_ok() {
                kernel = Some(match kernel {
                    None => f.points.clone(),
                    Some(k) => intersect_sorted(&k, &f.points),
                });
            }
        }
        is_vertex[q] = kernel.as_deref() == Some(&[q]);
    }

    let mut vertex_of = vec![u32::MAX; n];
    let mut vertices: Vec<Point> = Vec::new();
    let mut vertex_coords: Vec<Coords> = Vec::new();
    let mut non_extreme = Vec::new();
    for (q, p) in distinct.into_iter().enumerate() {
        if is_vertex[q] {
            vertex_of[q] = vertices.len() as u32;
            vertices.push(p);
            vertex_coords.push(coords[q].clone());
        } else {
            non_extreme.push(p);
        }
    }

    // Facet vertex sets, then downward closure under intersections.
    let mut facet_sets: Vec<Vec<u32>> = Vec::with_capacity(facets.len());
    let mut plane_of: BTreeMap<Vec<u32>, Hyperplane> = BTreeMap::new();
    for f in &facets {
        let vs: Vec<u32> = f
            .points
            .iter()
            .filter(|&&q| is_vertex[q])
            .map(|&q| vertex_of[q])
            .collect();
        if vs.is_empty() {
            return Err(PolytopeError::Internal("facet without vertices"));
        }
        plane_of.insert(vs.clone(), f.plane.clone());
        facet_sets.push(vs);
    }

    let mut all: BTreeSet<Vec<u32>> = facet_sets.iter().cloned().collect();
    let mut queue: Vec<Vec<u32>> = all.iter().cloned().collect();
    while let Some(f) = queue.pop() {
        for g in &facet_sets {
            let mut w: Vec<u32> = f
                .iter()
                .copied()
                .filter(|v| g.binary_search(v).is_ok())
                .collect();
            w.sort_unstable();
            if all.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    all.insert(Vec::new());
    let top: Vec<u32> = (0..vertices.len() as u32).collect();
    all.insert(top);

    // Grade by affine dimension.
    let mut levels: Vec<Vec<Face>> = vec![Vec::new(); intrinsic + 2];
    let idxs_of = |vs: &[u32]| -> Vec<usize> { vs.iter().map(|&v| v as usize).collect() };
    for vs in all {
        let dim = if vs.is_empty() {
            -1
        } else {
            affine_dim(&vertex_coords, &idxs_of(&vs)) as i64
        };
        levels[(dim + 1) as usize].push(Face { vertex_set: vs });
    }
    for level in &mut levels {
        level.sort();
    }
    if levels[intrinsic + 1].len() != 1 {
        return Err(PolytopeError::Internal("top face not unique"));
    }
    let facet_level = &levels[intrinsic];
    if facet_level
        .iter()
        .map(|f| &f.vertex_set)
        .collect::<BTreeSet<_>>()
        .len()
        != facet_sets.len()
    {
        return Err(PolytopeError::Internal("facet level mismatch"));
    }

    // Cover incidences between consecutive levels.
    let mut children: Vec<Vec<Vec<u32>>> = Vec::with_capacity(levels.len());
    let mut parents: Vec<Vec<Vec<u32>>> =
        levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
    for (l, level) in levels.iter().enumerate() {
        let mut level_children = Vec::with_capacity(level.len());
        for (i, f) in level.iter().enumerate() {
            let mut ch = Vec::new();
            if l > 0 {
                for (j, g) in levels[l - 1].iter().enumerate() {
                    if g.is_subset_of(f) {
                        ch.push(j as u32);
                        parents[l - 1][j].push(i as u32);
                    }
                }
            }
            level_children.push(ch);
        }
        children.push(level_children);
    }

    let facet_planes = if intrinsic == ambient_dim {
        Some(
            levels[intrinsic]
                .iter()
                .map(|f| plane_of[&f.vertex_set].clone())
                .collect(),
        )
    } else {
        None
    };

    Ok(FaceLattice {
        ambient_dim,
        intrinsic_dim: intrinsic,
        vertices,
        non_extreme,
        levels,
        children,
        parents,
        facet_planes,
    })
}
