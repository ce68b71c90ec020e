//! File formats and report DTOs.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use minksum_core::bounds::BoundReport;
use minksum_core::exact::{format_rational, parse_rational, Matrix};
use minksum_core::polytope::{FaceLattice, Point, VPolytope};
use minksum_core::vectors::FVector;
use minksum_core::verify::{Check, InstanceReport, Status};
use minksum_core::witness::{Certificate, WitnessParams};

/// On-disk polytope: `{"dim": n, "vertices": [["p/q", …], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeFile {
    pub fn from_polytope(p: &VPolytope) -> Self {
        PolytopeFile {
            dim: p.dim(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn into_polytope(self) -> Result<VPolytope> {
        let mut pts = Vec::with_capacity(self.vertices.len());
        for (i, row) in self.vertices.iter().enumerate() {
            if row.len() != self.dim {
                bail!(
                    "vertex {i} has {} coordinates, expected {}",
                    row.len(),
                    self.dim
                );
            }
            let coords = row
                .iter()
                .map(|s| parse_rational(s).with_context(|| format!("vertex {i}")))
                .collect::<Result<Vec<_>>>()?;
            pts.push(Point::new(coords));
        }
        VPolytope::new(self.dim, pts).map_err(|e| anyhow::anyhow!("invalid polytope: {e}"))
    }
}

pub fn read_polytope(path: &Path) -> Result<VPolytope> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: PolytopeFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    file.into_polytope()
}

pub fn write_polytope(path: &Path, p: &VPolytope) -> Result<()> {
    let file = PolytopeFile::from_polytope(p);
    fs::write(path, to_pretty_json(&file)?).with_context(|| format!("writing {}", path.display()))
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Matrix wire format: a JSON array of rows of "p/q" strings.
pub fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn matrix_from_rows(rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| Ok(parse_rational(s)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed).map_err(|e| anyhow::anyhow!("invalid matrix: {e}"))
}

/// f-vector with its f_{-1} entry explicit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FVectorDto {
    pub f_minus_1: i64,
    pub counts: Vec<i64>,
}

impl FVectorDto {
    pub fn from_fvector(f: &FVector) -> Self {
        FVectorDto {
            f_minus_1: f.counts()[0],
            counts: f.counts()[1..].to_vec(),
        }
    }
}

/// One row of a bound table. `face_dim` is the user-facing 0-based face
/// dimension of the sum; `k` is the internal shifted index (face_dim + 1).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundRowDto {
    pub face_dim: usize,
    pub k: usize,
    pub bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attained: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReportDto {
    pub d: usize,
    pub n1: i64,
    pub n2: i64,
    pub rows: Vec<BoundRowDto>,
    /// The three vertex-parameterized maxima, present only for d = 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_vertices_3d: Option<[i64; 3]>,
    /// The three facet-parameterized maxima, present only for d = 3.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_facets_3d: Option<[i64; 3]>,
}

impl BoundReportDto {
    pub fn from_report(r: &BoundReport) -> Self {
        let rows = r
            .rows
            .iter()
            .map(|row| BoundRowDto {
                face_dim: row.k - 1,
                k: row.k,
                bound: row.bound,
                attained: row.attained,
                tight: row.equality(),
            })
            .collect();
        BoundReportDto {
            d: r.d,
            n1: r.n1,
            n2: r.n2,
            rows,
            by_vertices_3d: None,
            by_facets_3d: None,
        }
    }
}

/// Face lattice export: vertices plus per-dimension sorted vertex-index
/// sets (dimensions 0 through the top).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeDto {
    pub ambient_dim: usize,
    pub intrinsic_dim: usize,
    pub vertices: Vec<Vec<String>>,
    /// faces_by_dim[i] holds the i-dimensional faces.
    pub faces_by_dim: Vec<Vec<Vec<u32>>>,
}

impl LatticeDto {
    pub fn from_lattice(lat: &FaceLattice) -> Self {
        let vertices = lat
            .vertices()
            .iter()
            .map(|v| v.coords().iter().map(format_rational).collect())
            .collect();
        let faces_by_dim = (0..=lat.intrinsic_dim() as i64)
            .map(|dim| {
                lat.faces_of_dim(dim)
                    .iter()
                    .map(|f| f.vertex_set().to_vec())
                    .collect()
            })
            .collect();
        LatticeDto {
            ambient_dim: lat.ambient_dim(),
            intrinsic_dim: lat.intrinsic_dim(),
            vertices,
            faces_by_dim,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SumReportDto {
    pub d: usize,
    pub n1: usize,
    pub n2: usize,
    pub f_sum: FVectorDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_sum_direct: Option<FVectorDto>,
    pub oracles_agree: Option<bool>,
    /// Absent when the parameters fall outside the bound formulas' range
    /// (d < 2 or a summand with fewer than d+1 vertices).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundReportDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_lattice: Option<LatticeDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub status: String,
    pub detail: String,
}

impl CheckDto {
    pub fn from_check(c: &Check) -> Self {
        CheckDto {
            name: c.name.to_string(),
            status: match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            }
            .to_string(),
            detail: c.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReportDto {
    pub d: usize,
    pub n1: usize,
    pub n2: usize,
    pub f_sum: FVectorDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_sum_direct: Option<FVectorDto>,
    pub f_mixed: FVectorDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_mixed_complex: Option<FVectorDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_mixed_complex_apex1: Option<FVectorDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_mixed_complex_apex2: Option<FVectorDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_apex_boundary: Option<FVectorDto>,
    pub simplicial_except_ends: bool,
    pub max_k_neighborly: usize,
    pub max_k_bineighborly: usize,
    pub bounds: BoundReportDto,
    pub checks: Vec<CheckDto>,
    pub all_passed: bool,
}

impl VerifyReportDto {
    pub fn from_report(r: &InstanceReport) -> Self {
        VerifyReportDto {
            d: r.d,
            n1: r.n1,
            n2: r.n2,
            f_sum: FVectorDto::from_fvector(&r.f_sum),
            f_sum_direct: r.f_sum_direct.as_ref().map(FVectorDto::from_fvector),
            f_mixed: FVectorDto::from_fvector(&r.f_mixed),
            f_mixed_complex: r.f_complex.as_ref().map(FVectorDto::from_fvector),
            f_mixed_complex_apex1: r.f_complex_1.as_ref().map(FVectorDto::from_fvector),
            f_mixed_complex_apex2: r.f_complex_2.as_ref().map(FVectorDto::from_fvector),
            f_apex_boundary: r.f_apex_boundary.as_ref().map(FVectorDto::from_fvector),
            simplicial_except_ends: r.simplicial_except_ends,
            max_k_neighborly: r.max_k_neighborly,
            max_k_bineighborly: r.max_k_bineighborly,
            bounds: BoundReportDto::from_report(&r.bounds),
            checks: r.checks.iter().map(CheckDto::from_check).collect(),
            all_passed: r.all_passed(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDto {
    pub value: String,
    pub subsets: u64,
    pub probes_per_subset: u64,
    pub determinants_checked: u64,
    pub min_determinant: String,
    pub halvings: u32,
}

impl CertificateDto {
    pub fn from_certificate(c: &Certificate) -> Self {
        CertificateDto {
            value: format_rational(&c.value),
            subsets: c.subsets,
            probes_per_subset: c.probes_per_subset,
            determinants_checked: c.determinants_checked,
            min_determinant: format_rational(&c.min_determinant),
            halvings: c.halvings,
        }
    }
}

/// Certificate file for an odd-dimensional witness: the chosen parameters
/// with the exhaustive positivity evidence for tau and zeta.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessCertificateFile {
    pub d: usize,
    pub n1: usize,
    pub n2: usize,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub epsilon: String,
    pub tau: CertificateDto,
    pub zeta: CertificateDto,
}

impl WitnessCertificateFile {
    pub fn new(params: &WitnessParams, tau: &Certificate, zeta: &Certificate) -> Self {
        WitnessCertificateFile {
            d: params.d,
            n1: params.n1(),
            n2: params.n2(),
            alpha: params.alpha.iter().map(format_rational).collect(),
            beta: params.beta.iter().map(format_rational).collect(),
            epsilon: format_rational(&params.epsilon),
            tau: CertificateDto::from_certificate(tau),
            zeta: CertificateDto::from_certificate(zeta),
        }
    }
}
