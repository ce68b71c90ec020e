use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use minksum::formats::{
    self, BoundReportDto, FVectorDto, LatticeDto, SumReportDto, VerifyReportDto,
    WitnessCertificateFile,
};
use minksum::random::{random_polytope, XorShift};
use minksum::render;
use minksum_core::bounds::{max_faces_3d_by_facets, max_faces_3d_by_vertices, BoundReport};
use minksum_core::cayley::{direct_minkowski_sum, CayleyComplex};
use minksum_core::exact::parse_rational;
use minksum_core::polytope::VPolytope;
use minksum_core::verify::{verify_pair, VerifyOptions};
use minksum_core::witness::{even_witness, odd_witness};

/// Exact face-count bounds for Minkowski sums of two convex polytopes,
/// extremal summand constructions, and verification reports.
#[derive(Parser)]
#[command(name = "minksum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Highest polytope dimension accepted without complaint.
    #[arg(long, global = true, default_value_t = 7)]
    max_dim: usize,
    /// Highest total vertex count (n1 + n2) accepted without complaint.
    #[arg(long, global = true, default_value_t = 24)]
    max_verts: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct OutOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the tight per-dimension maxima for f_k of a sum of two
    /// d-polytopes with n1 and n2 vertices.
    Bound {
        #[arg(short = 'd', long)]
        d: usize,
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Construct a bound-attaining summand pair and write it as polytope
    /// JSON files (plus a positivity certificate for odd d).
    Witness {
        #[arg(short = 'd', long)]
        d: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        /// Directory receiving p1.json, p2.json and certificate.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the Minkowski sum f-vector of two polytope files via both
    /// the lifted hull and the direct pairwise hull.
    Sum {
        p1: PathBuf,
        p2: PathBuf,
        /// Slice height for the lifted extraction, strictly between 0 and 1.
        #[arg(long, default_value = "1/2")]
        lambda: String,
        /// Include the full face lattice of the sum in the report.
        #[arg(long)]
        emit_lattice: bool,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Run the exact identity and inequality battery on two polytope
    /// files. Exits non-zero if any check fails.
    Verify {
        p1: PathBuf,
        p2: PathBuf,
        /// Slice height for the lifted extraction, strictly between 0 and 1.
        #[arg(long, default_value = "1/2")]
        lambda: String,
        /// Skip the direct pairwise-sum oracle (cheaper on large inputs).
        #[arg(long)]
        skip_direct: bool,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Generate a seeded random full-dimensional polytope file.
    Random {
        #[arg(short = 'd', long)]
        d: usize,
        /// Maximum number of vertices.
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn guard(d: usize, total_verts: usize, max_dim: usize, max_verts: usize) -> Result<()> {
    if d > max_dim {
        bail!("dimension {d} exceeds the default guardrail {max_dim}; pass --max-dim {d} to proceed (exact hulls grow quickly)");
    }
    if total_verts > max_verts {
        bail!("{total_verts} total vertices exceed the default guardrail {max_verts}; pass --max-verts {total_verts} to proceed");
    }
    Ok(())
}

fn emit(out: &OutOpts, rendered: String) -> Result<()> {
    match &out.out {
        Some(path) => {
            std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = (cli.max_dim, cli.max_verts);
    match cli.command {
        Command::Bound { d, n1, n2, out } => {
            guard(d, (n1 + n2) as usize, limits.0, limits.1)?;
            let report = BoundReport::new(d, n1, n2)?;
            let mut dto = BoundReportDto::from_report(&report);
            if d == 3 {
                let v = max_faces_3d_by_vertices(n1, n2)?;
                dto.by_vertices_3d = Some([v.0, v.1, v.2]);
                let m = max_faces_3d_by_facets(n1, n2)?;
                dto.by_facets_3d = Some([m.0, m.1, m.2]);
            }
            let rendered = match out.format {
                Format::Table => render::bound_table(&dto),
                Format::Json => formats::to_pretty_json(&dto)?,
                Format::Csv => render::bound_csv(&dto),
            };
            emit(&out, rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { d, n1, n2, out } => {
            guard(d, n1 + n2, limits.0, limits.1)?;
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let (p1, p2) = if d % 2 == 0 {
                even_witness(d, n1, n2)?
            } else {
                let w = odd_witness(d, n1, n2)?;
                let cert =
                    WitnessCertificateFile::new(&w.params, &w.tau_certificate, &w.zeta_certificate);
                let path = out.join("certificate.json");
                std::fs::write(&path, formats::to_pretty_json(&cert)?)
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
                (w.p1, w.p2)
            };
            for (name, p) in [("p1.json", &p1), ("p2.json", &p2)] {
                let path = out.join(name);
                formats::write_polytope(&path, p)?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sum {
            p1,
            p2,
            lambda,
            emit_lattice,
            out,
        } => {
            let p1 = formats::read_polytope(&p1)?;
            let p2 = formats::read_polytope(&p2)?;
            check_pair(&p1, &p2, limits)?;
            let lambda = parse_rational(&lambda)?;
            let cx = CayleyComplex::build_with_lambda(p1.clone(), p2.clone(), lambda)?;
            let f_sum = cx.sum_f_vector();
            let direct = direct_minkowski_sum(&p1, &p2)?;
            let f_direct = direct.f_vector();
            let bounds =
                BoundReport::new(p1.dim(), p1.num_vertices() as i64, p2.num_vertices() as i64)
                    .ok()
                    .map(|b| b.with_attained(&f_sum));
            let dto = SumReportDto {
                d: p1.dim(),
                n1: p1.num_vertices(),
                n2: p2.num_vertices(),
                f_sum: FVectorDto::from_fvector(&f_sum),
                f_sum_direct: Some(FVectorDto::from_fvector(&f_direct)),
                oracles_agree: Some(f_direct == f_sum),
                bounds: bounds.as_ref().map(BoundReportDto::from_report),
                sum_lattice: emit_lattice.then(|| LatticeDto::from_lattice(&direct)),
            };
            let rendered = match out.format {
                Format::Table => render::sum_table(&dto),
                Format::Json => formats::to_pretty_json(&dto)?,
                Format::Csv => dto
                    .bounds
                    .as_ref()
                    .map(render::bound_csv)
                    .unwrap_or_else(|| "face_dim,k,bound,attained,tight\n".to_string()),
            };
            emit(&out, rendered)?;
            Ok(if dto.oracles_agree == Some(true) {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Verify {
            p1,
            p2,
            lambda,
            skip_direct,
            out,
        } => {
            let p1 = formats::read_polytope(&p1)?;
            let p2 = formats::read_polytope(&p2)?;
            check_pair(&p1, &p2, limits)?;
            let opts = VerifyOptions {
                run_direct_oracle: !skip_direct,
                lambda: parse_rational(&lambda)?,
            };
            let report = verify_pair(&p1, &p2, &opts)?;
            let dto = VerifyReportDto::from_report(&report);
            let rendered = match out.format {
                Format::Table => render::verify_table(&dto),
                Format::Json => formats::to_pretty_json(&dto)?,
                Format::Csv => render::verify_csv(&dto),
            };
            emit(&out, rendered)?;
            Ok(if dto.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Random { d, n, seed, out } => {
            guard(d, n, limits.0, limits.1)?;
            let mut rng = XorShift::new(seed);
            let p = random_polytope(&mut rng, d, n);
            match out {
                Some(path) => {
                    formats::write_polytope(&path, &p)?;
                    println!("wrote {}", path.display());
                }
                None => {
                    let file = formats::PolytopeFile::from_polytope(&p);
                    print!("{}", formats::to_pretty_json(&file)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_pair(p1: &VPolytope, p2: &VPolytope, limits: (usize, usize)) -> Result<()> {
    if p1.dim() != p2.dim() {
        bail!("dimension mismatch: {} vs {}", p1.dim(), p2.dim());
    }
    guard(
        p1.dim(),
        p1.num_vertices() + p2.num_vertices(),
        limits.0,
        limits.1,
    )
}
