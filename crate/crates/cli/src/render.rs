//! Human-readable table and CSV renderings of the report DTOs.

use std::fmt::Write;

use crate::formats::{BoundReportDto, SumReportDto, VerifyReportDto};

fn fvec(counts: &[i64]) -> String {
    let inner: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

pub fn bound_table(r: &BoundReportDto) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Maximum face counts of a Minkowski sum, d = {}, n1 = {}, n2 = {}",
        r.d, r.n1, r.n2
    );
    let has_attained = r.rows.iter().any(|row| row.attained.is_some());
    if has_attained {
        let _ = writeln!(
            out,
            "{:>8}  {:>3}  {:>12}  {:>12}  {:>6}",
            "face dim", "k", "max", "attained", "tight"
        );
    } else {
        let _ = writeln!(out, "{:>8}  {:>3}  {:>12}", "face dim", "k", "max");
    }
    for row in &r.rows {
        if has_attained {
            let _ = writeln!(
                out,
                "{:>8}  {:>3}  {:>12}  {:>12}  {:>6}",
                row.face_dim,
                row.k,
                row.bound,
                row.attained
                    .map_or_else(|| "-".to_string(), |a| a.to_string()),
                row.tight.map_or_else(
                    || "-".to_string(),
                    |t| if t { "yes" } else { "no" }.to_string()
                ),
            );
        } else {
            let _ = writeln!(out, "{:>8}  {:>3}  {:>12}", row.face_dim, row.k, row.bound);
        }
    }
    if let Some(v) = r.by_vertices_3d {
        let _ = writeln!(
            out,
            "3d by vertices: f0 <= {}, f1 <= {}, f2 <= {}",
            v[0], v[1], v[2]
        );
    }
    if let Some(m) = r.by_facets_3d {
        let _ = writeln!(
            out,
            "3d by facets:   f0 <= {}, f1 <= {}, f2 <= {}",
            m[0], m[1], m[2]
        );
    }
    out
}

pub fn bound_csv(r: &BoundReportDto) -> String {
    let mut out = String::from("face_dim,k,bound,attained,tight\n");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.face_dim,
            row.k,
            row.bound,
            row.attained.map_or_else(String::new, |a| a.to_string()),
            row.tight.map_or_else(String::new, |t| t.to_string()),
        );
    }
    out
}

pub fn sum_table(r: &SumReportDto) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Minkowski sum of a {}-polytope pair (n1 = {}, n2 = {})",
        r.d, r.n1, r.n2
    );
    let _ = writeln!(out, "f(sum) via lift:   {}", fvec(&r.f_sum.counts));
    if let Some(direct) = &r.f_sum_direct {
        let _ = writeln!(out, "f(sum) direct:     {}", fvec(&direct.counts));
        let _ = writeln!(
            out,
            "oracles agree:     {}",
            if r.oracles_agree == Some(true) {
                "yes"
            } else {
                "NO"
            }
        );
    }
    out.push('\n');
    match &r.bounds {
        Some(b) => out.push_str(&bound_table(b)),
        None => {
            let _ = writeln!(
                out,
                "(no bound table: parameters outside the formula range)"
            );
        }
    }
    out
}

pub fn verify_table(r: &VerifyReportDto) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Verification of a {}-polytope pair (n1 = {}, n2 = {})",
        r.d, r.n1, r.n2
    );
    let _ = writeln!(out, "f(sum):  {}", fvec(&r.f_sum.counts));
    let _ = writeln!(
        out,
        "f(mixed face set): f_-1 = {}, {}",
        r.f_mixed.f_minus_1,
        fvec(&r.f_mixed.counts)
    );
    let _ = writeln!(
        out,
        "simplicial except end facets: {}; max neighborly k = {}, max bineighborly k = {}",
        r.simplicial_except_ends, r.max_k_neighborly, r.max_k_bineighborly
    );
    out.push('\n');
    for c in &r.checks {
        let _ = writeln!(out, "[{:>7}] {}", c.status, c.name);
    }
    out.push('\n');
    out.push_str(&bound_table(&r.bounds));
    let _ = writeln!(
        out,
        "\noverall: {}",
        if r.all_passed { "PASS" } else { "FAIL" }
    );
    out
}

pub fn verify_csv(r: &VerifyReportDto) -> String {
    let mut out = String::from("check,status,detail\n");
    for c in &r.checks {
        let _ = writeln!(
            out,
            "{},{},{}",
            csv_escape(&c.name),
            c.status,
            csv_escape(&c.detail)
        );
    }
    out
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
