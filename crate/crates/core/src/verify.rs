//! The per-instance verification battery: face-count identities of the
//! lifted hull, the h-vector identity and inequality suite, mixed-face caps
//! with their bineighborliness equality condition, neighborliness maxima,
//! and the bound-attainment table. One report item per check.
//!
//! Face-count identities hold for every pair of full-dimensional summands.
//! The h-vector machinery additionally needs the lifted hull to be
//! simplicial away from the two summand facets (and the summands themselves
//! simplicial); when that fails the h-checks are reported as skipped, not
//! failed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{
    h_identities_hold, h_recurrence_holds, mixed_h_cap, mixed_h_cap_high, mixed_subset_count,
    BoundReport, BoundsError, InstanceVectors,
};
use crate::cayley::{direct_minkowski_sum, CayleyComplex, CayleyError};
use crate::exact::{rat, Rational};
use crate::neighborly::{
    bineighborly_implies_neighborly, is_k_bineighborly, max_bineighborliness, max_neighborliness,
    neighborly_from_parts,
};
use crate::polytope::{is_simplicial, star_and_link, VPolytope};
use crate::vectors::{f_to_h, g_from_h, satisfies_dehn_sommerville, FVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verification item: a named exact check with its outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn passed(name: &'static str, detail: String) -> Self {
        Check {
            name,
            status: Status::Pass,
            detail,
        }
    }

    fn of(name: &'static str, ok: bool, detail: String) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Check {
            name,
            status: Status::Skipped,
            detail: String::from(why),
        }
    }
}

/// Verification options. The direct pairwise-sum oracle is the expensive
/// part; it can be disabled for large instances.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub run_direct_oracle: bool,
    /// Slice height used for the lifted extraction, strictly in (0, 1).
    pub lambda: Rational,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            run_direct_oracle: true,
            lambda: rat(1, 2),
        }
    }
}

/// Full report for one summand pair.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub d: usize,
    pub n1: usize,
    pub n2: usize,
    /// Sum f-vector via the lifted hull.
    pub f_sum: FVector,
    /// Sum f-vector via the direct pairwise hull, when run.
    pub f_sum_direct: Option<FVector>,
    /// f-vectors of the derived face sets (mixed set with f_{-1} = -1, the
    /// mixed complex, its two apex extensions, the apex boundary).
    pub f_mixed: FVector,
    pub f_complex: Option<FVector>,
    pub f_complex_1: Option<FVector>,
    pub f_complex_2: Option<FVector>,
    pub f_apex_boundary: Option<FVector>,
    pub simplicial_except_ends: bool,
    pub max_k_neighborly: usize,
    pub max_k_bineighborly: usize,
    pub bounds: BoundReport,
    pub checks: Vec<Check>,
}

impl InstanceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("summands must be full-dimensional for verification")]
    Degenerate,
}

fn eq_detail(a: &FVector, b: &FVector) -> String {
    format!("{:?} vs {:?}", a.counts(), b.counts())
}

/// Runs the whole battery on one pair of full-dimensional d-polytopes.
pub fn verify_pair(
    p1: &VPolytope,
    p2: &VPolytope,
    opts: &VerifyOptions,
) -> Result<InstanceReport, VerifyError> {
    let cx = CayleyComplex::build_with_lambda(p1.clone(), p2.clone(), opts.lambda.clone())?;
    let d = cx.summand_dim();
    let (n1, n2) = (p1.num_vertices(), p2.num_vertices());
    let lat1 = p1.lattice().map_err(CayleyError::from)?;
    let lat2 = p2.lattice().map_err(CayleyError::from)?;
    if lat1.intrinsic_dim() != d || lat2.intrinsic_dim() != d {
        return Err(VerifyError::Degenerate);
    }
    let mut checks: Vec<Check> = Vec::new();

    // Sum f-vector through the lift, against the closed-form maxima.
    let f_sum = cx.sum_f_vector();
    let f_mixed = cx.mixed_f_vector();
    let bounds = BoundReport::new(d, n1 as i64, n2 as i64)?.with_attained(&f_sum);
    let within = bounds
        .rows
        .iter()
        .all(|r| r.attained.unwrap_or(0) <= r.bound);
    checks.push(Check::of(
        "sum face counts within the closed-form maxima",
        within,
        format!(
            "attained {:?}, bounds {:?}",
            bounds
                .rows
                .iter()
                .map(|r| r.attained.unwrap_or(0))
                .collect::<Vec<_>>(),
            bounds.rows.iter().map(|r| r.bound).collect::<Vec<_>>()
        ),
    ));

    // Euler-Poincare on the computed boundary lattices: the lifted hull is
    // a (d+1)-polytope, the sum a d-polytope.
    let lifted_euler = cx.lattice().f_vector().euler_sum();
    let sum_euler = f_sum.euler_sum();
    let expect = |dim: usize| 1 - if dim % 2 == 0 { 1 } else { -1 };
    checks.push(Check::of(
        "Euler-Poincare relation on the lifted hull and the sum",
        lifted_euler == expect(d + 1) && sum_euler == expect(d),
        format!("lift {lifted_euler}, sum {sum_euler}"),
    ));

    // Independent oracle: hull of pairwise vertex sums.
    let f_sum_direct = if opts.run_direct_oracle {
        let direct = direct_minkowski_sum(p1, p2)?;
        let f_direct = direct.f_vector();
        checks.push(Check::of(
            "lifted and direct sum f-vectors agree",
            f_direct == f_sum,
            eq_detail(&f_direct, &f_sum),
        ));
        Some(f_direct)
    } else {
        None
    };

    // Slice-height independence of the mixed face set.
    let same = cx.mixed_faces_at(&rat(1, 4)) == cx.mixed_faces_at(&rat(1, 2))
        && cx.mixed_faces_at(&rat(1, 2)) == cx.mixed_faces_at(&rat(3, 4));
    checks.push(Check::of(
        "mixed face set independent of the slice height",
        same,
        String::from("heights 1/4, 1/2, 3/4"),
    ));

    // Mixed-face caps and the bineighborliness equality condition.
    let partition = cx.partition()?;
    let lifted = cx.lattice();
    let mut cap_ok = true;
    let mut iff_ok = true;
    let mut cap_detail = String::new();
    for k in 1..=(d + 1) {
        let cap = mixed_subset_count(n1 as i64, n2 as i64, k as i64);
        let count = f_mixed.get(k as i64 - 1);
        if count > cap {
            cap_ok = false;
        }
        let bn = is_k_bineighborly(lifted, &partition, k).unwrap_or(false);
        if (count == cap) != bn {
            iff_ok = false;
        }
        cap_detail.push_str(&format!("k={k}: {count}<={cap} bn={bn}; "));
    }
    checks.push(Check::of(
        "mixed-face counts within the subset caps",
        cap_ok,
        cap_detail.clone(),
    ));
    checks.push(Check::of(
        "cap equality exactly where the hull is bineighborly",
        iff_ok,
        cap_detail,
    ));

    let max_k_neighborly = max_neighborliness(lifted);
    let max_k_bineighborly = max_bineighborliness(lifted, &partition);
    let m = (d + 1) / 2;
    checks.push(Check::of(
        "bineighborliness implies one-lower neighborliness",
        bineighborly_implies_neighborly(lifted, &partition, m.max(2)).unwrap_or(false),
        format!("checked at k={}", m.max(2)),
    ));
    checks.push(Check::of(
        "neighborliness lifts from the parts",
        neighborly_from_parts(lifted, &partition, m).unwrap_or(false),
        format!("checked at k={m}"),
    ));

    // Face-count identities of the complex decomposition. These need the
    // summand facets of the lifted hull, which exist for full-dimensional
    // summands, but no simpliciality.
    let apex = cx.apex_polytope()?;
    let (k_set, k1_set, k2_set) = cx.complexes(&apex)?;
    let grading = d + 1;
    let f_complex = k_set.f_vector(grading);
    let f_complex_1 = k1_set.f_vector(grading);
    let f_complex_2 = k2_set.f_vector(grading);
    let f_apex = apex.lattice.f_vector();
    let f1 = lat1.f_vector();
    let f2 = lat2.f_vector();

    let mut ok =
        (-1..=(d as i64)).all(|k| f_complex.get(k) == f_mixed.get(k) + f1.get(k) + f2.get(k));
    checks.push(Check::of(
        "mixed-complex face counts split into mixed + summand boundaries",
        ok,
        eq_detail(&f_complex, &f_mixed),
    ));

    let (star1, link1) =
        star_and_link(&apex.lattice, apex.apex1 as usize).map_err(CayleyError::from)?;
    let (star2, link2) =
        star_and_link(&apex.lattice, apex.apex2 as usize).map_err(CayleyError::from)?;
    let f_star1 = star1.f_vector(grading);
    let f_star2 = star2.f_vector(grading);
    ok = (0..=(d as i64)).all(|k| {
        f_star1.get(k) == f1.get(k) + f1.get(k - 1) && f_star2.get(k) == f2.get(k) + f2.get(k - 1)
    });
    checks.push(Check::of(
        "apex stars are pyramids over the summand boundaries",
        ok,
        eq_detail(&f_star1, &f1),
    ));
    ok = link1.f_vector(d) == f1 && link2.f_vector(d) == f2;
    checks.push(Check::of(
        "apex links are the summand boundaries",
        ok,
        eq_detail(&link1.f_vector(d), &f1),
    ));
    ok = (0..=(d as i64)).all(|k| {
        f_apex.get(k) == f_mixed.get(k) + f1.get(k) + f1.get(k - 1) + f2.get(k) + f2.get(k - 1)
    });
    checks.push(Check::of(
        "apex boundary face counts decompose over mixed faces and stars",
        ok,
        eq_detail(&f_apex, &f_mixed),
    ));
    ok = (0..=(d as i64)).all(|k| {
        f_complex_1.get(k) == f_complex.get(k) + f1.get(k - 1)
            && f_complex_2.get(k) == f_complex.get(k) + f2.get(k - 1)
    });
    checks.push(Check::of(
        "apex extensions add one shifted summand boundary",
        ok,
        eq_detail(&f_complex_1, &f_complex),
    ));

    // The h-vector machinery applies when everything in sight is simplicial
    // apart from the two summand facets.
    let simplicial_except_ends = cx.is_simplicial_except_ends()?;
    let summands_simplicial = is_simplicial(&lat1, &[]) && is_simplicial(&lat2, &[]);
    let h_ready = simplicial_except_ends && summands_simplicial;
    let h_f = f_to_h(&f_mixed);
    if h_ready {
        let h_q = f_to_h(&f_apex);
        let h_p1 = f_to_h(&f1);
        let h_p2 = f_to_h(&f2);
        let h_k = f_to_h(&f_complex);
        let h_k1 = f_to_h(&f_complex_1);
        let h_k2 = f_to_h(&f_complex_2);
        let g_p1 = g_from_h(&h_p1);
        let g_p2 = g_from_h(&h_p2);

        checks.push(Check::of(
            "apex boundary satisfies Dehn-Sommerville",
            satisfies_dehn_sommerville(&h_q),
            format!("{:?}", h_q.entries()),
        ));
        checks.push(Check::of(
            "summand boundaries satisfy Dehn-Sommerville",
            satisfies_dehn_sommerville(&h_p1) && satisfies_dehn_sommerville(&h_p2),
            format!("{:?} / {:?}", h_p1.entries(), h_p2.entries()),
        ));

        let top = d as i64 + 1;
        ok = (0..=top).all(|k| h_q.get(k) == h_f.get(k) + h_p1.get(k) + h_p2.get(k));
        checks.push(Check::of(
            "apex h-vector splits into mixed and summand h-vectors",
            ok,
            format!("{:?}", h_q.entries()),
        ));
        ok = (0..=top).all(|k| h_k.get(k) == h_f.get(k) + g_p1.get(k) + g_p2.get(k));
        checks.push(Check::of(
            "mixed-complex h-vector adds the summand g-vectors",
            ok,
            format!("{:?}", h_k.entries()),
        ));
        ok = (0..=top).all(|k| {
            h_k1.get(k) == h_k.get(k) + h_p1.get(k - 1)
                && h_k2.get(k) == h_k.get(k) + h_p2.get(k - 1)
        });
        checks.push(Check::of(
            "apex-extension h-vectors shift the summand h-vectors",
            ok,
            format!("{:?}", h_k1.entries()),
        ));
        ok = (0..=top).all(|k| h_f.get(top - k) == h_f.get(k) + g_p1.get(k) + g_p2.get(k));
        checks.push(Check::of(
            "mixed h-vector satisfies the Dehn-Sommerville analogue",
            ok,
            format!("{:?}", h_f.entries()),
        ));

        let all_four = h_identities_hold(
            &InstanceVectors {
                h_q: &h_q,
                h_f: &h_f,
                h_p1: &h_p1,
                h_p2: &h_p2,
                h_k: &h_k,
                h_k1: &h_k1,
                h_k2: &h_k2,
                g_p1: &g_p1,
                g_p2: &g_p2,
            },
            d,
        )?;
        checks.push(Check::of(
            "combined h-identity battery",
            all_four,
            String::from("all four identities"),
        ));

        let rec = h_recurrence_holds(&h_f, &g_p1, &g_p2, n1 as i64, n2 as i64, d)?;
        checks.push(Check::of(
            "mixed h-vector recurrence inequality",
            rec,
            format!("{:?}", h_f.entries()),
        ));

        let mut low_ok = true;
        let mut high_ok = true;
        let mut detail = String::new();
        for k in 0..=(d + 1) {
            let low = mixed_h_cap(d, n1 as i64, n2 as i64, k)?;
            let high = mixed_h_cap_high(d, n1 as i64, n2 as i64, k)?;
            let hk = h_f.get(k as i64);
            let hdk = h_f.get((d + 1 - k) as i64);
            if hk > low {
                low_ok = false;
            }
            if hdk > high {
                high_ok = false;
            }
            detail.push_str(&format!("k={k}: {hk}<={low}, {hdk}<={high}; "));
        }
        checks.push(Check::of(
            "mixed h-vector within the low caps",
            low_ok,
            detail.clone(),
        ));
        checks.push(Check::of(
            "mixed h-vector within the high caps",
            high_ok,
            detail,
        ));
    } else {
        let why = if simplicial_except_ends {
            "a summand is non-simplicial"
        } else {
            "lifted hull is non-simplicial away from the summand facets"
        };
        for name in [
            "apex boundary satisfies Dehn-Sommerville",
            "summand boundaries satisfy Dehn-Sommerville",
            "apex h-vector splits into mixed and summand h-vectors",
            "mixed-complex h-vector adds the summand g-vectors",
            "apex-extension h-vectors shift the summand h-vectors",
            "mixed h-vector satisfies the Dehn-Sommerville analogue",
            "combined h-identity battery",
            "mixed h-vector recurrence inequality",
            "mixed h-vector within the low caps",
            "mixed h-vector within the high caps",
        ] {
            checks.push(Check::skipped(name, why));
        }
    }

    checks.push(Check::passed(
        "neighborliness maxima recorded",
        format!("neighborly {max_k_neighborly}, bineighborly {max_k_bineighborly}"),
    ));

    Ok(InstanceReport {
        d,
        n1,
        n2,
        f_sum,
        f_sum_direct,
        f_mixed,
        f_complex: Some(f_complex),
        f_complex_1: Some(f_complex_1),
        f_complex_2: Some(f_complex_2),
        f_apex_boundary: Some(f_apex),
        simplicial_except_ends,
        max_k_neighborly,
        max_k_bineighborly,
        bounds,
        checks,
    })
}
