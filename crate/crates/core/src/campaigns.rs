//! Batch verification sweeps shared by the command line and the test suites.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coreq::{antidiagonal_union, empty_core_rectangle, quotient};
use crate::counting::{hook_count, multinomial};
use crate::error::{Result, TableauError};
use crate::fixed::{
    beta_shape, block_fixed_points, construct_r2, construct_ra, count_fixed, csp_evaluate,
    enumerate_fixed, enumerate_syt, gamma_shape, promotion_equivariance_check, set_compositions,
    stab_distribution, stab_distribution_brute, Construction,
};
use crate::jdt::{self, SlideOrder};
use crate::partition::Partition;
use crate::rsk;
use crate::stabilize::{self, stab};
use crate::tableau::{SkewShape, SkewTableau};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignOutcome {
    pub status: Status,
    pub summary: String,
    pub results: Value,
}

impl CampaignOutcome {
    fn checked(ok: bool, summary: String, results: Value) -> Self {
        CampaignOutcome {
            status: if ok { Status::Pass } else { Status::Fail },
            summary,
            results,
        }
    }
}

/// Reference rows of the stabilization distribution for `n = 1..=8`.
pub const STAB_DISTRIBUTION_TABLE: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 4, 1],
    &[1, 8, 14, 1],
    &[1, 18, 63, 37, 1],
    &[1, 33, 175, 434, 76, 1],
    &[1, 68, 549, 2345, 1927, 149, 1],
    &[1, 124, 1787, 7807, 23760, 6552, 288, 1],
];

pub fn stab_dist(n: usize, progress: &dyn Fn(&str)) -> Result<CampaignOutcome> {
    if n == 0 {
        return Err(TableauError::Precondition("n must be at least 1".into()));
    }
    progress(&format!("stab-dist: recording-tableau sweep for n = {n}"));
    let counts = stab_distribution(n)?;
    let reference = STAB_DISTRIBUTION_TABLE.get(n - 1).map(|row| row.to_vec());
    let brute = if n <= 7 {
        progress(&format!("stab-dist: brute-force cross-check over {n}!"));
        Some(stab_distribution_brute(n)?)
    } else {
        None
    };
    let matches_reference = reference.as_ref().map(|r| *r == counts);
    let matches_brute = brute.as_ref().map(|b| *b == counts);
    let failed = matches_reference == Some(false) || matches_brute == Some(false);
    let status = if failed {
        Status::Fail
    } else if reference.is_none() {
        Status::Info
    } else {
        Status::Pass
    };
    let summary = counts.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    Ok(CampaignOutcome {
        status,
        summary,
        results: json!({
            "n": n,
            "counts": counts,
            "reference": reference,
            "brute_force": brute,
        }),
    })
}

/// One representative per row-shift class of standard tableaux of size `m`
/// whose row vector is the weakly decreasing `rv`.
pub fn row_shift_classes(rv: &[usize]) -> Vec<Vec<Vec<u32>>> {
    set_compositions(rv).into_iter().map(|c| c.blocks).collect()
}

pub fn conjecture(max_size: usize, progress: &dyn Fn(&str)) -> Result<CampaignOutcome> {
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    let mut bound_violations = Vec::new();
    let mut per_size = Vec::new();
    for m in 1..=max_size {
        progress(&format!("conjecture: size {m}"));
        let mut size_checked = 0u64;
        let mut worst_ratio = (0usize, 1usize);
        for rv in Partition::all_of_size(m) {
            let b = rv.len();
            let stabs = row_shift_classes(rv.parts())
                .into_par_iter()
                .map(|rows| Ok((stabilize::stab_of_rows(&rows)?.stab, rows)))
                .collect::<Result<Vec<_>>>()?;
            for (s, rows) in stabs {
                size_checked += 1;
                if s * worst_ratio.1 > worst_ratio.0 * b {
                    worst_ratio = (s, b);
                }
                if s > b {
                    counterexamples.push(json!({"rows": rows, "stab": s}));
                }
                if b >= 2 && s > 2 * b - 2 {
                    bound_violations.push(json!({"rows": rows, "stab": s}));
                }
            }
        }
        checked += size_checked;
        per_size.push(json!({"size": m, "classes": size_checked, "max_stab_over_rows": [worst_ratio.0, worst_ratio.1]}));
    }
    let ok = counterexamples.is_empty() && bound_violations.is_empty();
    Ok(CampaignOutcome::checked(
        ok,
        format!("{checked} row-shift classes checked, {} counterexamples", counterexamples.len()),
        json!({
            "max_size": max_size,
            "classes_checked": checked,
            "per_size": per_size,
            "counterexamples": counterexamples,
            "bound_violations": bound_violations,
        }),
    ))
}

pub fn csp(a: usize, b: usize, progress: &dyn Fn(&str)) -> Result<CampaignOutcome> {
    let n = a * b;
    let mut reports = Vec::new();
    for k in 0..n {
        progress(&format!("csp: k = {k}"));
        reports.push(csp_evaluate(a, b, k)?);
    }
    let ok = reports.iter().all(|r| r.agrees());
    let summary = reports
        .iter()
        .map(|r| format!("k={}:{}", r.k, r.fixed_count))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(CampaignOutcome::checked(ok, summary, json!({"a": a, "b": b, "reports": reports})))
}

fn row_key(t: &SkewTableau) -> Vec<Vec<u32>> {
    t.rows().to_vec()
}

/// Every tableau of `SYT(beta)` mapped through `R_a`, compared with brute force.
pub fn check_ra_instance(b: usize, r: usize, a: usize) -> Result<Value> {
    let built: BTreeSet<_> = enumerate_syt(&beta_shape(b, r))?
        .map(|s| construct_ra(&s, a).map(|t| row_key(&t)))
        .collect::<Result<_>>()?;
    let brute: BTreeSet<_> = enumerate_fixed(a * r, b, b * r)?.iter().map(row_key).collect();
    let formula = multinomial(&vec![r; b])?;
    let domain = enumerate_syt(&beta_shape(b, r))?.count();
    let ok = built == brute && brute.len() as u64 == formula && domain == built.len();
    Ok(json!({"b": b, "r": r, "a": a, "constructed": built.len(), "brute_force": brute.len(), "formula": formula, "pass": ok}))
}

pub fn r2_count_formula(b: usize, r: usize) -> Result<u64> {
    let lower = b / 2;
    let upper = b.div_ceil(2);
    let choose = crate::counting::binomial(b * r, lower * r)?;
    Ok(choose * hook_count(&Partition::rectangle(r, upper))? * hook_count(&Partition::rectangle(r, lower))?)
}

pub fn check_r2_instance(b: usize, r: usize) -> Result<Value> {
    let built: BTreeSet<_> = enumerate_syt(&gamma_shape(b, r))?
        .map(|s| construct_r2(&s).map(|t| row_key(&t)))
        .collect::<Result<_>>()?;
    let brute: BTreeSet<_> = enumerate_fixed(2 * r, b, b * r)?.iter().map(row_key).collect();
    let formula = r2_count_formula(b, r)?;
    let ok = built == brute && brute.len() as u64 == formula;
    Ok(json!({"b": b, "r": r, "constructed": built.len(), "brute_force": brute.len(), "formula": formula, "pass": ok}))
}

pub fn check_equivariance(shape: &SkewShape, construction: Construction) -> Result<(usize, usize)> {
    let mut total = 0;
    let mut good = 0;
    for s in enumerate_syt(shape)? {
        total += 1;
        if promotion_equivariance_check(&s, construction)? {
            good += 1;
        }
    }
    Ok((good, total))
}

/// Brute-force fixed points of `pr^{n/k}` on a union of pieces.
pub fn brute_block_fixed(pieces: &[Partition], k: usize) -> Result<BTreeSet<Vec<Vec<u32>>>> {
    let shape = antidiagonal_union(pieces);
    let n = shape.size();
    if k == 0 || !n.is_multiple_of(k) {
        return Ok(BTreeSet::new());
    }
    let mut out = BTreeSet::new();
    for t in enumerate_syt(&shape)? {
        if jdt::promote_power(&t, n / k)? == t {
            out.insert(row_key(&t));
        }
    }
    Ok(out)
}

pub fn check_block_instance(pieces: &[Partition], k: usize) -> Result<bool> {
    let built: BTreeSet<_> = block_fixed_points(pieces, k)?.iter().map(row_key).collect();
    Ok(built == brute_block_fixed(pieces, k)?)
}

/// Every ordered pair of nonempty partitions with total size at most `max_total`.
pub fn two_piece_cases(max_total: usize) -> Vec<[Partition; 2]> {
    let mut out = Vec::new();
    for n1 in 1..max_total {
        for n2 in 1..=max_total - n1 {
            for p1 in Partition::all_of_size(n1) {
                for p2 in Partition::all_of_size(n2) {
                    out.push([p1.clone(), p2]);
                }
            }
        }
    }
    out
}

pub const RA_INSTANCES: [(usize, usize, usize); 4] = [(2, 1, 3), (2, 1, 4), (2, 2, 3), (3, 1, 5)];
pub const R2_INSTANCES: [(usize, usize); 4] = [(2, 1), (3, 1), (2, 2), (4, 1)];

pub fn fixed_points(progress: &dyn Fn(&str)) -> Result<CampaignOutcome> {
    let mut ok = true;
    progress("fixed-points: R_a constructions");
    let ra = RA_INSTANCES
        .iter()
        .map(|&(b, r, a)| check_ra_instance(b, r, a))
        .collect::<Result<Vec<_>>>()?;
    progress("fixed-points: R_2 constructions");
    let r2 = R2_INSTANCES
        .iter()
        .map(|&(b, r)| check_r2_instance(b, r))
        .collect::<Result<Vec<_>>>()?;
    ok &= ra.iter().chain(&r2).all(|v| v["pass"] == json!(true));
    progress("fixed-points: promotion equivariance");
    let mut equivariance = Vec::new();
    for &(b, r, a) in &RA_INSTANCES {
        let (good, total) = check_equivariance(&beta_shape(b, r), Construction::Ra(a))?;
        ok &= good == total;
        equivariance.push(json!({"construction": format!("R_{a}"), "b": b, "r": r, "holds": good, "total": total}));
    }
    for &(b, r) in &R2_INSTANCES {
        let (good, total) = check_equivariance(&gamma_shape(b, r), Construction::R2)?;
        ok &= good == total;
        equivariance.push(json!({"construction": "R_2", "b": b, "r": r, "holds": good, "total": total}));
    }
    progress("fixed-points: block pieces");
    let example = [Partition::new(vec![3, 3])?, Partition::new(vec![2, 2])?];
    let example_ok = check_block_instance(&example, 2)?;
    let mut block_cases = 0;
    let mut block_failures = Vec::new();
    for pieces in two_piece_cases(8) {
        let n = pieces[0].size() + pieces[1].size();
        for k in (1..=n).filter(|k| n % k == 0) {
            block_cases += 1;
            if !check_block_instance(&pieces, k)? {
                block_failures.push(json!({"pieces": [pieces[0].parts(), pieces[1].parts()], "k": k}));
            }
        }
    }
    ok &= example_ok && block_failures.is_empty();
    Ok(CampaignOutcome::checked(
        ok,
        format!(
            "{} R_a instances, {} R_2 instances, {} block cases",
            ra.len(),
            r2.len(),
            block_cases + 1
        ),
        json!({
            "ra": ra,
            "r2": r2,
            "equivariance": equivariance,
            "block_example": example_ok,
            "block_cases": block_cases,
            "block_failures": block_failures,
        }),
    ))
}

/// Every standard skew tableau with at most `max_cells` cells inside an outer
/// partition of size at most `max_outer`.
pub fn small_skew_tableaux(max_outer: usize, max_cells: usize) -> Result<Vec<SkewTableau>> {
    let mut out = Vec::new();
    for size in 0..=max_outer {
        for outer in Partition::all_of_size(size) {
            for inner_size in size.saturating_sub(max_cells)..=size {
                for inner in Partition::all_of_size(inner_size) {
                    if !outer.contains(&inner) {
                        continue;
                    }
                    let shape = SkewShape::new(outer.clone(), inner)?;
                    if shape.num_rows() < outer.len() {
                        continue;
                    }
                    out.extend(enumerate_syt(&shape)?);
                }
            }
        }
    }
    Ok(out)
}

/// Drops leading rows with no cells.
fn rows_without_leading_empty(t: &SkewTableau) -> Vec<Vec<u32>> {
    t.rows().iter().skip_while(|r| r.is_empty()).cloned().collect()
}

pub fn all_permutations(n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (1..=n as u32)
                    .filter(|x| !prefix.contains(x))
                    .map(|x| {
                        let mut next = prefix.clone();
                        next.push(x);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

/// Tableaux with constant row vector `(r^b)`, one per row-shift class.
pub fn constant_row_tableaux(b: usize, r: usize) -> Vec<SkewTableau> {
    row_shift_classes(&vec![r; b])
        .into_iter()
        .map(|rows| SkewTableau::antidiagonal(rows).expect("anti-diagonal placement is valid"))
        .collect()
}

fn property(name: &str, checked: usize, failures: usize) -> Value {
    json!({"property": name, "checked": checked, "failures": failures})
}

pub fn properties(progress: &dyn Fn(&str)) -> Result<CampaignOutcome> {
    let mut results = Vec::new();

    progress("properties: rectification");
    let skew = small_skew_tableaux(8, 6)?;
    let failures = skew
        .par_iter()
        .filter(|t| {
            let bottom = jdt::rect(t);
            let top = jdt::rect_with_order(t, SlideOrder::TopmostFirst);
            let insertion = rsk::rsk(&t.reading_word()).expect("distinct letters").p;
            bottom != top || bottom != insertion
        })
        .count();
    results.push(property("rect slide-order independence and rect = P(reading word)", skew.len(), failures));
    let failures = skew
        .par_iter()
        .filter(|t| {
            rows_without_leading_empty(&jdt::antirect(t))
                != rows_without_leading_empty(&jdt::rect(&t.dagger()).dagger())
        })
        .count();
    results.push(property("antirect = dagger . rect . dagger", skew.len(), failures));

    progress("properties: insertion");
    let perms: Vec<Word> = (1..=6).flat_map(all_permutations).collect();
    let failures = perms
        .par_iter()
        .filter(|w| {
            let shape = rsk::rsk(w).expect("permutation").p.row_vector();
            let depth = shape.len().min(3);
            let sums: Vec<usize> = shape.iter().scan(0, |acc, &x| { *acc += x; Some(*acc) }).take(depth).collect();
            rsk::greene_shape_oracle(w, depth).expect("within bounds") != sums
        })
        .count();
    results.push(property("Greene oracle = partial sums of rv(P(w))", perms.len(), failures));
    let failures = perms
        .iter()
        .filter(|w| w.descent_set() != rsk::rsk(w).expect("permutation").q.descent_set())
        .count();
    results.push(property("Des(w) = Des(Q(w))", perms.len(), failures));

    progress("properties: evacuation and promotion");
    let straight: Vec<SkewTableau> = (0..=7)
        .flat_map(Partition::all_of_size)
        .flat_map(|p| enumerate_syt(&SkewShape::straight(p)).expect("small shape"))
        .collect();
    let failures = straight
        .iter()
        .filter(|t| jdt::evacuate(&jdt::evacuate(t).unwrap()).unwrap() != **t)
        .count();
    results.push(property("evacuation is an involution", straight.len(), failures));
    let mut checked = 0;
    let mut failures = 0;
    for rows in 1..=10usize {
        for width in 1..=10 / rows {
            checked += 1;
            let n = rows * width;
            let all: Vec<SkewTableau> = enumerate_syt(&SkewShape::straight(Partition::rectangle(width, rows)))?.collect();
            if !all.iter().all(|t| jdt::promote_power(t, n).unwrap() == *t) {
                failures += 1;
            }
        }
    }
    results.push(property("pr^(ab) is the identity on rectangles", checked, failures));

    progress("properties: stabilization");
    let mut constant = Vec::new();
    for b in 1..=3 {
        for r in 1..=2 {
            constant.extend(constant_row_tableaux(b, r));
        }
    }
    let failures = constant
        .iter()
        .filter(|s| stab(s).unwrap().stab != stabilize::stab_star(s).unwrap().stab)
        .count();
    results.push(property("stab* = stab on constant row vectors", constant.len(), failures));
    let mut checked = 0;
    let mut failures = 0;
    for n in 3..=5 {
        for w in all_permutations(n) {
            let t = SkewTableau::from_word_antidiagonal(&w)?;
            let s = stab(&t)?.stab;
            for i in 2..n as u32 {
                checked += 1;
                if stab(&jdt::dual_move(&t, i)?)?.stab != s {
                    failures += 1;
                }
            }
        }
    }
    results.push(property("stab is invariant under dual moves", checked, failures));

    progress("properties: cores");
    let mut checked = 0;
    let mut failures = 0;
    for a in 1..=6 {
        for b in 1..=6 {
            for r in (1..=a * b).filter(|r| (a * b) % r == 0).filter(|&r| r <= 6) {
                checked += 1;
                let by_word = quotient(&Partition::rectangle(a, b), r)?.core.is_empty();
                if by_word != empty_core_rectangle(a, b, r)? {
                    failures += 1;
                }
            }
        }
    }
    results.push(property("rectangle core criterion", checked, failures));
    let mut checked = 0;
    let mut failures = 0;
    for a in 1..=4 {
        for b in 1..=4 {
            for d in (1..=a * b).filter(|d| (a * b) % d == 0) {
                if a * b > 12 {
                    continue;
                }
                checked += 1;
                if count_fixed(a, b, d)? != enumerate_fixed(a, b, d)?.len() as u64 {
                    failures += 1;
                }
            }
        }
    }
    results.push(property("count_fixed = brute force", checked, failures));

    let total_failures: usize = results.iter().map(|v| v["failures"].as_u64().unwrap() as usize).sum();
    Ok(CampaignOutcome::checked(
        total_failures == 0,
        format!("{} properties, {total_failures} failures", results.len()),
        json!({"properties": results}),
    ))
}
