use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use tableau_lab::campaigns::{self, Status};
use tableau_lab::coreq::{self, antidiagonal_union, core_by_swaps, quotient};
use tableau_lab::fixed::{
    beta_shape, block_fixed_points, construct_r2, construct_ra, csp_evaluate, enumerate_fixed,
    enumerate_syt, gamma_shape, promotion_equivariance_check, stab2_count, stab_distribution,
    Construction,
};
use tableau_lab::jdt;
use tableau_lab::rsk;
use tableau_lab::stabilize::{self, predicted_shape, stab};
use tableau_lab::{Partition, SkewShape, SkewTableau, Word};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

const STAB_ROWS: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 4, 1],
    &[1, 8, 14, 1],
    &[1, 18, 63, 37, 1],
    &[1, 33, 175, 434, 76, 1],
    &[1, 68, 549, 2345, 1927, 149, 1],
    &[1, 124, 1787, 7807, 23760, 6552, 288, 1],
];

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn rect_shape(width: usize, rows: usize) -> SkewShape {
    SkewShape::straight(Partition::rectangle(width, rows))
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn constant_rows(b: usize, r: usize) -> Vec<Vec<Vec<u32>>> {
    rows_with_lengths(&vec![r; b])
}

fn row_sets(ts: impl IntoIterator<Item = SkewTableau>) -> BTreeSet<Vec<Vec<u32>>> {
    ts.into_iter().map(|t| t.rows().to_vec()).collect()
}

/// Standard tableaux of the `b`-row rectangle of width `width` fixed by `pr^power`.
fn brute_fixed(width: usize, b: usize, power: usize) -> Result<BTreeSet<Vec<Vec<u32>>>, String> {
    let mut out = BTreeSet::new();
    for t in enumerate_syt(&rect_shape(width, b)).map_err(err)? {
        if jdt::promote_power(&t, power).map_err(err)? == t {
            out.insert(t.rows().to_vec());
        }
    }
    Ok(out)
}

fn syt_count(shape: &SkewShape) -> Result<u64, String> {
    Ok(enumerate_syt(shape).map_err(err)?.count() as u64)
}

fn criterion_1() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(err)?;
    let start = Instant::now();
    for n in 1..=7 {
        let got = pool.install(|| stab_distribution(n)).map_err(err)?;
        if got != STAB_ROWS[n - 1] {
            return Err(format!("n = {n}: got {got:?}, expected {:?}", STAB_ROWS[n - 1]));
        }
    }
    let single = start.elapsed();
    if single > Duration::from_secs(60) {
        return Err(format!("n = 1..7 took {single:?} single-threaded"));
    }
    for n in 1..=7 {
        let mut brute = vec![0u64; n];
        for w in permutations(n) {
            let s = stab(&SkewTableau::from_word_antidiagonal(&Word(w)).map_err(err)?).map_err(err)?;
            brute[s.stab - 1] += 1;
        }
        if brute != STAB_ROWS[n - 1] {
            return Err(format!("brute force n = {n} gave {brute:?}"));
        }
    }
    let start = Instant::now();
    let row8 = stab_distribution(8).map_err(err)?;
    let parallel = start.elapsed();
    if row8 != STAB_ROWS[7] {
        return Err(format!("n = 8: got {row8:?}"));
    }
    if parallel > Duration::from_secs(600) {
        return Err(format!("n = 8 took {parallel:?}"));
    }
    Ok(format!("rows 1..7 in {single:.2?} on one thread, brute force agrees, row 8 in {parallel:.2?}"))
}

fn criterion_2() -> Outcome {
    for n in 2..=8usize {
        let formula = binom(n as u64 + 1, (n as u64).div_ceil(2)) - 2;
        let count = stab2_count(n).map_err(err)?;
        let mut brute = 0u64;
        for w in permutations(n) {
            let t = SkewTableau::from_word_antidiagonal(&Word(w)).map_err(err)?;
            if stab(&t).map_err(err)?.stab == 2 {
                brute += 1;
            }
        }
        if count != formula || brute != formula {
            return Err(format!("n = {n}: formula {formula}, library {count}, brute force {brute}"));
        }
    }
    Ok("n = 2..8 agree".into())
}

/// Weakly decreasing row vectors of size `m`.
fn decreasing_vectors(m: usize) -> Vec<Vec<usize>> {
    Partition::all_of_size(m).into_iter().map(|p| p.parts().to_vec()).collect()
}

/// All ways to split `1..=m` into rows of the given lengths.
fn rows_with_lengths(lengths: &[usize]) -> Vec<Vec<Vec<u32>>> {
    fn go(left: &[u32], lengths: &[usize], acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&len, rest_lengths)) = lengths.split_first() else {
            out.push(acc.clone());
            return;
        };
        let n = left.len();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != len {
                continue;
            }
            let row = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| left[i]).collect();
            let rest: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| left[i]).collect();
            acc.push(row);
            go(&rest, rest_lengths, acc, out);
            acc.pop();
        }
    }
    let total: usize = lengths.iter().sum();
    let all: Vec<u32> = (1..=total as u32).collect();
    let mut out = Vec::new();
    go(&all, lengths, &mut Vec::new(), &mut out);
    out
}

fn criterion_3() -> Outcome {
    let mut classes = 0usize;
    for m in 1..=6 {
        for rv in decreasing_vectors(m) {
            let b = rv.len();
            for rows in rows_with_lengths(&rv) {
                let t = SkewTableau::antidiagonal(rows).map_err(err)?;
                let s = stab(&t).map_err(err)?.stab;
                classes += 1;
                if s > b {
                    return Err(format!("counterexample {:?} has stab {s} > {b}", t.rows()));
                }
            }
        }
    }
    let mut skew = 0usize;
    for t in campaigns::small_skew_tableaux(8, 6).map_err(err)? {
        let rv = t.row_vector();
        if rv.is_empty() || rv.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        skew += 1;
        let s = stab(&t).map_err(err)?.stab;
        if s > rv.len() {
            return Err(format!("counterexample {t:?} has stab {s} > {}", rv.len()));
        }
    }
    Ok(format!("{classes} row-shift classes and {skew} skew tableaux, no counterexample"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for b in 1..=8 {
        for r in 1..=8 / b {
            for rows in constant_rows(b, r) {
                let t = SkewTableau::antidiagonal(rows).map_err(err)?;
                let s = stab(&t).map_err(err)?.stab;
                checked += 1;
                if s > b {
                    return Err(format!("{:?} has stab {s} > {b}", t.rows()));
                }
            }
        }
    }
    for b in 1..=4usize {
        for r in 1..=2usize {
            let rows = (0..b)
                .rev()
                .map(|i| ((i * r + 1) as u32..=((i + 1) * r) as u32).collect())
                .collect();
            let t = SkewTableau::antidiagonal(rows).map_err(err)?;
            let s = stab(&t).map_err(err)?.stab;
            if s != b {
                return Err(format!("I_({b},{r}) has stab {s}"));
            }
        }
    }
    Ok(format!("{checked} tableaux bounded, tight family exact"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for b in 1..=8usize {
        for r in 1..=8 / b {
            for rows in constant_rows(b, r) {
                let t = SkewTableau::antidiagonal(rows).map_err(err)?;
                for k in [b - 1, b, b + 1] {
                    let predicted = predicted_shape(&t, k).map_err(err)?;
                    let actual = if k == 0 {
                        Vec::new()
                    } else {
                        let copies = stabilize::shifted_copies(&t, k).map_err(err)?;
                        jdt::rect(&copies).row_vector()
                    };
                    checked += 1;
                    if predicted.parts() != actual.as_slice() {
                        return Err(format!(
                            "{:?} with k = {k}: predicted {predicted}, actual {actual:?}",
                            t.rows()
                        ));
                    }
                }
            }
        }
    }
    let worked = worked_example_shape()?;
    if worked != [15, 10, 8, 3] {
        return Err(format!("worked example gave {worked:?}"));
    }
    Ok(format!("{checked} (tableau, k) pairs agree; worked example (15,10,8,3)"))
}

/// The tableau with c-statistics (3,1,2) whose three-fold stabilized shape is
/// (15,10,8,3).
fn worked_example_shape() -> Result<Vec<usize>, String> {
    let t = SkewTableau::with_inner(
        vec![6, 4, 3],
        vec![vec![7, 9, 10], vec![2, 4, 12], vec![6, 8, 11], vec![1, 3, 5]],
    )
    .map_err(err)?;
    let c = stabilize::c_stats(&t).map_err(err)?.c;
    if c != [3, 1, 2] {
        return Err(format!("unexpected c statistics {c:?} for {:?}", t.rows()));
    }
    let predicted = predicted_shape(&t, 3).map_err(err)?;
    let actual = stabilize::stabilized_shape(&t, 3).map_err(err)?;
    if predicted.parts() != actual.as_slice() {
        return Err(format!("predicted {predicted} but rectified {actual:?}"));
    }
    Ok(actual)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut report = Vec::new();
    for (b, r, a) in campaigns::RA_INSTANCES {
        let built = row_sets(
            enumerate_syt(&beta_shape(b, r))
                .map_err(err)?
                .map(|s| construct_ra(&s, a))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?,
        );
        let brute = brute_fixed(a * r, b, b * r)?;
        let formula = factorial((b * r) as u64) / factorial(r as u64).pow(b as u32);
        if built != brute || brute.len() as u64 != formula {
            return Err(format!(
                "(b,r,a) = ({b},{r},{a}): constructed {}, brute force {}, formula {formula}",
                built.len(),
                brute.len()
            ));
        }
        report.push(format!("({b},{r},{a}):{formula}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} in {elapsed:.2?}", report.join(" ")))
}

fn criterion_7() -> Outcome {
    let mut report = Vec::new();
    for (b, r) in campaigns::R2_INSTANCES {
        let built = row_sets(
            enumerate_syt(&gamma_shape(b, r))
                .map_err(err)?
                .map(|s| construct_r2(&s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?,
        );
        let brute = brute_fixed(2 * r, b, b * r)?;
        let lower = b / 2;
        let upper = b - lower;
        let formula = binom((b * r) as u64, (lower * r) as u64)
            * syt_count(&rect_shape(r, upper))?
            * syt_count(&rect_shape(r, lower))?;
        if built != brute || brute.len() as u64 != formula {
            return Err(format!(
                "(b,r) = ({b},{r}): constructed {}, brute force {}, formula {formula}",
                built.len(),
                brute.len()
            ));
        }
        report.push(format!("({b},{r}):{formula}"));
    }
    Ok(report.join(" "))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    let cases = campaigns::RA_INSTANCES
        .iter()
        .map(|&(b, r, a)| (beta_shape(b, r), Construction::Ra(a)))
        .chain(campaigns::R2_INSTANCES.iter().map(|&(b, r)| (gamma_shape(b, r), Construction::R2)));
    for (shape, construction) in cases {
        for s in enumerate_syt(&shape).map_err(err)? {
            let forward = jdt::promote(&construction.apply(&s).map_err(err)?).map_err(err)?;
            let backward = construction.apply(&jdt::promote(&s).map_err(err)?).map_err(err)?;
            let library = promotion_equivariance_check(&s, construction).map_err(err)?;
            checked += 1;
            if forward != backward || !library {
                return Err(format!("{construction:?} fails on {:?}", s.rows()));
            }
        }
    }
    Ok(format!("{checked} tableaux commute with promotion"))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (a, b) in [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (2, 4)] {
        let n = a * b;
        for k in 0..n {
            let report = csp_evaluate(a, b, k).map_err(err)?;
            let d = if k == 0 { n } else { gcd(k, n) };
            let listed = enumerate_fixed(a, b, d).map_err(err)?.len() as u64;
            let brute = brute_fixed(a, b, k)?.len() as u64;
            checked += 1;
            if report.poly_value != brute as i64
                || listed != brute
                || report.residual >= 1e-6
                || report.imaginary.abs() >= 1e-6
            {
                return Err(format!("(a,b,k) = ({a},{b},{k}): {report:?}, listed {listed}, brute force {brute}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{checked} evaluations agree in {elapsed:.2?}"))
}

/// The `r`-core via beta-numbers.
fn beta_core(p: &Partition, r: usize) -> Vec<usize> {
    let len = p.len();
    let mut beta: BTreeSet<usize> = (0..len).map(|i| p.part(i) + (len - 1 - i)).collect();
    while let Some(&x) = beta.iter().rev().find(|&&x| x >= r && !beta.contains(&(x - r))) {
        beta.remove(&x);
        beta.insert(x - r);
    }
    let mut parts: Vec<usize> = beta.iter().rev().enumerate().map(|(i, &x)| x + i + 1 - len).collect();
    parts.retain(|&x| x > 0);
    parts
}

fn criterion_10() -> Outcome {
    let q = quotient(&part(&[7, 5, 5, 5, 3, 2, 1]), 3).map_err(err)?;
    let expected = vec![part(&[2, 1]), part(&[2, 2]), part(&[1, 1])];
    if q.pieces != expected {
        return Err(format!("pieces {:?}", q.pieces));
    }
    let union = SkewShape::new(part(&[5, 5, 4, 4, 2, 1]), part(&[4, 4, 2, 2])).map_err(err)?;
    if q.union_shape != union || antidiagonal_union(&expected) != union {
        return Err(format!("union {:?}", q.union_shape));
    }
    if q.core != part(&[1]) {
        return Err(format!("core {}", q.core));
    }
    let mut checked = 0;
    for a in 1..=6usize {
        for b in 1..=6usize {
            for r in 1..=6usize {
                if (a * b) % r != 0 {
                    continue;
                }
                let rectangle = Partition::rectangle(a, b);
                let criterion = a % r == 0 || b % r == 0;
                let library = coreq::empty_core_rectangle(a, b, r).map_err(err)?;
                let by_swaps = core_by_swaps(&rectangle, r, |_| 0).size() == 0;
                let by_beta = beta_core(&rectangle, r).is_empty();
                checked += 1;
                if criterion != library || criterion != by_swaps || criterion != by_beta {
                    return Err(format!("(a,b,r) = ({a},{b},{r}) disagrees"));
                }
            }
        }
    }
    Ok(format!("worked example exact; {checked} rectangles agree"))
}

fn criterion_11() -> Outcome {
    let outcome = campaigns::properties(&|_| {}).map_err(err)?;
    if outcome.status != Status::Pass {
        return Err(format!("properties campaign: {}", outcome.summary));
    }
    let mut runner = TestRunner::new(Config {
        cases: 300,
        failure_persistence: None,
        ..Config::default()
    });
    let words = (1usize..=8).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle());
    runner
        .run(&words, |letters| {
            let w = Word(letters);
            let shape = rsk::rsk(&w).unwrap().p.row_vector();
            let depth = w.len().min(rsk::GREENE_MAX_DEPTH);
            let oracle = rsk::greene_shape_oracle(&w, depth).unwrap();
            let partial: Vec<usize> = (1..=depth).map(|k| shape.iter().take(k).sum()).collect();
            prop_assert_eq!(oracle, partial);
            Ok(())
        })
        .map_err(err)?;
    Ok(format!("{}; Greene oracle agrees on 300 random words", outcome.summary))
}

fn criterion_12() -> Outcome {
    let pieces = [part(&[3, 3]), part(&[2, 2])];
    let built = row_sets(block_fixed_points(&pieces, 2).map_err(err)?);
    let brute = brute_block(&pieces, 2)?;
    if built != brute {
        return Err(format!("((3,3),(2,2)), k = 2: {} built, {} brute force", built.len(), brute.len()));
    }
    let member = SkewTableau::with_inner(
        vec![3, 3],
        vec![vec![2, 7], vec![3, 8], vec![1, 4, 9], vec![5, 6, 10]],
    )
    .map_err(err)?;
    if !built.contains(member.rows()) {
        return Err("worked instance is not among the fixed points".into());
    }
    let mut cases = 0;
    for pair in campaigns::two_piece_cases(8) {
        let n: usize = pair.iter().map(Partition::size).sum();
        for k in 1..=n {
            if !n.is_multiple_of(k) {
                continue;
            }
            let built = row_sets(block_fixed_points(&pair, k).map_err(err)?);
            let brute = brute_block(&pair, k)?;
            cases += 1;
            if built != brute {
                return Err(format!("{pair:?}, k = {k}: {} built, {} brute force", built.len(), brute.len()));
            }
        }
    }
    Ok(format!("worked instance has {} fixed points; {cases} two-piece cases agree", built.len()))
}

fn brute_block(pieces: &[Partition], k: usize) -> Result<BTreeSet<Vec<Vec<u32>>>, String> {
    let shape = antidiagonal_union(pieces);
    let power = shape.size() / k;
    let mut out = BTreeSet::new();
    for t in enumerate_syt(&shape).map_err(err)? {
        if jdt::promote_power(&t, power).map_err(err)? == t {
            out.insert(t.rows().to_vec());
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        ("stabilization distribution", criterion_1),
        ("stab = 2 count", criterion_2),
        ("conjectured bound sweep", criterion_3),
        ("bound and tightness on rectangles of rows", criterion_4),
        ("stabilized shape formula", criterion_5),
        ("R_a fixed-point completeness", criterion_6),
        ("R_2 fixed-point completeness", criterion_7),
        ("promotion equivariance", criterion_8),
        ("cyclic sieving", criterion_9),
        ("cores and quotients", criterion_10),
        ("property suites", criterion_11),
        ("block fixed points", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
