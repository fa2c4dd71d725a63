//! Shifted copies of a tableau and the number of copies needed before the
//! last copy keeps its rows under rectification.

use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::jdt;
use crate::partition::Partition;
use crate::rsk;
use crate::tableau::SkewTableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabResult {
    pub stab: usize,
    /// Row vector of the rectification of `stab` copies.
    pub witness_shape: Vec<usize>,
    pub copies_examined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CStatistics {
    pub c: Vec<usize>,
}

fn is_weakly_decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn is_weakly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn copied_rows(rows: &[Vec<u32>], m: u32, k: usize) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|row| {
            (0..k as u32)
                .flat_map(|j| row.iter().map(move |&x| x + j * m))
                .collect()
        })
        .collect()
}

/// `k` copies of `s` placed side by side, copy `j` shifted by `(j-1)m`.
pub fn shifted_copies(s: &SkewTableau, k: usize) -> Result<SkewTableau> {
    s.require_standard()?;
    if k == 0 {
        return Err(TableauError::Precondition("the number of copies must be at least 1".into()));
    }
    if !is_weakly_decreasing(&s.row_vector()) {
        return Err(TableauError::Precondition(
            "shifted copies to the right need a weakly decreasing row vector".into(),
        ));
    }
    let inner = s.shape().inner.parts().to_vec();
    SkewTableau::with_inner(inner, copied_rows(s.rows(), s.size() as u32, k))
}

/// `k` copies of `s` where the copies sit to the left of the last one.
pub fn shifted_copies_left(s: &SkewTableau, k: usize) -> Result<SkewTableau> {
    s.require_standard()?;
    if k == 0 {
        return Err(TableauError::Precondition("the number of copies must be at least 1".into()));
    }
    let rv = s.row_vector();
    if !is_weakly_increasing(&rv) {
        return Err(TableauError::Precondition(
            "shifted copies to the left need a weakly increasing row vector".into(),
        ));
    }
    let longest = rv.iter().copied().max().unwrap_or(0);
    let inner: Vec<usize> = rv
        .iter()
        .enumerate()
        .map(|(i, &len)| s.shape().inner.part(i) + (k - 1) * (longest - len))
        .collect();
    SkewTableau::with_inner(inner, copied_rows(s.rows(), s.size() as u32, k))
}

/// Largest number of copies tried before giving up.
pub fn search_limit(rows: usize) -> usize {
    (2 * rows).saturating_sub(2).max(1) + 2
}

/// Finds the least `k` for row contents with a weakly decreasing row vector.
pub(crate) fn stab_of_rows(rows: &[Vec<u32>]) -> Result<StabResult> {
    let rv: Vec<usize> = rows.iter().map(Vec::len).collect();
    let m: usize = rv.iter().sum();
    let limit = search_limit(rows.len());
    if m == 0 {
        return Ok(StabResult {
            stab: 1,
            witness_shape: Vec::new(),
            copies_examined: 1,
        });
    }
    let copies = copied_rows(rows, m as u32, limit);
    let word: Vec<u32> = copies.iter().rev().flatten().copied().collect();
    let p = rsk::insertion_rows(&word);
    let shape_upto = |bound: u32| -> Vec<usize> {
        p.iter()
            .map(|row| row.partition_point(|&x| x <= bound))
            .take_while(|&len| len > 0)
            .collect()
    };
    let mut previous: Vec<usize> = Vec::new();
    for k in 1..=limit {
        let current = shape_upto((k * m) as u32);
        let width = current.len().max(rv.len());
        let grew = (0..width).all(|i| {
            current.get(i).copied().unwrap_or(0) - previous.get(i).copied().unwrap_or(0)
                == rv.get(i).copied().unwrap_or(0)
        });
        if grew {
            return Ok(StabResult {
                stab: k,
                witness_shape: current,
                copies_examined: limit,
            });
        }
        previous = current;
    }
    Err(TableauError::NoStabilization(limit))
}

pub fn stab(s: &SkewTableau) -> Result<StabResult> {
    s.require_standard()?;
    if !is_weakly_decreasing(&s.row_vector()) {
        return Err(TableauError::Precondition(
            "stabilization needs a weakly decreasing row vector".into(),
        ));
    }
    stab_of_rows(s.rows())
}

/// Least `k` such that the entries `1..=m` of the anti-rectified left copies
/// are row-shift equivalent to `s`.
pub fn stab_star(s: &SkewTableau) -> Result<StabResult> {
    s.require_standard()?;
    let m = s.size() as u32;
    let limit = search_limit(s.num_rows());
    for k in 1..=limit {
        let copies = shifted_copies_left(s, k)?;
        let anti = jdt::antirect(&copies);
        if anti.restrict(1, m)?.row_shift_equivalent(s) {
            return Ok(StabResult {
                stab: k,
                witness_shape: anti.row_vector(),
                copies_examined: k,
            });
        }
    }
    Err(TableauError::NoStabilization(limit))
}

fn constant_row_length(s: &SkewTableau) -> Result<usize> {
    let rv = s.row_vector();
    match rv.first() {
        Some(&r) if rv.iter().all(|&x| x == r) => Ok(r),
        None => Ok(0),
        _ => Err(TableauError::Precondition(
            "a constant row vector is required".into(),
        )),
    }
}

/// `c_i` is the longest increasing subsequence of `w_i w_{i+1}` minus the row
/// length, with `w_1` the bottom row.
pub fn c_stats(s: &SkewTableau) -> Result<CStatistics> {
    let r = constant_row_length(s)?;
    let words: Vec<&Vec<u32>> = s.rows().iter().rev().collect();
    let c = words
        .windows(2)
        .map(|pair| {
            let joined: Vec<u32> = pair[0].iter().chain(pair[1].iter()).copied().collect();
            rsk::insertion_shape(&joined)[0] - r
        })
        .collect();
    Ok(CStatistics { c })
}

/// Generalized sum of `a_m + ... + a_n` where `terms[j - 1]` is `a_j` and
/// `a_0 = 0`. Indices past the end count as zero.
pub fn gensum(terms: &[i64], m: usize, n: usize) -> i64 {
    let prefix = |upto: usize| -> i64 { terms.iter().take(upto).sum() };
    prefix(n) - if m == 0 { 0 } else { prefix(m - 1) }
}

/// Shape of the rectification of `k` copies of an `(r^b)` tableau.
pub fn predicted_shape(s: &SkewTableau, k: usize) -> Result<Partition> {
    let r = constant_row_length(s)?;
    let needed = stab(s)?.stab - 1;
    if k < needed {
        return Err(TableauError::Precondition(format!(
            "the shape formula needs k >= stab - 1 = {needed}, got {k}"
        )));
    }
    let b = s.num_rows();
    let c: Vec<i64> = c_stats(s)?.c.iter().map(|&x| x as i64).collect();
    let parts = (1..=b)
        .map(|j| {
            let value = (k * r) as i64 + gensum(&c, j, b - j);
            usize::try_from(value).map_err(|_| {
                TableauError::Precondition(format!("row {j} of the formula is negative"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// The `(r^b)` tableau placed anti-diagonally with increasing reading word;
/// its stabilization number is exactly `b`.
pub fn increasing_antidiagonal(b: usize, r: usize) -> SkewTableau {
    let rows = (0..b)
        .rev()
        .map(|i| ((i * r) as u32 + 1..=((i + 1) * r) as u32).collect())
        .collect();
    SkewTableau::antidiagonal(rows).expect("anti-diagonal placement is valid")
}

/// Row vector of the rectification of `k` copies.
pub fn stabilized_shape(s: &SkewTableau, k: usize) -> Result<Vec<usize>> {
    Ok(jdt::rect(&shifted_copies(s, k)?).row_vector())
}
