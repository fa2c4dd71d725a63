use rayon::prelude::*;

use crate::counting::{binomial, hook_count};
use crate::error::{Result, TableauError};
use crate::partition::Partition;
use crate::rsk;
use crate::stabilize::stab_of_rows;
use crate::tableau::{SkewShape, SkewTableau};
use crate::word::Word;

use super::enumerate::enumerate_syt_with_limit;

/// Stabilization number of the one-cell-per-row tableau reading `w`.
pub fn stab_of_permutation(w: &Word) -> Result<usize> {
    w.check_distinct()?;
    let rows: Vec<Vec<u32>> = w.letters().iter().rev().map(|&x| vec![x]).collect();
    Ok(stab_of_rows(&rows)?.stab)
}

fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (1..=n as u32).collect();
    let mut c = vec![0usize; n];
    out.push(current.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(c[i], i);
            }
            out.push(current.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn tally(n: usize, stabs: impl Iterator<Item = (usize, u64)>) -> Vec<u64> {
    let mut counts = vec![0u64; n.max(1)];
    for (s, weight) in stabs {
        counts[s - 1] += weight;
    }
    counts
}

/// Counts of permutations of `1..=n` by stabilization number, one
/// representative per recording tableau.
pub fn stab_distribution(n: usize) -> Result<Vec<u64>> {
    let mut recordings = Vec::new();
    for shape in Partition::all_of_size(n) {
        let weight = hook_count(&shape)?;
        for q in enumerate_syt_with_limit(&SkewShape::straight(shape.clone()), n)? {
            recordings.push((q, weight));
        }
    }
    let stabs = recordings
        .par_iter()
        .map(|(q, weight)| {
            let w = q.reading_word().inverse()?;
            Ok((stab_of_permutation(&w)?, *weight))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tally(n, stabs.into_iter()))
}

/// The same counts by running over every permutation.
pub fn stab_distribution_brute(n: usize) -> Result<Vec<u64>> {
    let stabs = all_permutations(n)
        .into_par_iter()
        .map(|w| Ok((stab_of_permutation(&Word(w))?, 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok(tally(n, stabs.into_iter()))
}

/// Every permutation of `1..=n` with its stabilization number.
pub fn permutations_with_stab(n: usize) -> Result<Vec<(Word, usize)>> {
    all_permutations(n)
        .into_par_iter()
        .map(|w| {
            let w = Word(w);
            let s = stab_of_permutation(&w)?;
            Ok((w, s))
        })
        .collect()
}

/// Closed-form number of permutations of `1..=n` with stabilization number 2.
pub fn stab2_count(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(TableauError::Precondition(format!("n = {n} must be at least 2")));
    }
    Ok(binomial(n + 1, n.div_ceil(2))? - 2)
}

/// Insertion tableau of `k k-1 ... 1 n n-1 ... k+1`.
pub fn stab2_recording_tableau(n: usize, k: usize) -> Result<SkewTableau> {
    if k == 0 || k >= n {
        return Err(TableauError::Precondition(format!("k = {k} must satisfy 1 <= k < {n}")));
    }
    let letters: Vec<u32> = (1..=k as u32).rev().chain((k as u32 + 1..=n as u32).rev()).collect();
    Ok(rsk::rsk(&Word(letters))?.p)
}

/// Whether the recording tableau of `w` is one of the two-column tableaux
/// that characterize stabilization number 2.
pub fn has_stab2_recording(w: &Word) -> Result<bool> {
    let n = w.len();
    if n < 2 {
        return Ok(false);
    }
    let q = rsk::rsk(w)?.q;
    for k in 1..n {
        if stab2_recording_tableau(n, k)? == q {
            return Ok(true);
        }
    }
    Ok(false)
}
