use crate::coreq::antidiagonal_union;
use crate::error::{Result, TableauError};
use crate::jdt;
use crate::partition::Partition;
use crate::stabilize::{self, shifted_copies};
use crate::tableau::{row_concatenate, SkewShape, SkewTableau};

use super::enumerate::{enumerate_syt, set_compositions};

/// `b` single rows of length `r`, placed corner to corner.
pub fn beta_shape(b: usize, r: usize) -> SkewShape {
    antidiagonal_union(&vec![Partition::rectangle(r, 1); b])
}

/// Two rectangles of width `r` with `ceil(b/2)` rows south-west of `floor(b/2)` rows.
pub fn gamma_shape(b: usize, r: usize) -> SkewShape {
    antidiagonal_union(&[
        Partition::rectangle(r, b.div_ceil(2)),
        Partition::rectangle(r, b / 2),
    ])
}

fn constant_rows(s: &SkewTableau) -> Result<(usize, usize)> {
    let rv = s.row_vector();
    match rv.first() {
        Some(&r) if r > 0 && rv.iter().all(|&x| x == r) => Ok((rv.len(), r)),
        _ => Err(TableauError::Precondition(
            "the construction needs a nonempty tableau with constant row vector".into(),
        )),
    }
}

fn copies_or_empty(s: &SkewTableau, k: usize) -> Result<SkewTableau> {
    if k == 0 {
        Ok(SkewTableau::empty())
    } else {
        shifted_copies(s, k)
    }
}

/// Row-concatenation of the rectified copies, the middle copies and the
/// anti-rectified copies; fixed by the `br`-th power of promotion.
pub fn construct_ra(s: &SkewTableau, a: usize) -> Result<SkewTableau> {
    s.require_standard()?;
    let (b, r) = constant_rows(s)?;
    let k = stabilize::stab(s)?.stab;
    if a + 1 < 2 * k {
        return Err(TableauError::Precondition(format!(
            "a = {a} is below 2 stab - 1 = {}",
            2 * k - 1
        )));
    }
    let m = (b * r) as u32;
    let outer_copies = copies_or_empty(s, k - 1)?;
    let left = jdt::rect(&outer_copies);
    let middle = shifted_copies(s, a + 2 - 2 * k)?.shifted((k as u32 - 1) * m);
    let right = jdt::antirect(&outer_copies).shifted((a + 1 - k) as u32 * m);
    row_concatenate(&[left.rows(), middle.rows(), right.rows()], b)
}

/// Row-concatenation of `Rect(s)` and `Rect*(s) + n` for any standard tableau.
pub fn r2_concatenate(s: &SkewTableau) -> Result<SkewTableau> {
    s.require_standard()?;
    let n = s.size() as u32;
    let left = jdt::rect(s);
    let right = jdt::antirect(s).shifted(n);
    row_concatenate(&[left.rows(), right.rows()], s.num_rows())
}

/// The two-rectangle construction; `s` must have the shape of [`gamma_shape`].
pub fn construct_r2(s: &SkewTableau) -> Result<SkewTableau> {
    let (b, r) = constant_rows(s)?;
    if s.shape() != &gamma_shape(b, r) {
        return Err(TableauError::Precondition(format!(
            "shape must be two width-{r} rectangles with {} and {} rows placed corner to corner",
            b.div_ceil(2),
            b / 2
        )));
    }
    r2_concatenate(s)
}

/// Replaces entry `i*k + j` (with `1 <= j <= k`) by `i*m + a_j`.
pub fn reindex(t: &SkewTableau, m: u32, a_set: &[u32]) -> Result<SkewTableau> {
    t.require_standard()?;
    let k = a_set.len();
    if k == 0 || !t.size().is_multiple_of(k) {
        return Err(TableauError::Precondition(format!(
            "the index set size {k} must divide the tableau size {}",
            t.size()
        )));
    }
    if a_set.windows(2).any(|w| w[0] >= w[1]) || a_set[0] == 0 || a_set[k - 1] > m {
        return Err(TableauError::Precondition(format!(
            "the index set must be a strictly increasing subset of 1..={m}"
        )));
    }
    let k = k as u32;
    Ok(t.map_entries(|x| (x - 1) / k * m + a_set[((x - 1) % k) as usize]))
}

/// Straight tableaux of shape `p` fixed by the given power of promotion.
pub fn fixed_straight(p: &Partition, power: usize) -> Result<Vec<SkewTableau>> {
    let mut out = Vec::new();
    for t in enumerate_syt(&SkewShape::straight(p.clone()))? {
        if jdt::promote_power(&t, power)? == t {
            out.push(t);
        }
    }
    Ok(out)
}

/// Fixed points of `pr^{n/k}` on the corner-to-corner union of `pieces`,
/// assembled from fixed points of each piece.
pub fn block_fixed_points(pieces: &[Partition], k: usize) -> Result<Vec<SkewTableau>> {
    let n: usize = pieces.iter().map(Partition::size).sum();
    if k == 0 {
        return Err(TableauError::Precondition("k must be positive".into()));
    }
    if pieces.iter().any(|p| p.size() % k != 0) {
        return Ok(Vec::new());
    }
    let m = (n / k) as u32;
    let block_sizes: Vec<usize> = pieces.iter().map(|p| p.size() / k).collect();
    let piece_fixed = pieces
        .iter()
        .zip(&block_sizes)
        .map(|(p, &size)| fixed_straight(p, size))
        .collect::<Result<Vec<_>>>()?;
    let shape = antidiagonal_union(pieces);
    let mut out = Vec::new();
    for composition in set_compositions(&block_sizes) {
        for choice in cartesian(&piece_fixed) {
            let mut rows = Vec::with_capacity(shape.num_rows());
            for j in (0..pieces.len()).rev() {
                let reindexed = if pieces[j].is_empty() {
                    SkewTableau::empty()
                } else {
                    reindex(choice[j], m, &composition.blocks[j])?
                };
                rows.extend(reindexed.into_rows());
            }
            out.push(SkewTableau::new(shape.clone(), rows)?);
        }
    }
    out.sort_by(|x, y| x.rows().cmp(y.rows()));
    Ok(out)
}

/// Every way of choosing one element from each list.
fn cartesian<T>(lists: &[Vec<T>]) -> Vec<Vec<&T>> {
    let mut out: Vec<Vec<&T>> = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |item| {
                    let mut next = prefix.clone();
                    next.push(item);
                    next
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Ra(usize),
    R2,
}

impl Construction {
    pub fn apply(&self, s: &SkewTableau) -> Result<SkewTableau> {
        match *self {
            Construction::Ra(a) => construct_ra(s, a),
            Construction::R2 => construct_r2(s),
        }
    }
}

/// Whether promotion commutes with the construction at `s`.
pub fn promotion_equivariance_check(s: &SkewTableau, construction: Construction) -> Result<bool> {
    let lhs = jdt::promote(&construction.apply(s)?)?;
    let rhs = construction.apply(&jdt::promote(s)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight(rows: Vec<Vec<u32>>) -> SkewTableau {
        SkewTableau::straight(rows).unwrap()
    }

    #[test]
    fn ra_three_rows_width_two() {
        let s = SkewTableau::with_inner(vec![4, 2], vec![vec![2, 6], vec![4, 5], vec![1, 3]]).unwrap();
        assert_eq!(stabilize::stab(&s).unwrap().stab, 3);
        assert_eq!(
            jdt::rect(&shifted_copies(&s, 2).unwrap()).rows(),
            &[vec![1, 2, 4, 5, 6, 8, 12], vec![3, 9, 10, 11], vec![7]]
        );
        let r6 = construct_ra(&s, 6).unwrap();
        assert_eq!(
            r6.rows(),
            &[
                vec![1, 2, 4, 5, 6, 8, 12, 14, 18, 20, 24, 26],
                vec![3, 9, 10, 11, 16, 17, 22, 23, 28, 29, 30, 32],
                vec![7, 13, 15, 19, 21, 25, 27, 31, 33, 34, 35, 36]
            ]
        );
        assert!(construct_ra(&s, 4).is_err());
    }

    #[test]
    fn ra_permutation_tableaux() {
        let anti = |rows: &[u32]| {
            SkewTableau::antidiagonal(rows.iter().map(|&x| vec![x]).collect()).unwrap()
        };
        assert_eq!(
            construct_ra(&anti(&[2, 1, 3, 4]), 3).unwrap().rows(),
            &[vec![1, 2, 6], vec![3, 5, 10], vec![4, 7, 11], vec![8, 9, 12]]
        );
        assert_eq!(
            construct_ra(&anti(&[2, 1, 4, 3]), 5).unwrap().rows(),
            &[
                vec![1, 2, 5, 6, 10],
                vec![3, 4, 9, 13, 14],
                vec![7, 8, 12, 17, 18],
                vec![11, 15, 16, 19, 20]
            ]
        );
        assert_eq!(
            construct_ra(&anti(&[4, 3, 2, 1]), 7).unwrap().rows(),
            &[
                vec![1, 2, 3, 4, 8, 12, 16],
                vec![5, 6, 7, 11, 15, 19, 20],
                vec![9, 10, 14, 18, 22, 23, 24],
                vec![13, 17, 21, 25, 26, 27, 28]
            ]
        );
    }

    #[test]
    fn r2_example() {
        let s = SkewTableau::with_inner(
            vec![2, 2],
            vec![vec![2, 5], vec![6, 8], vec![1, 3], vec![4, 7]],
        )
        .unwrap();
        assert_eq!(jdt::rect(&s).rows(), &[vec![1, 2, 5, 8], vec![3, 6], vec![4, 7]]);
        assert_eq!(
            construct_r2(&s).unwrap().rows(),
            &[vec![1, 2, 5, 8], vec![3, 6, 10, 13], vec![4, 7, 11, 14], vec![9, 12, 15, 16]]
        );
        let wrong = straight(vec![vec![1, 2], vec![3, 4]]);
        assert!(construct_r2(&wrong).is_err());
    }

    #[test]
    fn reindex_examples() {
        let t = straight(vec![vec![1, 2, 5, 8], vec![3, 6, 9, 11], vec![4, 7, 10, 12]]);
        assert_eq!(
            reindex(&t, 6, &[2, 4, 5]).unwrap().rows(),
            &[vec![2, 4, 10, 16], vec![5, 11, 17, 22], vec![8, 14, 20, 23]]
        );
        assert_eq!(reindex(&t, 3, &[1, 2, 3]).unwrap(), t);
        assert!(reindex(&t, 6, &[2, 4, 5, 6, 1]).is_err());
        let t1 = straight(vec![vec![1, 2, 5], vec![3, 4, 6]]);
        let t2 = straight(vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(
            reindex(&t1, 5, &[1, 4, 5]).unwrap().rows(),
            &[vec![1, 4, 9], vec![5, 6, 10]]
        );
        assert_eq!(reindex(&t2, 5, &[2, 3]).unwrap().rows(), &[vec![2, 7], vec![3, 8]]);
    }

    #[test]
    fn block_example_and_its_r2() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let all = block_fixed_points(&[p(&[3, 3]), p(&[2, 2])], 2).unwrap();
        let example = SkewTableau::with_inner(
            vec![3, 3],
            vec![vec![2, 7], vec![3, 8], vec![1, 4, 9], vec![5, 6, 10]],
        )
        .unwrap();
        assert!(all.contains(&example));
        let r2 = r2_concatenate(&example).unwrap();
        assert_eq!(
            r2.rows(),
            &[
                vec![1, 2, 7, 12, 17],
                vec![3, 6, 8, 13, 18],
                vec![4, 9, 11, 14, 19],
                vec![5, 10, 15, 16, 20]
            ]
        );
        assert_eq!(jdt::promote_power(&r2, 5).unwrap(), r2);
        assert!(block_fixed_points(&[p(&[2]), p(&[3])], 2).unwrap().is_empty());
    }

    #[test]
    fn single_row_cases() {
        let row = straight(vec![vec![1, 2, 3]]);
        assert_eq!(construct_ra(&row, 4).unwrap().rows(), &[(1..=12).collect::<Vec<u32>>()]);
        assert_eq!(construct_r2(&straight(vec![vec![1, 2]])).unwrap().rows(), &[vec![1, 2, 3, 4]]);
    }
}
