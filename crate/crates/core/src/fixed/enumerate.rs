use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::tableau::{SkewShape, SkewTableau};

pub const DEFAULT_MAX_CELLS: usize = 16;
pub const MAX_CELLS_ENV: &str = "TABLEAU_LAB_MAX_CELLS";

/// The enumeration cell limit, read from the environment when set.
pub fn max_cells() -> usize {
    std::env::var(MAX_CELLS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// Streams every standard filling of a skew shape. Fillings come out in
/// lexicographic order of the row sequence chosen for `1, 2, ...`.
pub struct SytIter {
    shape: SkewShape,
    row_len: Vec<usize>,
    filled: Vec<usize>,
    choices: Vec<usize>,
    n: usize,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_syt(shape: &SkewShape) -> Result<SytIter> {
    enumerate_syt_with_limit(shape, max_cells())
}

pub fn enumerate_syt_with_limit(shape: &SkewShape, limit: usize) -> Result<SytIter> {
    let n = shape.size();
    if n > limit {
        return Err(TableauError::LimitExceeded { cells: n, limit });
    }
    let row_len = shape.row_vector();
    Ok(SytIter {
        filled: vec![0; row_len.len()],
        row_len,
        shape: shape.clone(),
        choices: Vec::with_capacity(n),
        n,
        state: IterState::Fresh,
    })
}

impl SytIter {
    fn can_place(&self, row: usize) -> bool {
        if self.filled[row] >= self.row_len[row] {
            return false;
        }
        if row == 0 {
            return true;
        }
        let col = self.shape.inner.part(row) + self.filled[row];
        let above_start = self.shape.inner.part(row - 1);
        col < above_start || col < above_start + self.filled[row - 1]
    }

    fn place_from(&mut self, first_row: usize) -> bool {
        for row in first_row..self.row_len.len() {
            if self.can_place(row) {
                self.filled[row] += 1;
                self.choices.push(row);
                return true;
            }
        }
        false
    }

    fn complete(&mut self) -> bool {
        while self.choices.len() < self.n {
            if !self.place_from(0) {
                return false;
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some(row) = self.choices.pop() {
            self.filled[row] -= 1;
            if self.place_from(row + 1) && self.complete() {
                return true;
            }
        }
        false
    }

    fn current(&self) -> SkewTableau {
        let mut rows: Vec<Vec<u32>> = self.row_len.iter().map(|&l| Vec::with_capacity(l)).collect();
        for (entry, &row) in self.choices.iter().enumerate() {
            rows[row].push(entry as u32 + 1);
        }
        SkewTableau::from_parts_unchecked(self.shape.clone(), rows)
    }
}

impl Iterator for SytIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        let found = match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.complete()
            }
            IterState::Running => self.advance(),
        };
        if found {
            Some(self.current())
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// An ordered sequence of disjoint blocks covering `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetComposition {
    pub blocks: Vec<Vec<u32>>,
}

/// All set compositions of `1..=sum(sizes)` with the given block sizes.
pub fn set_compositions(sizes: &[usize]) -> Vec<SetComposition> {
    fn fill(
        next: u32,
        m: u32,
        sizes: &[usize],
        blocks: &mut Vec<Vec<u32>>,
        out: &mut Vec<SetComposition>,
    ) {
        if next > m {
            out.push(SetComposition {
                blocks: blocks.clone(),
            });
            return;
        }
        for j in 0..sizes.len() {
            if blocks[j].len() < sizes[j] {
                blocks[j].push(next);
                fill(next + 1, m, sizes, blocks, out);
                blocks[j].pop();
            }
        }
    }
    let m: usize = sizes.iter().sum();
    let mut out = Vec::new();
    fill(1, m as u32, sizes, &mut vec![Vec::new(); sizes.len()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn counts_of_small_shapes() {
        assert_eq!(enumerate_syt(&shape(&[2, 2], &[])).unwrap().count(), 2);
        assert_eq!(enumerate_syt(&shape(&[3, 3], &[])).unwrap().count(), 5);
        assert_eq!(enumerate_syt(&shape(&[3, 2, 1], &[2, 1])).unwrap().count(), 6);
        assert_eq!(enumerate_syt(&shape(&[], &[])).unwrap().count(), 1);
        let all: Vec<SkewTableau> = enumerate_syt(&shape(&[3, 2], &[])).unwrap().collect();
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|t| SkewTableau::new(t.shape().clone(), t.rows().to_vec()).is_ok()));
    }

    #[test]
    fn limit_is_enforced() {
        let big = shape(&[17], &[]);
        assert!(matches!(
            enumerate_syt_with_limit(&big, 16),
            Err(TableauError::LimitExceeded { cells: 17, limit: 16 })
        ));
        assert_eq!(enumerate_syt_with_limit(&big, 17).unwrap().count(), 1);
    }

    #[test]
    fn set_composition_counts() {
        assert_eq!(set_compositions(&[3, 2]).len(), 10);
        assert_eq!(set_compositions(&[1, 1, 1]).len(), 6);
        assert_eq!(set_compositions(&[]).len(), 1);
    }
}
