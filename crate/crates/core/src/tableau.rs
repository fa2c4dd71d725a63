//! Skew shapes and skew tableaux in English notation.
//!
//! Rows are indexed from the top starting at 0 and columns from the left
//! starting at 0. A tableau stores the entries of each row left to right;
//! row `i` starts at column `inner[i]`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TableauError};
use crate::partition::Partition;
use crate::word::Word;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    /// Builds `outer / inner`, dropping trailing rows that hold no cells.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(TableauError::InvalidShape(format!(
                "inner partition ({inner}) is not contained in outer partition ({outer})"
            )));
        }
        let mut rows = outer.len();
        while rows > 0 && outer.part(rows - 1) == inner.part(rows - 1) {
            rows -= 1;
        }
        let outer = Partition::new(outer.parts()[..rows].to_vec())?;
        let inner = Partition::new(inner.parts()[..inner.len().min(rows)].to_vec())?;
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn row_vector(&self) -> Vec<usize> {
        (0..self.num_rows())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row < self.num_rows() && col >= self.inner.part(row) && col < self.outer.part(row)
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |c| (i, c)))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Validates row lengths, strict row and column increase and distinctness.
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.len() > shape.num_rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let rv = shape.row_vector();
        if rows.len() != rv.len() {
            return Err(TableauError::InvalidTableau(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                rv.len()
            )));
        }
        for (i, (row, &len)) in rows.iter().zip(&rv).enumerate() {
            if row.len() != len {
                return Err(TableauError::InvalidTableau(format!(
                    "row {} has {} entries but the shape needs {len}",
                    i + 1,
                    row.len()
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::InvalidTableau(format!(
                    "row {} is not strictly increasing",
                    i + 1
                )));
            }
        }
        let t = SkewTableau { shape, rows };
        for i in 1..t.rows.len() {
            for (k, &x) in t.rows[i].iter().enumerate() {
                let col = t.shape.inner.part(i) + k;
                if let Some(above) = t.get(i - 1, col) {
                    if above >= x {
                        return Err(TableauError::InvalidTableau(format!(
                            "column {} is not strictly increasing at row {}",
                            col + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        let mut seen = HashSet::with_capacity(t.size());
        for &x in t.rows.iter().flatten() {
            if !seen.insert(x) {
                return Err(TableauError::DuplicateEntry(x));
            }
        }
        Ok(t)
    }

    /// Builds a tableau from its inner partition and row contents.
    pub fn with_inner(inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| inner.get(i).copied().unwrap_or(0) + r.len())
            .collect();
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::new(shape, rows)
    }

    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        SkewTableau::with_inner(Vec::new(), rows)
    }

    pub fn empty() -> Self {
        SkewTableau {
            shape: SkewShape::default(),
            rows: Vec::new(),
        }
    }

    /// Places each row entirely to the left of the row above it.
    pub fn antidiagonal(rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut inner = vec![0; rows.len()];
        let mut acc = 0;
        for i in (0..rows.len()).rev() {
            inner[i] = acc;
            acc += rows[i].len();
        }
        SkewTableau::with_inner(inner, rows)
    }

    /// The tableau whose reading word is `word`, one letter per row.
    pub fn from_word_antidiagonal(word: &Word) -> Result<Self> {
        SkewTableau::antidiagonal(word.letters().iter().rev().map(|&x| vec![x]).collect())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Entry at an absolute cell, if the cell belongs to the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        let start = self.shape.inner.part(row);
        self.rows.get(row)?.get(col.checked_sub(start)?).copied()
    }

    pub fn position_of(&self, x: u32) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&y| y == x)
                .map(|k| (i, self.shape.inner.part(i) + k))
        })
    }

    pub fn entries(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn min_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().min()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    /// True when the entries are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    pub fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(TableauError::NotStandard(
                "entries must be exactly 1..n".into(),
            ))
        }
    }

    pub fn row_vector(&self) -> Vec<usize> {
        self.shape.row_vector()
    }

    /// Rows read from bottom to top, each left to right.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut row_of = std::collections::HashMap::with_capacity(self.size());
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of.insert(x, i);
            }
        }
        let mut des: Vec<usize> = row_of
            .iter()
            .filter(|(&x, &r)| row_of.get(&(x + 1)).is_some_and(|&r2| r2 > r))
            .map(|(&x, _)| x as usize)
            .collect();
        des.sort_unstable();
        des
    }

    pub fn conjugate(&self) -> SkewTableau {
        let shape = self.shape.conjugate();
        let rows = (0..shape.num_rows())
            .map(|c| {
                (shape.inner.part(c)..shape.outer.part(c))
                    .map(|i| self.get(i, c).expect("conjugate cell lies in the shape"))
                    .collect()
            })
            .collect();
        SkewTableau { shape, rows }
    }

    /// Rotates by 180 degrees inside the bounding box and reverses the order
    /// of the entries.
    pub fn dagger(&self) -> SkewTableau {
        if self.is_empty() {
            return SkewTableau::empty();
        }
        let width = self.shape.outer.part(0);
        let b = self.num_rows();
        let total = self.min_entry().unwrap() + self.max_entry().unwrap();
        let mut outer = Vec::with_capacity(b);
        let mut inner = Vec::with_capacity(b);
        let mut rows = Vec::with_capacity(b);
        for i in (0..b).rev() {
            outer.push(width - self.shape.inner.part(i));
            inner.push(width - self.shape.outer.part(i));
            rows.push(self.rows[i].iter().rev().map(|&x| total - x).collect());
        }
        let shape = SkewShape::new(
            Partition::new(outer).expect("rotated outer is a partition"),
            Partition::new(inner).expect("rotated inner is a partition"),
        )
        .expect("rotated shape is valid");
        rows.truncate(shape.num_rows());
        SkewTableau { shape, rows }
    }

    /// Keeps the cells whose entries lie in `[low, high]`.
    pub fn restrict(&self, low: u32, high: u32) -> Result<SkewTableau> {
        let mut outer = Vec::with_capacity(self.num_rows());
        let mut inner = Vec::with_capacity(self.num_rows());
        let mut rows = Vec::with_capacity(self.num_rows());
        for (i, row) in self.rows.iter().enumerate() {
            let start = self.shape.inner.part(i);
            let below = row.iter().filter(|&&x| x < low).count();
            let kept: Vec<u32> = row
                .iter()
                .copied()
                .filter(|&x| x >= low && x <= high)
                .collect();
            inner.push(start + below);
            outer.push(start + below + kept.len());
            rows.push(kept);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
            outer.pop();
            inner.pop();
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::new(shape, rows)
    }

    /// Same row contents up to adding one constant to every entry.
    pub fn row_shift_equivalent(&self, other: &SkewTableau) -> bool {
        if self.num_rows() != other.num_rows() || self.row_vector() != other.row_vector() {
            return false;
        }
        let (Some(a), Some(b)) = (self.min_entry(), other.min_entry()) else {
            return true;
        };
        let offset = b as i64 - a as i64;
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .all(|(&x, &y)| x as i64 + offset == y as i64)
    }

    /// The anti-diagonal representative of the row-shift class.
    pub fn canonical_row_shift(&self) -> SkewTableau {
        SkewTableau::antidiagonal(self.rows.clone()).expect("anti-diagonal placement is valid")
    }

    /// Adds `offset` to every entry.
    pub fn shifted(&self, offset: u32) -> SkewTableau {
        SkewTableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| x + offset).collect())
                .collect(),
        }
    }

    /// Replaces the `k`-th smallest entry by `k`.
    pub fn standardize(&self) -> SkewTableau {
        let sorted = self.entries();
        self.map_entries(|x| sorted.binary_search(&x).unwrap() as u32 + 1)
    }

    /// Applies an order-preserving relabelling to every entry.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> SkewTableau {
        SkewTableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<u32>>) -> SkewTableau {
        debug_assert!(SkewTableau::new(shape.clone(), rows.clone()).is_ok());
        SkewTableau { shape, rows }
    }
}

/// Concatenates the rows of several tableaux, row by row, into an
/// anti-diagonal tableau with the given number of rows.
pub fn row_concatenate(parts: &[&[Vec<u32>]], num_rows: usize) -> Result<SkewTableau> {
    let mut rows = vec![Vec::new(); num_rows];
    for part in parts {
        if part.len() > num_rows {
            return Err(TableauError::Precondition(format!(
                "row concatenation needs at most {num_rows} rows, found {}",
                part.len()
            )));
        }
        for (i, row) in part.iter().enumerate() {
            rows[i].extend_from_slice(row);
        }
    }
    SkewTableau::straight(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_one_example() -> SkewTableau {
        SkewTableau::with_inner(
            vec![5, 5, 1, 0],
            vec![vec![1, 7], vec![], vec![2, 4, 6, 9], vec![3, 5, 8]],
        )
        .unwrap()
    }

    #[test]
    fn statistics_of_gapped_example() {
        let s = two_one_example();
        assert_eq!(s.shape().outer.parts(), &[7, 5, 5, 3]);
        assert_eq!(s.row_vector(), vec![2, 0, 4, 3]);
        assert_eq!(s.reading_word().letters(), &[3, 5, 8, 2, 4, 6, 9, 1, 7]);
        assert_eq!(s.descent_set(), vec![1, 2, 4, 7]);
        assert!(s.is_standard());
    }

    #[test]
    fn rejects_bad_columns_and_duplicates() {
        assert!(SkewTableau::straight(vec![vec![1, 3], vec![2, 3]]).is_err());
        assert!(SkewTableau::straight(vec![vec![2, 3], vec![1, 4]]).is_err());
        assert!(SkewTableau::straight(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
    }

    #[test]
    fn dagger_and_conjugate_are_involutions_here() {
        let s = SkewTableau::with_inner(vec![2, 1], vec![vec![1, 6], vec![2, 5], vec![3, 4]])
            .unwrap();
        assert_eq!(s.dagger().dagger(), s);
        assert_eq!(s.conjugate().conjugate(), s);
        assert_eq!(
            s.dagger().rows(),
            &[vec![3, 4], vec![2, 5], vec![1, 6]]
        );
    }

    #[test]
    fn row_shift_classes() {
        let t = SkewTableau::straight(vec![vec![1, 2, 4], vec![3, 5], vec![6]]).unwrap();
        let anti = t.canonical_row_shift();
        assert_eq!(anti.shape().inner.parts(), &[3, 1]);
        assert!(t.row_shift_equivalent(&anti));
        assert!(t.row_shift_equivalent(&anti.shifted(12)));
        let other = SkewTableau::straight(vec![vec![1, 2, 3], vec![4, 5], vec![6]]).unwrap();
        assert!(!t.row_shift_equivalent(&other));
    }

    #[test]
    fn empty_objects_are_legal() {
        let e = SkewTableau::straight(vec![]).unwrap();
        assert!(e.is_empty());
        assert!(e.is_standard());
        assert_eq!(e.reading_word().len(), 0);
        assert_eq!(e.dagger(), e);
    }
}
