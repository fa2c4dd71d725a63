//! Row insertion and the Robinson–Schensted correspondence.

use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::tableau::SkewTableau;
use crate::word::Word;

/// Cells occupied by the inserted letter and by each bumped letter, top row
/// first, together with the letter that landed in each cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BumpingChain {
    pub cells: Vec<(usize, usize)>,
    pub values: Vec<u32>,
}

impl BumpingChain {
    /// The cell added to the shape by the insertion.
    pub fn new_cell(&self) -> (usize, usize) {
        *self.cells.last().expect("a bumping chain is never empty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPair {
    pub p: SkewTableau,
    pub q: SkewTableau,
}

/// Inserts `x` into straight rows in place and returns the chain.
pub(crate) fn insert_in_place(rows: &mut Vec<Vec<u32>>, x: u32) -> BumpingChain {
    let mut cells = Vec::new();
    let mut values = Vec::new();
    let mut carry = x;
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&y| y < carry);
        cells.push((i, pos));
        values.push(carry);
        if pos == row.len() {
            row.push(carry);
            return BumpingChain { cells, values };
        }
        carry = std::mem::replace(&mut row[pos], carry);
    }
    cells.push((rows.len(), 0));
    values.push(carry);
    rows.push(vec![carry]);
    BumpingChain { cells, values }
}

/// Rows of the insertion tableau of a word with distinct letters.
pub(crate) fn insertion_rows(letters: &[u32]) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    for &x in letters {
        insert_in_place(&mut rows, x);
    }
    rows
}

/// Row lengths of the insertion tableau.
pub(crate) fn insertion_shape(letters: &[u32]) -> Vec<usize> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in letters {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            carry = std::mem::replace(&mut row[pos], carry);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    rows.iter().map(Vec::len).collect()
}

fn require_straight(t: &SkewTableau) -> Result<()> {
    if t.is_straight() {
        Ok(())
    } else {
        Err(TableauError::Precondition(
            "row insertion needs a straight-shape tableau".into(),
        ))
    }
}

pub fn row_insert(t: &SkewTableau, x: u32) -> Result<(SkewTableau, BumpingChain)> {
    require_straight(t)?;
    if t.position_of(x).is_some() {
        return Err(TableauError::DuplicateEntry(x));
    }
    let mut rows = t.rows().to_vec();
    let chain = insert_in_place(&mut rows, x);
    Ok((SkewTableau::straight(rows)?, chain))
}

/// Inserts the letters of `w` one after another.
pub fn insert_word(t: &SkewTableau, w: &Word) -> Result<SkewTableau> {
    require_straight(t)?;
    let mut all: Vec<u32> = t.rows().iter().flatten().copied().collect();
    all.extend_from_slice(w.letters());
    Word(all).check_distinct()?;
    let mut rows = t.rows().to_vec();
    for &x in w.letters() {
        insert_in_place(&mut rows, x);
    }
    SkewTableau::straight(rows)
}

pub fn rsk(w: &Word) -> Result<InsertionPair> {
    w.check_distinct()?;
    let mut p_rows: Vec<Vec<u32>> = Vec::new();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (step, &x) in w.letters().iter().enumerate() {
        let (row, _) = insert_in_place(&mut p_rows, x).new_cell();
        if row == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[row].push(step as u32 + 1);
    }
    Ok(InsertionPair {
        p: SkewTableau::straight(p_rows)?,
        q: SkewTableau::straight(q_rows)?,
    })
}

pub const GREENE_MAX_LEN: usize = 10;
pub const GREENE_MAX_DEPTH: usize = 4;

/// For `k = 1..=depth`, the largest total length of `k` disjoint increasing
/// subsequences of `w`, found by exhaustive search over position labels.
pub fn greene_shape_oracle(w: &Word, depth: usize) -> Result<Vec<usize>> {
    if w.len() > GREENE_MAX_LEN || depth > GREENE_MAX_DEPTH {
        return Err(TableauError::Precondition(format!(
            "Greene oracle is limited to words of length <= {GREENE_MAX_LEN} and depth <= {GREENE_MAX_DEPTH}"
        )));
    }
    Ok((1..=depth)
        .map(|k| {
            let mut search = LabelSearch {
                letters: w.letters(),
                last: vec![None; k],
                best: 0,
            };
            search.run(0, 0, 0);
            search.best
        })
        .collect())
}

struct LabelSearch<'a> {
    letters: &'a [u32],
    last: Vec<Option<u32>>,
    best: usize,
}

impl LabelSearch<'_> {
    fn run(&mut self, pos: usize, used: usize, labelled: usize) {
        if labelled + (self.letters.len() - pos) <= self.best {
            return;
        }
        if pos == self.letters.len() {
            self.best = labelled;
            return;
        }
        let x = self.letters[pos];
        // Labels are interchangeable, so a fresh label is only ever the next unused one.
        let limit = (used + 1).min(self.last.len());
        for label in 0..limit {
            let prev = self.last[label];
            if prev.is_some_and(|p| p >= x) {
                continue;
            }
            self.last[label] = Some(x);
            self.run(pos + 1, used.max(label + 1), labelled + 1);
            self.last[label] = prev;
        }
        self.run(pos + 1, used, labelled);
    }
}
