//! Jeu de taquin slides, rectification, promotion and evacuation.

use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::partition::Partition;
use crate::tableau::{SkewShape, SkewTableau};

/// Where a hole started, every cell it passed through, and where it stopped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlideTrace {
    pub start: (usize, usize),
    pub path: Vec<(usize, usize)>,
    pub end: (usize, usize),
}

/// Which removable inner corner rectification slides into first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlideOrder {
    #[default]
    BottommostFirst,
    TopmostFirst,
}

/// Mutable absolute-column view of a tableau; `None` marks inner cells and holes.
struct Grid {
    inner: Vec<usize>,
    cells: Vec<Vec<Option<u32>>>,
}

impl Grid {
    fn from_tableau(t: &SkewTableau) -> Grid {
        let inner: Vec<usize> = (0..t.num_rows()).map(|i| t.shape().inner.part(i)).collect();
        let cells = t
            .rows()
            .iter()
            .zip(&inner)
            .map(|(row, &start)| {
                let mut cells = vec![None; start];
                cells.extend(row.iter().map(|&x| Some(x)));
                cells
            })
            .collect();
        Grid { inner, cells }
    }

    fn in_shape(&self, i: usize, c: usize) -> bool {
        i < self.cells.len() && c >= self.inner[i] && c < self.cells[i].len()
    }

    fn value(&self, i: usize, c: usize) -> Option<u32> {
        if self.in_shape(i, c) {
            self.cells[i][c]
        } else {
            None
        }
    }

    /// Moves the hole right or down, always pulling in the smaller neighbour.
    fn slide_forward(&mut self, start: (usize, usize)) -> Vec<(usize, usize)> {
        let (mut i, mut c) = start;
        let mut path = vec![start];
        loop {
            let right = self.value(i, c + 1);
            let below = self.value(i + 1, c);
            let next = match (right, below) {
                (Some(r), Some(b)) if b < r => (i + 1, c),
                (Some(_), _) => (i, c + 1),
                (None, Some(_)) => (i + 1, c),
                (None, None) => return path,
            };
            self.cells[i][c] = self.cells[next.0][next.1].take();
            (i, c) = next;
            path.push(next);
        }
    }

    /// Moves the hole left or up, always pulling in the larger neighbour.
    fn slide_backward(&mut self, start: (usize, usize)) -> Vec<(usize, usize)> {
        let (mut i, mut c) = start;
        let mut path = vec![start];
        loop {
            let left = if c > 0 { self.value(i, c - 1) } else { None };
            let above = if i > 0 { self.value(i - 1, c) } else { None };
            let next = match (left, above) {
                (Some(l), Some(a)) if a > l => (i - 1, c),
                (Some(_), _) => (i, c - 1),
                (None, Some(_)) => (i - 1, c),
                (None, None) => return path,
            };
            self.cells[i][c] = self.cells[next.0][next.1].take();
            (i, c) = next;
            path.push(next);
        }
    }

    fn inner_corners(&self) -> Vec<(usize, usize)> {
        (0..self.inner.len())
            .filter(|&i| {
                self.inner[i] > 0 && self.inner.get(i + 1).copied().unwrap_or(0) < self.inner[i]
            })
            .map(|i| (i, self.inner[i] - 1))
            .collect()
    }

    fn is_straight(&self) -> bool {
        self.inner.iter().all(|&x| x == 0)
    }

    /// Slides into an inner corner and deletes the cell the hole ends in.
    fn inner_slide(&mut self, corner: (usize, usize)) -> Vec<(usize, usize)> {
        self.inner[corner.0] -= 1;
        let path = self.slide_forward(corner);
        let (ei, _) = *path.last().unwrap();
        self.cells[ei].pop();
        path
    }

    fn into_tableau(self) -> SkewTableau {
        let outer: Vec<usize> = self.cells.iter().map(Vec::len).collect();
        let rows: Vec<Vec<u32>> = self
            .cells
            .iter()
            .zip(&self.inner)
            .map(|(row, &start)| {
                row[start.min(row.len())..]
                    .iter()
                    .map(|x| x.expect("no holes remain"))
                    .collect()
            })
            .collect();
        let shape = SkewShape::new(
            Partition::new(outer).expect("outer stays a partition"),
            Partition::new(self.inner).expect("inner stays a partition"),
        )
        .expect("shape stays valid");
        let mut rows = rows;
        rows.truncate(shape.num_rows());
        SkewTableau::from_parts_unchecked(shape, rows)
    }
}

/// One jeu de taquin slide into the removable inner corner `corner`.
pub fn inner_slide(t: &SkewTableau, corner: (usize, usize)) -> Result<(SkewTableau, SlideTrace)> {
    let mut grid = Grid::from_tableau(t);
    if !grid.inner_corners().contains(&corner) {
        return Err(TableauError::NotInnerCorner {
            row: corner.0,
            col: corner.1,
        });
    }
    let path = grid.inner_slide(corner);
    let trace = SlideTrace {
        start: corner,
        end: *path.last().unwrap(),
        path,
    };
    Ok((grid.into_tableau(), trace))
}

pub fn rect(t: &SkewTableau) -> SkewTableau {
    rect_with_order(t, SlideOrder::BottommostFirst)
}

pub fn rect_with_order(t: &SkewTableau, order: SlideOrder) -> SkewTableau {
    let mut grid = Grid::from_tableau(t);
    while !grid.is_straight() {
        let corners = grid.inner_corners();
        let corner = match order {
            SlideOrder::BottommostFirst => *corners.last().unwrap(),
            SlideOrder::TopmostFirst => corners[0],
        };
        grid.inner_slide(corner);
    }
    grid.into_tableau()
}

/// Slides outward inside the bounding box until the box's bottom-right region
/// is filled, then drops unused leading columns. Empty top rows are kept.
pub fn antirect(t: &SkewTableau) -> SkewTableau {
    if t.is_empty() {
        return SkewTableau::empty();
    }
    let width = t.shape().outer.part(0);
    let mut grid = Grid::from_tableau(t);
    loop {
        let addable = (0..grid.cells.len()).rev().find(|&i| {
            let len = grid.cells[i].len();
            len < width && (i == 0 || grid.cells[i - 1].len() > len)
        });
        let Some(i) = addable else { break };
        grid.cells[i].push(None);
        let start = (i, grid.cells[i].len() - 1);
        let path = grid.slide_backward(start);
        let (ei, _) = *path.last().unwrap();
        grid.inner[ei] += 1;
    }
    let strip = *grid.inner.last().unwrap();
    for (row, start) in grid.cells.iter_mut().zip(grid.inner.iter_mut()) {
        row.drain(..strip);
        *start -= strip;
    }
    grid.into_tableau()
}

/// Removes 1, slides the hole outward, places n+1 and decrements.
pub fn promote(t: &SkewTableau) -> Result<SkewTableau> {
    t.require_standard()?;
    Ok(promote_unchecked(t))
}

fn promote_unchecked(t: &SkewTableau) -> SkewTableau {
    let n = t.size() as u32;
    if n == 0 {
        return t.clone();
    }
    let mut grid = Grid::from_tableau(t);
    let start = t.position_of(1).unwrap();
    grid.cells[start.0][start.1] = None;
    let path = grid.slide_forward(start);
    let (ei, ec) = *path.last().unwrap();
    grid.cells[ei][ec] = Some(n + 1);
    for x in grid.cells.iter_mut().flatten().flatten() {
        *x -= 1;
    }
    grid.into_tableau()
}

pub fn promote_power(t: &SkewTableau, power: usize) -> Result<SkewTableau> {
    t.require_standard()?;
    let mut cur = t.clone();
    for _ in 0..power {
        cur = promote_unchecked(&cur);
    }
    Ok(cur)
}

/// Removes n, slides the hole inward, places 0 and increments.
pub fn demote(t: &SkewTableau) -> Result<SkewTableau> {
    t.require_standard()?;
    let n = t.size() as u32;
    if n == 0 {
        return Ok(t.clone());
    }
    let mut grid = Grid::from_tableau(t);
    let start = t.position_of(n).unwrap();
    grid.cells[start.0][start.1] = None;
    let path = grid.slide_backward(start);
    let (ei, ec) = *path.last().unwrap();
    grid.cells[ei][ec] = Some(0);
    for x in grid.cells.iter_mut().flatten().flatten() {
        *x += 1;
    }
    Ok(grid.into_tableau())
}

/// Promotion of a tableau with arbitrary distinct entries, acting on the
/// positions of the entries in sorted order.
pub fn promote_indices(t: &SkewTableau) -> SkewTableau {
    let sorted = t.entries();
    promote_unchecked(&t.standardize()).map_entries(|k| sorted[k as usize - 1])
}

/// Schützenberger evacuation of a straight standard tableau.
pub fn evacuate(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(TableauError::Precondition(
            "evacuation needs a straight-shape tableau".into(),
        ));
    }
    t.require_standard()?;
    let n = t.size() as u32;
    let mut grid = Grid::from_tableau(t);
    let mut labels: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for step in 0..n {
        grid.cells[0][0] = None;
        grid.inner[0] = 1;
        let path = grid.inner_slide((0, 0));
        let (ei, ec) = *path.last().unwrap();
        labels[ei][ec] = n - step;
    }
    SkewTableau::new(t.shape().clone(), labels)
}

/// The elementary dual equivalence move on `i`, `1 < i < n`.
pub fn dual_move(t: &SkewTableau, i: u32) -> Result<SkewTableau> {
    t.require_standard()?;
    let n = t.size() as u32;
    if i < 2 || i + 1 > n {
        return Err(TableauError::Precondition(format!(
            "dual move index {i} must satisfy 1 < i < {n}"
        )));
    }
    let word = t.reading_word();
    let pos = |x: u32| word.letters().iter().position(|&y| y == x).unwrap();
    let (lo, mid, hi) = (pos(i - 1), pos(i), pos(i + 1));
    let between = |p: usize, a: usize, b: usize| a.min(b) < p && p < a.max(b);
    let swap = if between(lo, mid, hi) {
        Some((i, i + 1))
    } else if between(hi, mid, lo) {
        Some((i - 1, i))
    } else {
        None
    };
    let Some((a, b)) = swap else {
        return Ok(t.clone());
    };
    let swapped = t.map_entries(|x| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    });
    SkewTableau::new(swapped.shape().clone(), swapped.into_rows())
}
