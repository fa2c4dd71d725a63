//! Integer partitions stored as weakly decreasing positive parts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TableauError};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(TableauError::InvalidPartition(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Hook lengths listed row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for c in 0..row {
                hooks.push(row - c + conj.part(c) - i - 1);
            }
        }
        hooks
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                extend(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TableauError;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&joined.join(","))
    }
}

impl FromStr for Partition {
    type Err = TableauError;

    /// Parses comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut column = 1;
        for token in s.split(',') {
            let value = token.trim().parse::<usize>().map_err(|_| TableauError::Parse {
                line: 1,
                column,
                message: format!("expected a non-negative integer, found {token:?}"),
            })?;
            parts.push(value);
            column += token.len() + 1;
        }
        Partition::new(parts)
    }
}
