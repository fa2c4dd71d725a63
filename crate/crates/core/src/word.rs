use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TableauError};

/// A finite word over the positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True when the letters are exactly `1..=n`.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &x in &self.0 {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn inverse(&self) -> Result<Word> {
        if !self.is_permutation() {
            return Err(TableauError::Precondition(
                "inverse requires a permutation of 1..n".into(),
            ));
        }
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Ok(Word(inv))
    }

    /// Fails with the first repeated letter, if any.
    pub fn check_distinct(&self) -> Result<()> {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        match sorted.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(TableauError::RepeatedLetter(w[0])),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&joined.join(" "))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}
