//! Cores and quotients of partitions through boundary words.

use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::partition::Partition;
use crate::tableau::SkewShape;

/// The boundary of a partition read from the south-west end, `1` for a
/// step right and `0` for a step up, with no leading `0` and no trailing `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryWord(pub Vec<u8>);

impl BoundaryWord {
    /// Strips leading zeros and trailing ones.
    pub fn normalized(bits: &[u8]) -> BoundaryWord {
        let start = bits.iter().position(|&b| b == 1).unwrap_or(bits.len());
        let end = bits.iter().rposition(|&b| b == 0).map_or(0, |p| p + 1);
        BoundaryWord(if start < end { bits[start..end].to_vec() } else { Vec::new() })
    }

    pub fn to_partition(&self) -> Partition {
        let mut ones = 0;
        let mut parts = Vec::new();
        for &bit in &self.0 {
            if bit == 1 {
                ones += 1;
            } else if ones > 0 {
                parts.push(ones);
            }
        }
        parts.reverse();
        Partition::new(parts).expect("boundary rows are weakly increasing from the bottom")
    }

    pub fn as_string(&self) -> String {
        self.0.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientDecomposition {
    pub pieces: Vec<Partition>,
    pub union_shape: SkewShape,
    pub core: Partition,
}

pub fn boundary_word(p: &Partition) -> BoundaryWord {
    let parts = p.parts();
    let mut bits = Vec::with_capacity(p.part(0) + p.len());
    for i in (0..parts.len()).rev() {
        let step = parts[i] - p.part(i + 1);
        bits.extend(std::iter::repeat_n(1, step));
        bits.push(0);
    }
    BoundaryWord(bits)
}

fn residue_classes(bits: &[u8], r: usize) -> Vec<Vec<u8>> {
    (0..r)
        .map(|j| bits.iter().skip(j).step_by(r).copied().collect())
        .collect()
}

/// Splits `p` into `r` pieces and its `r`-core.
pub fn quotient(p: &Partition, r: usize) -> Result<QuotientDecomposition> {
    if r == 0 {
        return Err(TableauError::Precondition("the modulus must be positive".into()));
    }
    let word = boundary_word(p);
    let classes = residue_classes(&word.0, r);
    let pieces: Vec<Partition> = classes
        .iter()
        .map(|class| BoundaryWord::normalized(class).to_partition())
        .collect();
    let mut core_bits = word.0.clone();
    for (j, class) in classes.iter().enumerate() {
        let zeros = class.iter().filter(|&&b| b == 0).count();
        for (t, pos) in (j..core_bits.len()).step_by(r).enumerate() {
            core_bits[pos] = u8::from(t >= zeros);
        }
    }
    let core = BoundaryWord::normalized(&core_bits).to_partition();
    Ok(QuotientDecomposition {
        union_shape: antidiagonal_union(&pieces),
        pieces,
        core,
    })
}

/// Positions `p` where `bits[p] = 1` and `bits[p + r] = 0`.
pub fn ribbon_swaps(bits: &[u8], r: usize) -> Vec<usize> {
    (0..bits.len().saturating_sub(r))
        .filter(|&p| bits[p] == 1 && bits[p + r] == 0)
        .collect()
}

/// Removes `r`-ribbons one swap at a time; `choose` picks which available
/// swap to perform next.
pub fn core_by_swaps(
    p: &Partition,
    r: usize,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Partition {
    let mut bits = boundary_word(p).0;
    loop {
        let options = ribbon_swaps(&bits, r);
        if options.is_empty() {
            return BoundaryWord::normalized(&bits).to_partition();
        }
        let pos = options[choose(&options) % options.len()];
        bits.swap(pos, pos + r);
    }
}

/// Places the pieces corner to corner, the first piece south-west of the second
/// and so on, so the last piece occupies the top rows.
pub fn antidiagonal_union(pieces: &[Partition]) -> SkewShape {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let total_width: usize = pieces.iter().map(|p| p.part(0)).sum();
    let mut offset = total_width;
    for piece in pieces.iter().rev() {
        offset -= piece.part(0);
        for &part in piece.parts() {
            outer.push(offset + part);
            inner.push(offset);
        }
    }
    SkewShape::new(
        Partition::new(outer).expect("stacked pieces form a partition"),
        Partition::new(inner).expect("offsets form a partition"),
    )
    .expect("union is a skew shape")
}

/// Pieces of the quotient of the rectangle with `b` rows of length `a * r`
/// taken modulo `a`.
pub fn rectangle_quotient(a: usize, b: usize, r: usize) -> Result<Vec<Partition>> {
    if a == 0 {
        return Err(TableauError::Precondition("a must be positive".into()));
    }
    let extra = b % a;
    Ok((0..a)
        .map(|j| {
            let rows = if j < extra { b.div_ceil(a) } else { b / a };
            Partition::rectangle(r, rows)
        })
        .collect())
}

/// Whether the rectangle with `b` rows of length `a` has empty `r`-core.
pub fn empty_core_rectangle(a: usize, b: usize, r: usize) -> Result<bool> {
    if r == 0 || !(a * b).is_multiple_of(r) {
        return Err(TableauError::Precondition(format!(
            "r = {r} must divide ab = {}",
            a * b
        )));
    }
    Ok(a.is_multiple_of(r) || b.is_multiple_of(r))
}
