use rayon::prelude::*;

use crate::coreq::quotient;
use crate::counting::{hook_count, multinomial};
use crate::error::{Result, TableauError};
use crate::jdt;
use crate::partition::Partition;
use crate::tableau::{SkewShape, SkewTableau};

use super::enumerate::enumerate_syt;

fn require_divides(d: usize, a: usize, b: usize) -> Result<()> {
    if d == 0 || !(a * b).is_multiple_of(d) {
        return Err(TableauError::Precondition(format!(
            "d = {d} must divide ab = {}",
            a * b
        )));
    }
    Ok(())
}

/// Tableaux of the rectangle with `b` rows of length `a` fixed by `pr^d`,
/// found by applying promotion to every tableau.
pub fn enumerate_fixed(a: usize, b: usize, d: usize) -> Result<Vec<SkewTableau>> {
    require_divides(d, a, b)?;
    let shape = SkewShape::straight(Partition::rectangle(a, b));
    let mut fixed: Vec<SkewTableau> = enumerate_syt(&shape)?
        .par_bridge()
        .filter(|t| jdt::promote_power(t, d).expect("standard input") == *t)
        .collect();
    fixed.sort_by(|x, y| x.rows().cmp(y.rows()));
    Ok(fixed)
}

/// Number of `pr^d`-fixed tableaux of the `b x a` rectangle from its
/// `(ab/d)`-core and quotient.
pub fn count_fixed(a: usize, b: usize, d: usize) -> Result<u64> {
    require_divides(d, a, b)?;
    let rect = Partition::rectangle(a, b);
    let q = quotient(&rect, a * b / d)?;
    if !q.core.is_empty() {
        return Ok(0);
    }
    let sizes: Vec<usize> = q.pieces.iter().map(Partition::size).collect();
    let mut count = multinomial(&sizes)?;
    for piece in &q.pieces {
        count = count
            .checked_mul(hook_count(piece)?)
            .ok_or(TableauError::Overflow("fixed-point count"))?;
    }
    Ok(count)
}

/// The tableau of shape `nu` filled row by row with `1..=n`.
pub fn row_superstandard(nu: &Partition) -> SkewTableau {
    let mut next = 0;
    let rows = nu
        .parts()
        .iter()
        .map(|&len| {
            let row = (next + 1..=next + len as u32).collect();
            next += len as u32;
            row
        })
        .collect();
    SkewTableau::straight(rows).expect("row superstandard filling is standard")
}

/// Number of standard fillings of `outer / inner` rectifying to the row
/// superstandard tableau of shape `nu`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, nu: &Partition) -> Result<u64> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if shape.size() != nu.size() {
        return Err(TableauError::Precondition(format!(
            "|outer| - |inner| = {} differs from |nu| = {}",
            shape.size(),
            nu.size()
        )));
    }
    let target = row_superstandard(nu);
    Ok(enumerate_syt(&shape)?.filter(|s| jdt::rect(s) == target).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fixed_sets() {
        assert_eq!(enumerate_fixed(3, 2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_fixed(2, 2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_fixed(3, 2, 6).unwrap().len(), 5);
        assert!(enumerate_fixed(3, 2, 4).is_err());
        assert_eq!(count_fixed(5, 3, 3).unwrap(), 6);
        assert_eq!(count_fixed(4, 2, 4).unwrap(), 6);
        assert_eq!(enumerate_fixed(4, 2, 4).unwrap().len(), 6);
        assert_eq!(count_fixed(4, 2, 4).unwrap(), enumerate_fixed(4, 2, 4).unwrap().len() as u64);
    }

    #[test]
    fn lr_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(lr_coefficient(&p(&[3, 2]), &Partition::empty(), &p(&[3, 2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 2);
        assert!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])).is_err());
    }
}
