//! Exact counting through prime factorizations, so intermediate values never
//! exceed the final result.

use crate::error::{Result, TableauError};
use crate::partition::Partition;

fn add_factorization(exponents: &mut Vec<i64>, mut x: usize, sign: i64) {
    let mut p = 2;
    while x > 1 {
        if p * p > x {
            p = x;
        }
        while x.is_multiple_of(p) {
            if exponents.len() <= p {
                exponents.resize(p + 1, 0);
            }
            exponents[p] += sign;
            x /= p;
        }
        p += 1;
    }
}

fn evaluate(exponents: &[i64], what: &'static str) -> Result<u64> {
    let mut value: u64 = 1;
    for (p, &e) in exponents.iter().enumerate() {
        if e < 0 {
            return Err(TableauError::Precondition(format!(
                "{what} is not an integer"
            )));
        }
        for _ in 0..e {
            value = value
                .checked_mul(p as u64)
                .ok_or(TableauError::Overflow(what))?;
        }
    }
    Ok(value)
}

/// `numerator! / prod(denominators)` for an exact quotient.
fn factorial_quotient(numerator: usize, denominators: &[usize], what: &'static str) -> Result<u64> {
    let mut exponents = Vec::new();
    for i in 2..=numerator {
        add_factorization(&mut exponents, i, 1);
    }
    for &d in denominators {
        add_factorization(&mut exponents, d, -1);
    }
    evaluate(&exponents, what)
}

/// Number of standard Young tableaux of shape `p`.
pub fn hook_count(p: &Partition) -> Result<u64> {
    factorial_quotient(p.size(), &p.hook_lengths(), "hook length count")
}

pub fn multinomial(parts: &[usize]) -> Result<u64> {
    let total: usize = parts.iter().sum();
    let denominators: Vec<usize> = parts.iter().flat_map(|&k| 2..=k).collect();
    factorial_quotient(total, &denominators, "multinomial coefficient")
}

pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    multinomial(&[k, n - k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(hook_count(&p(&[2, 2])).unwrap(), 2);
        assert_eq!(hook_count(&p(&[3, 3])).unwrap(), 5);
        assert_eq!(hook_count(&p(&[7])).unwrap(), 1);
        assert_eq!(hook_count(&Partition::empty()).unwrap(), 1);
        assert_eq!(hook_count(&p(&[4, 4, 4, 4])).unwrap(), 24024);
        assert_eq!(multinomial(&[2, 2, 2]).unwrap(), 90);
        assert_eq!(binomial(9, 4).unwrap(), 126);
        assert_eq!(binomial(2, 3).unwrap(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            multinomial(&[1; 30]),
            Err(TableauError::Overflow(_))
        ));
        assert_eq!(multinomial(&[1; 20]).unwrap(), 2_432_902_008_176_640_000);
    }
}
