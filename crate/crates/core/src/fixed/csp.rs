use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, TableauError};
use crate::partition::Partition;

use super::search::enumerate_fixed;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CspReport {
    pub n: usize,
    pub k: usize,
    /// Multiplicative order of the evaluation point.
    pub root_order: usize,
    /// Brute-force count of tableaux fixed by `pr^k`.
    pub fixed_count: u64,
    pub poly_value: i64,
    pub residual: f64,
    pub imaginary: f64,
}

impl CspReport {
    pub fn agrees(&self) -> bool {
        self.residual < 1e-6 && self.imaginary.abs() < 1e-6 && self.poly_value == self.fixed_count as i64
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Value of the q-hook formula of the rectangle at the primitive root
/// `exp(2 pi i k / n)` raised appropriately, returned with its distance from
/// the nearest integer.
pub fn q_hook_value(a: usize, b: usize, k: usize) -> Result<(f64, f64)> {
    let n = a * b;
    let order = n / gcd(k % n.max(1), n).max(1);
    let numerator: Vec<usize> = (1..=n).collect();
    let denominator = Partition::rectangle(a, b).hook_lengths();
    let (num_zero, num_rest): (Vec<usize>, Vec<usize>) =
        numerator.iter().partition(|&&m| m % order == 0);
    let (den_zero, den_rest): (Vec<usize>, Vec<usize>) =
        denominator.iter().partition(|&&m| m % order == 0);
    if num_zero.len() > den_zero.len() {
        return Ok((0.0, 0.0));
    }
    if num_zero.len() < den_zero.len() {
        return Err(TableauError::Precondition(format!(
            "pole at the root of order {order}: {} zero factors above, {} below",
            num_zero.len(),
            den_zero.len()
        )));
    }
    let mut num_zero = num_zero;
    let mut den_zero = den_zero;
    num_zero.sort_unstable();
    den_zero.sort_unstable();
    let mut value = Complex64::new(1.0, 0.0);
    for (&top, &bottom) in num_zero.iter().zip(&den_zero) {
        value *= top as f64 / bottom as f64;
    }
    let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
    let factor = |m: usize| Complex64::new(1.0, 0.0) - q.powu(m as u32);
    for &m in &num_rest {
        value *= factor(m);
    }
    for &m in &den_rest {
        value /= factor(m);
    }
    Ok((value.re, value.im))
}

/// Compares the q-hook formula at a root of unity with the number of
/// tableaux fixed by the matching power of promotion.
pub fn csp_evaluate(a: usize, b: usize, k: usize) -> Result<CspReport> {
    let n = a * b;
    if n == 0 {
        return Err(TableauError::Precondition("the rectangle must be nonempty".into()));
    }
    let (re, im) = q_hook_value(a, b, k)?;
    let rounded = re.round();
    let power = gcd(k % n, n);
    let power = if power == 0 { n } else { power };
    let fixed_count = enumerate_fixed(a, b, power)?.len() as u64;
    Ok(CspReport {
        n,
        k,
        root_order: n / power,
        fixed_count,
        poly_value: rounded as i64,
        residual: (re - rounded).abs(),
        imaginary: im,
    })
}
