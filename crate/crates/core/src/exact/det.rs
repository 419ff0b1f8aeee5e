//! Exact determinants by fraction-free (Bareiss) elimination.
//!
//! Rational matrices are scaled row-wise to integers first; row scaling by
//! the (positive) lcm of denominators preserves the determinant's sign and
//! contributes an exactly known positive factor to its value.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::exact::rat::Rat;

/// Exact determinant of a square rational matrix.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let (matrix, scale) = clear_denominators(rows);
    let d = bareiss(matrix);
    Rat::new(d, scale).expect("scale is a product of positive lcms")
}

/// Sign of the determinant of a square rational matrix, in {-1, 0, 1}.
pub fn det_sign(rows: &[Vec<Rat>]) -> i8 {
    let (matrix, _) = clear_denominators(rows);
    let d = bareiss(matrix);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// matrix and the (positive) product of all row scales.
fn clear_denominators(rows: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let matrix = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            scale *= &lcm;
            row.iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect()
        })
        .collect();
    (matrix, scale)
}

/// Fraction-free elimination; every division below is exact.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n), "bareiss needs a square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -d
    } else {
        d
    }
}
