//! Exact rank and row reduction.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, Rational};

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let d = common_denominator(row);
    row.iter()
        .map(|v| (v * Rational::from_integer(d.clone())).to_integer())
        .collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_integer(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                for v in &mut row[col + 1..cols] {
                    // exact by Sylvester's identity
                    *v = &*v * &pivot_row[col] / &prev;
                }
                continue;
            }
            let factor = row[col].clone();
            for c in col + 1..cols {
                row[c] = (&row[c] * &pivot_row[col] - &factor * &pivot_row[c]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = head[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    rank_integer(&ints)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *v -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}
