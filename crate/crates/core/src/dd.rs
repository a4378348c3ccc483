//! Double description: extreme rays of a pointed cone `{z : Rz >= 0}`.
//!
//! Rays are kept as primitive integer vectors. Constraints are added one at a
//! time; a new ray is formed from each adjacent pair straddling the new
//! hyperplane, with adjacency decided combinatorially from zero sets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rational::Rational;

/// Fixed-width bitset over constraint indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(len: usize) -> Self {
        ZeroSet(vec![0; len.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Extreme rays of `{z : row . z >= 0 for all rows}`.
///
/// # Panics
///
/// If the rows do not have full column rank (the cone is not pointed).
pub fn extreme_rays(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let dim = rows.first().map_or(0, Vec::len);
    if dim == 0 {
        return Vec::new();
    }
    let initial = independent_rows(rows, dim);
    assert_eq!(
        initial.len(),
        dim,
        "constraint rows must have full column rank"
    );

    // rays of the simplicial cone are the columns of the inverse
    let basis: Vec<Vec<Rational>> = initial
        .iter()
        .map(|&r| {
            rows[r]
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    let inverse = invert(&basis);
    let mut rays: Vec<Ray> = (0..dim)
        .map(|c| {
            let col: Vec<Rational> = inverse.iter().map(|row| row[c].clone()).collect();
            let coords = primitive(linalg::integer_row(&col));
            let mut zeros = ZeroSet::empty(rows.len());
            for (pos, &r) in initial.iter().enumerate() {
                if pos != c {
                    zeros.insert(r);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    let mut done: Vec<bool> = vec![false; rows.len()];
    for &r in &initial {
        done[r] = true;
    }
    for (idx, row) in rows.iter().enumerate() {
        if done[idx] {
            continue;
        }
        rays = add_constraint(rays, idx, row, dim);
        done[idx] = true;
    }
    rays.into_iter().map(|r| r.coords).collect()
}

fn add_constraint(rays: Vec<Ray>, idx: usize, row: &[BigInt], dim: usize) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
    let positive: Vec<usize> = (0..rays.len())
        .filter(|&r| values[r].is_positive())
        .collect();
    let negative: Vec<usize> = (0..rays.len())
        .filter(|&r| values[r].is_negative())
        .collect();

    let mut created = Vec::new();
    for &p in &positive {
        for &q in &negative {
            let common = rays[p].zeros.intersect(&rays[q].zeros);
            if common.len() + 2 < dim {
                continue;
            }
            let blocked = rays
                .iter()
                .enumerate()
                .any(|(r, ray)| r != p && r != q && ray.zeros.is_superset_of(&common));
            if blocked {
                continue;
            }
            // values[p] > 0 > values[q]; the combination vanishes on `row`
            let coords: Vec<BigInt> = rays[q]
                .coords
                .iter()
                .zip(&rays[p].coords)
                .map(|(qc, pc)| &values[p] * qc - &values[q] * pc)
                .collect();
            let mut zeros = common;
            zeros.insert(idx);
            created.push(Ray {
                coords: primitive(coords),
                zeros,
            });
        }
    }

    let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
    for (r, mut ray) in rays.into_iter().enumerate() {
        if values[r].is_negative() {
            continue;
        }
        if values[r].is_zero() {
            ray.zeros.insert(idx);
        }
        next.push(ray);
    }
    next.extend(created);
    next
}

fn independent_rows(rows: &[Vec<BigInt>], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current: Vec<Vec<BigInt>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        current.push(row.clone());
        if linalg::rank_integer(&current) == current.len() {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        } else {
            current.pop();
        }
    }
    chosen
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let augmented: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..n).map(|c| Rational::from_integer((r == c).into())));
            v
        })
        .collect();
    let (reduced, pivots) = linalg::rref(&augmented);
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "matrix is singular");
    reduced.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn sorted(mut rays: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        rays.sort();
        rays
    }

    #[test]
    fn square_as_cone() {
        // homogenized unit square: t >= 0, x >= 0, y >= 0, t - x >= 0, t - y >= 0
        let rows = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1]]);
        let rays = sorted(extreme_rays(&rows));
        assert_eq!(
            rays,
            ints(&[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1]])
        );
    }

    #[test]
    fn triangle_with_redundant_row() {
        // x >= 0, y >= 0, 1 - x - y >= 0, 2 - x - y >= 0
        let rows = ints(&[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1], &[2, -1, -1]]);
        let rays = sorted(extreme_rays(&rows));
        assert_eq!(rays, ints(&[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0]]));
    }

    #[test]
    fn octahedron_vertices() {
        // |x| + |y| + |z| <= 1 as 8 inequalities; 6 vertices
        let mut rows = Vec::new();
        for sx in [-1i64, 1] {
            for sy in [-1i64, 1] {
                for sz in [-1i64, 1] {
                    rows.push(vec![1, -sx, -sy, -sz]);
                }
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        let rays = extreme_rays(&ints(&refs));
        assert_eq!(rays.len(), 6);
        assert!(rays.iter().all(|r| r[0] == BigInt::from(1)));
    }
}
