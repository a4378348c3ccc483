//! Test-only oracles. Nothing here calls into the production algorithms it
//! is used to check.

#![allow(dead_code)]

pub mod active_set;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stochastic_tensors::rational::{int, ratio};
use stochastic_tensors::{Rational, Tensor3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All permutations of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|v| if v >= first { v + 1 } else { v }));
            out.push(p);
        }
    }
    out
}

/// Latin squares of order `n` by trying every tuple of permutation rows and
/// keeping those whose columns are permutations. Row-major cells, 0-based.
pub fn naive_latin_squares(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let ok = (0..n).all(|c| {
            let mut seen = vec![false; n];
            idx.iter()
                .all(|&r| !std::mem::replace(&mut seen[perms[r][c]], true))
        });
        if ok {
            out.push(idx.iter().flat_map(|&r| perms[r].clone()).collect());
        }
        // odometer, last row fastest
        for pos in (0..n).rev() {
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    out
}

/// Row `p` of Pascal's triangle.
pub fn pascal_row(p: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..p {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for t in 1..row.len() {
            next[t] = &row[t - 1] + &row[t];
        }
        row = next;
    }
    row
}

pub fn upper_bound_oracle(n: u64) -> Rational {
    let m = (n * n * n) as usize;
    let p = (n * n * n + 6 * n * n + 2 - 6 * n) as usize;
    let c = pascal_row(p)[m - 1].clone();
    Rational::new(BigInt::from(c), BigInt::from(m))
}

pub fn lower_bound_oracle(n: u64) -> Rational {
    let fact: u128 = (1..=n as u128).product();
    let mut num = BigInt::one();
    for _ in 0..2 * n {
        num *= BigInt::from(fact);
    }
    let mut den = BigInt::one();
    for _ in 0..n * n {
        den *= BigInt::from(n);
    }
    Rational::new(num, den)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.random_range(1..=6i64);
    ratio(rng.random_range(0..=2 * den), den)
}

/// Arbitrary nonnegative tensor with small rational entries.
pub fn random_nonnegative<R: Rng>(n: usize, rng: &mut R) -> Tensor3 {
    Tensor3::from_fn(n, |_, _, _| small_rational(rng))
}

/// Random tensor with signed entries.
pub fn random_signed<R: Rng>(n: usize, rng: &mut R) -> Tensor3 {
    Tensor3::from_fn(n, |_, _, _| small_rational(rng) - int(1))
}

/// A stochastic tensor built without the crate's samplers: a random mixture
/// of cyclic-shift permutation tensors `(i, j, k) -> i == (a*j + b*k + c) mod n`
/// style squares, here the shifts `L(j,k) = (sigma(j) + tau(k)) mod n`.
pub fn random_stochastic<R: Rng>(n: usize, rng: &mut R) -> Tensor3 {
    let perms = permutations(n);
    let terms = rng.random_range(1..=4);
    let mut weights = Vec::new();
    let mut squares = Vec::new();
    for _ in 0..terms {
        let s = &perms[rng.random_range(0..perms.len())];
        let t = &perms[rng.random_range(0..perms.len())];
        squares.push((s.clone(), t.clone()));
        weights.push(rng.random_range(1..=5i64));
    }
    let total: i64 = weights.iter().sum();
    Tensor3::from_fn(n, |i, j, k| {
        squares
            .iter()
            .zip(&weights)
            .filter(|((s, t), _)| (s[j] + t[k]) % n == i)
            .map(|(_, &w)| ratio(w, total))
            .sum()
    })
}

/// Near-misses around a stochastic tensor: one entry nudged, or a signed
/// 2x2x2 cycle that keeps every line sum but may push an entry below zero.
pub fn near_miss<R: Rng>(base: &Tensor3, rng: &mut R) -> Tensor3 {
    let n = base.n();
    let mut t = base.clone();
    let eps = ratio(1, rng.random_range(2..=1000));
    if n < 2 || rng.random_bool(0.5) {
        let (i, j, k) = (
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        );
        let v = if rng.random_bool(0.5) {
            t.get(i, j, k) + &eps
        } else {
            t.get(i, j, k) - &eps
        };
        t.set(i, j, k, v);
        return t;
    }
    let pick2 = |rng: &mut R| {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        [a, b]
    };
    let (is, js, ks) = (pick2(rng), pick2(rng), pick2(rng));
    // make the cycle large enough to break nonnegativity somewhere
    let delta = t.entries().iter().max().unwrap() + &eps;
    for (a, &i) in is.iter().enumerate() {
        for (b, &j) in js.iter().enumerate() {
            for (c, &k) in ks.iter().enumerate() {
                let v = if (a + b + c) % 2 == 0 {
                    t.get(i, j, k) + &delta
                } else {
                    t.get(i, j, k) - &delta
                };
                t.set(i, j, k, v);
            }
        }
    }
    t
}
