//! Seeded random members of the polytopes, as exact convex combinations.

use num_traits::Zero;
use rand::Rng;

use crate::error::Result;
use crate::latin::{enumerate_latin_squares, latin_to_tensor};
use crate::polytope::enumerate_vertices;
use crate::rational::Rational;
use crate::tensor::Tensor3;

/// Integer weights are drawn from `0..=MAX_WEIGHT` and normalized.
const MAX_WEIGHT: u32 = 9;

/// A random convex combination of `points` with rational weights; at least
/// one weight is positive.
pub fn random_convex_combination<R: Rng + ?Sized>(points: &[Tensor3], rng: &mut R) -> Tensor3 {
    assert!(!points.is_empty(), "no points to combine");
    let n = points[0].n();
    let mut raw: Vec<u32> = points
        .iter()
        .map(|_| rng.random_range(0..=MAX_WEIGHT))
        .collect();
    if raw.iter().all(|&w| w == 0) {
        let pick = rng.random_range(0..raw.len());
        raw[pick] = 1;
    }
    let total: u32 = raw.iter().sum();
    let weights: Vec<Rational> = raw
        .iter()
        .map(|&w| Rational::new(w.into(), total.into()))
        .collect();
    Tensor3::linear_combination(weights.iter().zip(points).filter(|(w, _)| !w.is_zero()), n)
        .expect("points share a side length")
}

/// Random member of the stochastic polytope, mixing its enumerated vertices
/// (so `n <= 3`).
pub fn sample_omega<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tensor3> {
    let vertices = enumerate_vertices(n)?.vertices;
    Ok(random_convex_combination(&vertices, rng))
}

/// Random member of the permutation-tensor polytope (`n <= 5`).
pub fn sample_delta<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tensor3> {
    let points: Vec<Tensor3> = enumerate_latin_squares(n)?
        .iter()
        .map(latin_to_tensor)
        .collect();
    Ok(random_convex_combination(&points, rng))
}
