//! Positive diagonals.
//!
//! A diagonal of an `n x n x n` cube is `n^2` entries with no two on a common
//! line, which is the same thing as a Latin-square selector `L(j, k) = i`.
//! "Positive" is strict and exact: every selected entry is `> 0`.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::latin::{
    enumerate_latin_squares_capped, search_selectors, LatinSquare, MAX_SEARCH_ORDER,
};
use crate::rational::{is_positive, Rational};
use crate::stochastic::is_stochastic;
use crate::tensor::Tensor3;

pub const DEFAULT_DIAGONAL_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalWitness {
    pub square: LatinSquare,
}

impl DiagonalWitness {
    pub fn new(square: LatinSquare) -> Self {
        DiagonalWitness { square }
    }

    /// The selected entries as `(i, j, k, value)`, 0-based.
    pub fn selected<'a>(
        &'a self,
        t: &'a Tensor3,
    ) -> impl Iterator<Item = (usize, usize, usize, &'a Rational)> + 'a {
        self.square
            .positions()
            .map(move |(i, j, k)| (i, j, k, t.get(i, j, k)))
    }
}

pub fn is_positive_diagonal(t: &Tensor3, w: &DiagonalWitness) -> Result<bool> {
    if t.n() != w.square.n() {
        return Err(Error::Dimension {
            expected: t.n(),
            found: w.square.n(),
        });
    }
    Ok(w.selected(t).all(|(_, _, _, v)| is_positive(v)))
}

/// Per cell `(j, k)`, the heights `i` with a positive entry.
fn support_masks(t: &Tensor3) -> Vec<u64> {
    let n = t.n();
    (0..n * n)
        .map(|c| {
            (0..n)
                .filter(|&i| is_positive(t.get(i, c / n, c % n)))
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect()
}

/// The lexicographically least positive diagonal, if any.
///
/// # Panics
///
/// If `n` exceeds [`MAX_SEARCH_ORDER`].
pub fn find_positive_diagonal(t: &Tensor3) -> Option<DiagonalWitness> {
    let n = t.n();
    assert!(
        n <= MAX_SEARCH_ORDER,
        "diagonal search supports n <= {MAX_SEARCH_ORDER}"
    );
    let masks = support_masks(t);
    if masks.contains(&0) {
        return None;
    }
    let mut found = None;
    search_selectors(n, &masks, |cells| {
        found = Some(cells.to_vec());
        ControlFlow::Break(())
    });
    found.map(|cells| {
        DiagonalWitness::new(
            LatinSquare::from_cells(n, cells).expect("search yields Latin squares"),
        )
    })
}

/// Every positive diagonal, by filtering the full Latin-square enumeration.
pub fn enumerate_positive_diagonals(t: &Tensor3) -> Result<Vec<DiagonalWitness>> {
    enumerate_positive_diagonals_capped(t, DEFAULT_DIAGONAL_CAP)
}

pub fn enumerate_positive_diagonals_capped(
    t: &Tensor3,
    cap: usize,
) -> Result<Vec<DiagonalWitness>> {
    Ok(enumerate_latin_squares_capped(t.n(), cap)?
        .into_iter()
        .map(DiagonalWitness::new)
        .filter(|w| w.selected(t).all(|(_, _, _, v)| is_positive(v)))
        .collect())
}

/// Stochastic with a positive diagonal.
pub fn in_l(t: &Tensor3) -> bool {
    is_stochastic(t) && find_positive_diagonal(t).is_some()
}
