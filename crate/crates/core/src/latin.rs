//! Latin squares and permutation tensors.
//!
//! A Latin square `L` of order `n` selects one height `i = L(j, k)` per cell;
//! its permutation tensor has a 1 at every `(L(j, k), j, k)` and 0 elsewhere.

use std::fmt;
use std::ops::ControlFlow;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::stochastic::is_stochastic;
use crate::tensor::Tensor3;

pub const DEFAULT_LATIN_CAP: usize = 5;

/// Largest order the bitmask search supports.
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    n: usize,
    // row-major, 0-based symbols
    cells: Vec<usize>,
}

impl LatinSquare {
    /// Builds a square from rows of 1-based symbols.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidLatinSquare(format!(
                "expected a non-empty square array, got {n} rows"
            )));
        }
        if let Some(bad) = rows.iter().flatten().find(|&&s| s == 0 || s > n) {
            return Err(Error::InvalidLatinSquare(format!(
                "symbol {bad} outside 1..={n}"
            )));
        }
        Self::from_cells(n, rows.iter().flatten().map(|s| s - 1).collect())
    }

    /// Builds a square from row-major 0-based symbols.
    pub fn from_cells(n: usize, cells: Vec<usize>) -> Result<Self> {
        if n == 0 || cells.len() != n * n {
            return Err(Error::InvalidLatinSquare(format!(
                "expected {} cells, found {}",
                n * n,
                cells.len()
            )));
        }
        let sq = LatinSquare { n, cells };
        sq.validate()?;
        Ok(sq)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                for (seen, s, what) in [
                    (&mut row_seen, self.cells[a * n + b], "row"),
                    (&mut col_seen, self.cells[b * n + a], "column"),
                ] {
                    if s >= n || std::mem::replace(&mut seen[s], true) {
                        return Err(Error::InvalidLatinSquare(format!(
                            "{what} {} is not a permutation of 1..={n}",
                            a + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The cyclic square `L(j, k) = (j + k) mod n`.
    pub fn cyclic(n: usize) -> Self {
        LatinSquare {
            n,
            cells: (0..n * n).map(|c| (c / n + c % n) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based symbol at cell `(j, k)`.
    pub fn get(&self, j: usize, k: usize) -> usize {
        self.cells[j * self.n + k]
    }

    /// Row-major 0-based symbols.
    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Rows of 1-based symbols.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.n)
            .map(|r| r.iter().map(|s| s + 1).collect())
            .collect()
    }

    /// Selected positions `(i, j, k)`, 0-based, in row-major cell order.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        self.cells
            .iter()
            .enumerate()
            .map(move |(c, &i)| (i, c / n, c % n))
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn latin_to_tensor(l: &LatinSquare) -> Tensor3 {
    let mut t = Tensor3::zeros(l.n());
    for (i, j, k) in l.positions() {
        t.set(i, j, k, Rational::one());
    }
    t
}

fn is_zero_one(t: &Tensor3) -> bool {
    t.entries().iter().all(|v| v.is_zero() || v.is_one())
}

/// A 0/1 stochastic tensor.
pub fn is_permutation_tensor(t: &Tensor3) -> bool {
    is_zero_one(t) && is_stochastic(t)
}

pub fn tensor_to_latin(p: &Tensor3) -> Result<LatinSquare> {
    if !is_zero_one(p) {
        return Err(Error::NotPermutationTensor(
            "entries are not all 0 or 1".into(),
        ));
    }
    if !is_stochastic(p) {
        return Err(Error::NotPermutationTensor("not stochastic".into()));
    }
    let n = p.n();
    let cells = (0..n * n)
        .map(|c| {
            (0..n)
                .find(|&i| p.get(i, c / n, c % n).is_one())
                .expect("stochastic 0/1 line has a unit entry")
        })
        .collect();
    LatinSquare::from_cells(n, cells)
}

/// Depth-first search over selectors `L(j, k) = i` restricted to
/// `allowed[j*n + k]` (a bitmask of permitted heights). Cells are filled in
/// row-major order and heights tried in increasing order, so selectors reach
/// `visit` in lexicographic order.
pub(crate) fn search_selectors(
    n: usize,
    allowed: &[u64],
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    assert!(
        (1..=MAX_SEARCH_ORDER).contains(&n),
        "selector search supports 1 <= n <= {MAX_SEARCH_ORDER}"
    );
    assert_eq!(allowed.len(), n * n);
    let mut state = Search {
        n,
        allowed,
        row_used: vec![0; n],
        col_used: vec![0; n],
        cells: vec![0; n * n],
    };
    let _ = state.descend(0, &mut visit);
}

struct Search<'a> {
    n: usize,
    allowed: &'a [u64],
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    cells: Vec<usize>,
}

impl Search<'_> {
    fn candidates(&self, j: usize, k: usize) -> u64 {
        self.allowed[j * self.n + k] & !self.row_used[j] & !self.col_used[k]
    }

    /// Every unfilled cell sharing a row or column with `(j, k)` still has a
    /// candidate.
    fn consistent_after(&self, j: usize, k: usize) -> bool {
        (k + 1..self.n).all(|kk| self.candidates(j, kk) != 0)
            && (j + 1..self.n).all(|jj| self.candidates(jj, k) != 0)
    }

    fn descend(
        &mut self,
        cell: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if cell == self.n * self.n {
            return visit(&self.cells);
        }
        let (j, k) = (cell / self.n, cell % self.n);
        let mut cand = self.candidates(j, k);
        while cand != 0 {
            let s = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let bit = 1u64 << s;
            self.row_used[j] |= bit;
            self.col_used[k] |= bit;
            self.cells[cell] = s;
            let flow = if self.consistent_after(j, k) {
                self.descend(cell + 1, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.row_used[j] &= !bit;
            self.col_used[k] &= !bit;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All Latin squares of order `n` in lexicographic order of their row-major
/// cells, with the default cap of 5.
pub fn enumerate_latin_squares(n: usize) -> Result<Vec<LatinSquare>> {
    enumerate_latin_squares_capped(n, DEFAULT_LATIN_CAP)
}

pub fn enumerate_latin_squares_capped(n: usize, cap: usize) -> Result<Vec<LatinSquare>> {
    if n > cap || n > MAX_SEARCH_ORDER {
        return Err(Error::CapExceeded {
            n,
            cap: cap.min(MAX_SEARCH_ORDER),
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange("order must be positive".into()));
    }
    let allowed = vec![full_mask(n); n * n];
    let mut out = Vec::new();
    search_selectors(n, &allowed, |cells| {
        out.push(LatinSquare {
            n,
            cells: cells.to_vec(),
        });
        ControlFlow::Continue(())
    });
    Ok(out)
}
