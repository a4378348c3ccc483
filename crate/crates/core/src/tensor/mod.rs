//! Order-3 cubes of exact rationals.
//!
//! Storage order is k outer, i middle, j inner: entry `(i, j, k)` lives at
//! offset `k*n*n + i*n + j`. This is the reading order of [`FlatSlices`] and
//! the variable order of [`crate::ConstraintSystem`].

mod io;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};

pub use io::Format;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Dense square matrix, row-major.
pub type Matrix = Vec<Vec<Rational>>;

/// One of the three index positions of a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    I,
    J,
    K,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::I, Mode::J, Mode::K];
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::I => "i",
            Mode::J => "j",
            Mode::K => "k",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    /// Builds a cube from `n^3` entries in storage order (k outer, i, j inner).
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("side length must be positive".into()));
        }
        let expected = n * n * n;
        if entries.len() != expected {
            return Err(Error::Dimension {
                expected,
                found: entries.len(),
            });
        }
        Ok(Tensor3 { n, data: entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        assert!(n > 0, "side length must be positive");
        let mut data = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _, _| Rational::zero())
    }

    /// The tensor with every entry `1/n`.
    pub fn uniform(n: usize) -> Self {
        let v = Rational::new(1.into(), n.into());
        Self::from_fn(n, |_, _, _| v.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries in storage order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    #[inline]
    pub fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (k * self.n + i) * self.n + j
    }

    /// Inverse of [`Tensor3::offset`].
    pub fn coords(&self, offset: usize) -> (usize, usize, usize) {
        let n = self.n;
        (offset / n % n, offset % n, offset / (n * n))
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let at = self.offset(i, j, k);
        self.data[at] = value;
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.n })
        }
    }

    fn check_same_n(&self, other: &Tensor3) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// The 2-D section with `mode` fixed at `index`. Rows and columns are the
    /// two remaining indices in increasing mode order, so fixing `k` gives rows
    /// `i` and columns `j`.
    pub fn slice(&self, mode: Mode, index: usize) -> Result<Matrix> {
        self.check_index(index)?;
        let n = self.n;
        let at = |r: usize, c: usize| match mode {
            Mode::I => self.get(index, r, c),
            Mode::J => self.get(r, index, c),
            Mode::K => self.get(r, c, index),
        };
        Ok((0..n)
            .map(|r| (0..n).map(|c| at(r, c).clone()).collect())
            .collect())
    }

    /// The fiber along `mode`; `fixed` holds the other two indices in
    /// increasing mode order (e.g. `(j, k)` for a mode-i line).
    pub fn line(&self, mode: Mode, fixed: (usize, usize)) -> Result<Vec<Rational>> {
        self.check_index(fixed.0)?;
        self.check_index(fixed.1)?;
        Ok(self.line_unchecked(mode, fixed))
    }

    fn line_unchecked(&self, mode: Mode, (a, b): (usize, usize)) -> Vec<Rational> {
        (0..self.n)
            .map(|t| {
                match mode {
                    Mode::I => self.get(t, a, b),
                    Mode::J => self.get(a, t, b),
                    Mode::K => self.get(a, b, t),
                }
                .clone()
            })
            .collect()
    }

    /// Every line of the cube, in line-vec order: mode-i lines over `(j, k)`,
    /// then mode-j over `(i, k)`, then mode-k over `(i, j)`, each group with
    /// the first fixed index outer.
    pub fn lines(&self) -> impl Iterator<Item = (Mode, (usize, usize), Vec<Rational>)> + '_ {
        let n = self.n;
        Mode::ALL.into_iter().flat_map(move |mode| {
            (0..n).flat_map(move |a| {
                (0..n).map(move |b| (mode, (a, b), self.line_unchecked(mode, (a, b))))
            })
        })
    }

    /// Stacks all `3n^2` lines into one vector of length `3n^3`.
    pub fn vec_lines(&self) -> LineVec {
        LineVec {
            n: self.n,
            values: self.lines().flat_map(|(_, _, line)| line).collect(),
        }
    }

    /// Entrywise inner product.
    pub fn inner(&self, other: &Tensor3) -> Result<Rational> {
        self.check_same_n(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, alpha: &Rational) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(|v| v * alpha).collect(),
        }
    }

    pub fn checked_add(&self, other: &Tensor3) -> Result<Tensor3> {
        self.check_same_n(other)?;
        Ok(Tensor3 {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Tensor3) -> Result<Tensor3> {
        self.check_same_n(other)?;
        Ok(Tensor3 {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `sum_t weights[t] * tensors[t]`; all tensors must share `n`.
    pub fn linear_combination<'a>(
        terms: impl IntoIterator<Item = (&'a Rational, &'a Tensor3)>,
        n: usize,
    ) -> Result<Tensor3> {
        let mut acc = Tensor3::zeros(n);
        for (w, t) in terms {
            acc.check_same_n(t)?;
            for (a, b) in acc.data.iter_mut().zip(&t.data) {
                *a += w * b;
            }
        }
        Ok(acc)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|v| !v.is_negative())
    }

    /// Offsets of the zero entries, ascending.
    pub fn zero_offsets(&self) -> Vec<usize> {
        (0..self.data.len())
            .filter(|&o| self.data[o].is_zero())
            .collect()
    }

    pub fn flatten(&self) -> FlatSlices {
        FlatSlices {
            n: self.n,
            blocks: (0..self.n)
                .map(|k| self.slice(Mode::K, k).expect("index in range"))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Tensor3> {
        io::parse_tensor(text)
    }

    pub fn parse_as(text: &str, format: Format) -> Result<Tensor3> {
        io::parse_tensor_as(text, format)
    }

    pub fn serialize(&self, format: Format) -> String {
        io::serialize_tensor(self, format)
    }

    /// Single-line JSON form.
    pub fn to_compact_json(&self) -> String {
        io::compact_json(self)
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;

    fn add(self, rhs: &Tensor3) -> Tensor3 {
        self.checked_add(rhs).expect("tensor side lengths differ")
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;

    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        self.checked_sub(rhs).expect("tensor side lengths differ")
    }
}

impl Mul<&Tensor3> for &Rational {
    type Output = Tensor3;

    fn mul(self, rhs: &Tensor3) -> Tensor3 {
        rhs.scale(self)
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::serialize_tensor(self, Format::Text))
    }
}

/// The line-vectorization of a cube: `3n^2` lines of `n` entries each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineVec {
    n: usize,
    values: Vec<Rational>,
}

impl LineVec {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = 3 * n * n * n;
        if values.len() != expected {
            return Err(Error::Dimension {
                expected,
                found: values.len(),
            });
        }
        Ok(LineVec { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The `3n^2` consecutive blocks of length `n`, one per line.
    pub fn blocks(&self) -> std::slice::Chunks<'_, Rational> {
        self.values.chunks(self.n)
    }

    /// `(I_m ⊗ e_n) v` with `m = 3n^2`: the sum of every line.
    pub fn block_sums(&self) -> Vec<Rational> {
        self.blocks()
            .map(|b| b.iter().fold(Rational::zero(), |acc, v| acc + v))
            .collect()
    }

    pub fn dot(&self, other: &LineVec) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Recovers the cube from its mode-i group; the other two groups must agree.
    pub fn to_tensor(&self) -> Result<Tensor3> {
        let n = self.n;
        let mut t = Tensor3::zeros(n);
        for (idx, v) in self.values[..n * n * n].iter().enumerate() {
            let (j, k, i) = (idx / (n * n), idx / n % n, idx % n);
            t.set(i, j, k, v.clone());
        }
        if t.vec_lines() != *self {
            return Err(Error::Malformed(
                "line groups disagree; not the line-vec of any cube".into(),
            ));
        }
        Ok(t)
    }

    pub fn scale(&self, alpha: &Rational) -> LineVec {
        LineVec {
            n: self.n,
            values: self.values.iter().map(|v| v * alpha).collect(),
        }
    }
}

impl Add for &LineVec {
    type Output = LineVec;

    fn add(self, rhs: &LineVec) -> LineVec {
        assert_eq!(self.n, rhs.n, "line-vec sizes differ");
        LineVec {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// The cube laid out as `n` blocks side by side: block `k` is the slice at
/// third index `k`, with rows indexed by `i` and columns by `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlatSlices {
    pub n: usize,
    pub blocks: Vec<Matrix>,
}

impl FlatSlices {
    pub fn unflatten(&self) -> Result<Tensor3> {
        let n = self.n;
        if n == 0 {
            return Err(Error::Malformed("side length must be positive".into()));
        }
        if self.blocks.len() != n {
            return Err(Error::Malformed(format!(
                "expected {n} blocks, found {}",
                self.blocks.len()
            )));
        }
        let mut data = Vec::with_capacity(n * n * n);
        for (k, block) in self.blocks.iter().enumerate() {
            if block.len() != n || block.iter().any(|row| row.len() != n) {
                return Err(Error::Malformed(format!("block {} is not {n}x{n}", k + 1)));
            }
            data.extend(block.iter().flatten().cloned());
        }
        Tensor3::new(n, data)
    }

    /// The blocks joined horizontally into an `n x n^2` matrix.
    pub fn as_wide_matrix(&self) -> Matrix {
        (0..self.n)
            .map(|r| {
                self.blocks
                    .iter()
                    .flat_map(|b| b[r].iter().cloned())
                    .collect()
            })
            .collect()
    }
}

/// Convenience for tests and fixtures: a cube from its flattened wide
/// matrix given as integers, all divided by `den`.
pub fn from_wide_integers(n: usize, rows: &[&[i64]], den: i64) -> Result<Tensor3> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n * n) {
        return Err(Error::Malformed(format!(
            "expected {n} rows of {} values",
            n * n
        )));
    }
    let d = int(den);
    Ok(Tensor3::from_fn(n, |i, j, k| int(rows[i][k * n + j]) / &d))
}
