//! Stochasticity checks and the H-representation of the stochastic polytope.

use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{format_rational, Rational};
use crate::tensor::{Matrix, Mode, Tensor3};

/// Nonnegative entries and every one of the `3n^2` line sums equal to 1.
pub fn is_stochastic(t: &Tensor3) -> bool {
    t.is_nonnegative()
        && t.lines()
            .all(|(_, _, line)| line.iter().sum::<Rational>().is_one())
}

/// Stochasticity through the line-vec: nonnegative and every consecutive
/// block of `n` entries of the line-vec sums to 1.
pub fn check_vec_characterization(t: &Tensor3) -> bool {
    t.is_nonnegative() && t.vec_lines().block_sums().iter().all(One::is_one)
}

fn vec_rows(s: &Matrix) -> Vec<Rational> {
    s.iter().flatten().cloned().collect()
}

fn vec_cols(s: &Matrix) -> Vec<Rational> {
    let cols = s.first().map_or(0, Vec::len);
    (0..cols)
        .flat_map(|c| s.iter().map(move |row| row[c].clone()))
        .collect()
}

/// `(I_n ⊗ e_n) v`: sums of consecutive length-`n` blocks.
fn kron_ones(v: &[Rational], n: usize) -> Vec<Rational> {
    v.chunks(n).map(|b| b.iter().sum()).collect()
}

/// Doubly-stochastic test for a square matrix via its row- and column-vecs.
pub fn matrix_vec_check(s: &Matrix) -> bool {
    let n = s.len();
    if n == 0 || s.iter().any(|row| row.len() != n) {
        return false;
    }
    if s.iter().flatten().any(Signed::is_negative) {
        return false;
    }
    let all_one = |sums: Vec<Rational>| sums.len() == n && sums.iter().all(One::is_one);
    all_one(kron_ones(&vec_rows(s), n)) && all_one(kron_ones(&vec_cols(s), n))
}

/// The line-sum equalities `Ax = u` together with `x >= 0`.
///
/// Variables are the tensor entries in storage order (k outer, i middle,
/// j inner), so `x` is exactly [`Tensor3::entries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n: usize,
    pub equality_matrix: Vec<Vec<Rational>>,
    pub equality_rhs: Vec<Rational>,
    pub nonneg_count: usize,
    pub reduced: bool,
    /// The line behind each equality row: mode and the two fixed indices.
    pub labels: Vec<(Mode, (usize, usize))>,
}

/// Builds the line-sum system. The reduced form keeps mode-i lines for all
/// `(j, k)`, mode-j lines for `i < n-1` (all `k`) and mode-k lines for
/// `i, j < n-1`: `2n - 1` lines inside each slice `k` plus `(n-1)^2` lines
/// across slices, `3n^2 - 3n + 1` independent rows in all. The full form
/// keeps all `3n^2`.
pub fn constraint_system(n: usize, reduced: bool) -> ConstraintSystem {
    assert!(n > 0, "side length must be positive");
    let shape = Tensor3::zeros(n);
    let keep = |mode: Mode, (a, b): (usize, usize)| {
        !reduced
            || match mode {
                Mode::I => true,
                Mode::J => a + 1 < n,
                Mode::K => a + 1 < n && b + 1 < n,
            }
    };
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for mode in Mode::ALL {
        for a in 0..n {
            for b in 0..n {
                if !keep(mode, (a, b)) {
                    continue;
                }
                let mut row = vec![Rational::zero(); n * n * n];
                for t in 0..n {
                    let (i, j, k) = match mode {
                        Mode::I => (t, a, b),
                        Mode::J => (a, t, b),
                        Mode::K => (a, b, t),
                    };
                    row[shape.offset(i, j, k)] = Rational::one();
                }
                rows.push(row);
                labels.push((mode, (a, b)));
            }
        }
    }
    ConstraintSystem {
        n,
        equality_rhs: vec![Rational::one(); rows.len()],
        equality_matrix: rows,
        nonneg_count: n * n * n,
        reduced,
        labels,
    }
}

impl ConstraintSystem {
    pub fn equality_count(&self) -> usize {
        self.equality_matrix.len()
    }

    pub fn variable_count(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn equality_rank(&self) -> usize {
        linalg::rank(&self.equality_matrix)
    }

    /// Text H-representation. One row per functional: a relation token
    /// (`=` or `>=`), the `n^3` coefficients, then the right-hand side.
    pub fn to_h_representation(&self) -> String {
        let m = self.variable_count();
        let mut out = String::new();
        writeln!(out, "# stochastic tensor polytope, n = {}", self.n).unwrap();
        writeln!(
            out,
            "# variables x(i,j,k) ordered k outer, i middle, j inner"
        )
        .unwrap();
        writeln!(out, "# row: relation coefficients... rhs").unwrap();
        writeln!(out, "H-representation").unwrap();
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "reduced {}", self.reduced).unwrap();
        writeln!(out, "variables {m}").unwrap();
        writeln!(out, "equalities {}", self.equality_count()).unwrap();
        writeln!(out, "inequalities {}", self.nonneg_count).unwrap();
        writeln!(out, "begin").unwrap();
        for (row, rhs) in self.equality_matrix.iter().zip(&self.equality_rhs) {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(out, "= {} {}", cells.join(" "), format_rational(rhs)).unwrap();
        }
        for v in 0..self.nonneg_count {
            let cells: Vec<&str> = (0..m).map(|c| if c == v { "1" } else { "0" }).collect();
            writeln!(out, ">= {} 0", cells.join(" ")).unwrap();
        }
        writeln!(out, "end").unwrap();
        out
    }
}

/// Whether `t` satisfies every equality and nonnegativity row of `system`.
pub fn satisfies(t: &Tensor3, system: &ConstraintSystem) -> Result<bool> {
    if t.n() != system.n {
        return Err(Error::Dimension {
            expected: system.n,
            found: t.n(),
        });
    }
    let x = t.entries();
    let equalities_hold =
        system
            .equality_matrix
            .iter()
            .zip(&system.equality_rhs)
            .all(|(row, rhs)| {
                row.iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, v)| a * v)
                    .sum::<Rational>()
                    == *rhs
            });
    Ok(equalities_hold && t.is_nonnegative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_e, example_f};
    use crate::rational::{int, ratio};

    #[test]
    fn examples_are_stochastic() {
        assert!(is_stochastic(&example_e()));
        assert!(is_stochastic(&example_f()));
        assert!(check_vec_characterization(&example_e()));
        assert!(check_vec_characterization(&example_f()));
        let mut broken = example_e();
        broken.set(0, 1, 0, int(0));
        assert!(!is_stochastic(&broken));
        assert!(!check_vec_characterization(&broken));
    }

    #[test]
    fn uniform_passes_vec_check() {
        for n in 1..=5 {
            assert!(check_vec_characterization(&Tensor3::uniform(n)));
        }
    }

    #[test]
    fn negative_entry_with_unit_line_sums() {
        // uniform n=3 plus a +-1/2 alternating 2x2x2 pattern keeps every line sum
        let mut t = Tensor3::uniform(3);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let sign = if (i + j + k) % 2 == 0 { 1 } else { -1 };
                    let v = t.get(i, j, k) + ratio(sign, 2);
                    t.set(i, j, k, v);
                }
            }
        }
        assert!(t
            .lines()
            .all(|(_, _, l)| l.iter().sum::<Rational>() == int(1)));
        assert!(!check_vec_characterization(&t));
        assert!(!is_stochastic(&t));
    }

    #[test]
    fn matrix_checks() {
        let e = example_e();
        for mode in Mode::ALL {
            for idx in 0..3 {
                assert!(matrix_vec_check(&e.slice(mode, idx).unwrap()));
            }
        }
        let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert!(matrix_vec_check(&id));
        let bad = vec![vec![int(1), int(1)], vec![int(0), int(0)]];
        assert!(!matrix_vec_check(&bad));
        assert!(!matrix_vec_check(&vec![vec![int(1), int(0)]]));
    }

    #[test]
    fn row_counts() {
        assert_eq!(constraint_system(1, true).equality_count(), 1);
        assert_eq!(constraint_system(2, true).equality_count(), 7);
        assert_eq!(constraint_system(3, true).equality_count(), 19);
        assert_eq!(constraint_system(4, true).equality_count(), 37);
        assert_eq!(constraint_system(3, false).equality_count(), 27);
    }

    #[test]
    fn ranks() {
        for n in 1..=4 {
            let full = constraint_system(n, false);
            let reduced = constraint_system(n, true);
            let expect = 3 * n * n - 3 * n + 1;
            assert_eq!(full.equality_rank(), expect, "full n={n}");
            assert_eq!(reduced.equality_rank(), expect, "reduced n={n}");
        }
    }

    #[test]
    fn satisfies_examples() {
        let reduced = constraint_system(3, true);
        assert!(satisfies(&example_e(), &reduced).unwrap());
        assert!(satisfies(&example_f(), &reduced).unwrap());
        assert!(!satisfies(&Tensor3::zeros(3), &reduced).unwrap());
        assert!(satisfies(&Tensor3::zeros(2), &reduced).is_err());
    }

    #[test]
    fn h_representation_shape() {
        let text = constraint_system(2, true).to_h_representation();
        let rows: Vec<&str> = text
            .lines()
            .skip_while(|l| *l != "begin")
            .skip(1)
            .take_while(|l| *l != "end")
            .collect();
        assert_eq!(rows.len(), 7 + 8);
        assert!(rows
            .iter()
            .all(|r| r.split_whitespace().count() == 1 + 8 + 1));
        assert!(rows[0].starts_with("= ") && rows[0].ends_with(" 1"));
        assert!(rows[7].starts_with(">= 1 0") && rows[7].ends_with(" 0"));
    }
}
