//! Brute-force vertex enumeration of the stochastic polytope.
//!
//! The corner block `x_ijk` with `i, j, k < n-1` parametrizes every
//! stochastic cube: the remaining entries follow from line sums. A vertex is
//! a feasible point where some `(n-1)^3` independent entries vanish, so we try
//! every such subset of zero entries, solve with integer Gauss-Jordan, and
//! keep the nonnegative solutions.

use std::collections::BTreeSet;

use num_integer::Integer;
use stochastic_tensors::{Rational, Tensor3};

/// Entry as `constant + coeffs . y` over the corner block.
#[derive(Clone, Debug)]
struct Affine {
    constant: i128,
    coeffs: Vec<i128>,
}

fn corner_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    let m = n - 1;
    (i * m + j) * m + k
}

fn entry_form(n: usize, i: usize, j: usize, k: usize) -> Affine {
    let d = (n - 1).pow(3);
    let last = n - 1;
    let one_minus = |parts: Vec<Affine>| {
        let mut out = Affine {
            constant: 1,
            coeffs: vec![0; d],
        };
        for p in parts {
            out.constant -= p.constant;
            for (o, c) in out.coeffs.iter_mut().zip(&p.coeffs) {
                *o -= c;
            }
        }
        out
    };
    if i == last {
        one_minus((0..last).map(|t| entry_form(n, t, j, k)).collect())
    } else if j == last {
        one_minus((0..last).map(|t| entry_form(n, i, t, k)).collect())
    } else if k == last {
        one_minus((0..last).map(|t| entry_form(n, i, j, t)).collect())
    } else {
        let mut coeffs = vec![0; d];
        coeffs[corner_index(n, i, j, k)] = 1;
        Affine {
            constant: 0,
            coeffs,
        }
    }
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

/// Rows kept in reduced echelon form: `(pivot column, [coeffs.., rhs])`.
type Echelon = Vec<(usize, Vec<i128>)>;

fn insert(state: &Echelon, mut row: Vec<i128>, d: usize) -> Option<Echelon> {
    for (p, q) in state {
        if row[*p] != 0 {
            let (a, b) = (q[*p], row[*p]);
            for (r, qv) in row.iter_mut().zip(q) {
                *r = a * *r - b * qv;
            }
            normalize(&mut row);
        }
    }
    let pc = (0..d).find(|&c| row[c] != 0)?;
    let mut next = state.clone();
    for (_, q) in next.iter_mut() {
        if q[pc] != 0 {
            let (a, b) = (row[pc], q[pc]);
            for (qv, r) in q.iter_mut().zip(&row) {
                *qv = a * *qv - b * r;
            }
            normalize(q);
        }
    }
    next.push((pc, row));
    Some(next)
}

struct Enumerator {
    n: usize,
    d: usize,
    forms: Vec<Affine>,
    found: BTreeSet<Vec<(i128, i128)>>,
}

impl Enumerator {
    fn leaf(&mut self, state: &Echelon) {
        // y_p = rhs / pivot; bring everything over the lcm of the pivots
        let mut sol = vec![(0i128, 1i128); self.d];
        for (p, q) in state {
            let (mut num, mut den) = (q[self.d], q[*p]);
            if den < 0 {
                num = -num;
                den = -den;
            }
            sol[*p] = (num, den);
        }
        let l = sol.iter().fold(1i128, |acc, &(_, den)| acc.lcm(&den));
        let mut point = Vec::with_capacity(self.forms.len());
        for f in &self.forms {
            let scaled: i128 = f.constant * l
                + f.coeffs
                    .iter()
                    .zip(&sol)
                    .map(|(c, (num, den))| c * num * (l / den))
                    .sum::<i128>();
            if scaled < 0 {
                return;
            }
            let g = scaled.gcd(&l);
            point.push((scaled / g, l / g));
        }
        self.found.insert(point);
    }

    fn descend(&mut self, start: usize, state: Echelon) {
        if state.len() == self.d {
            self.leaf(&state);
            return;
        }
        let need = self.d - state.len();
        for e in start..self.forms.len() {
            if self.forms.len() - e < need {
                break;
            }
            // entry e vanishes: coeffs . y = -constant
            let f = &self.forms[e];
            let mut row = f.coeffs.clone();
            row.push(-f.constant);
            if let Some(next) = insert(&state, row, self.d) {
                self.descend(e + 1, next);
            }
        }
    }
}

/// All vertices, as tensors in storage order, sorted lexicographically.
pub fn vertices(n: usize) -> Vec<Tensor3> {
    assert!(n >= 1);
    let d = (n - 1).pow(3);
    let probe = Tensor3::zeros(n);
    let forms: Vec<Affine> = (0..n * n * n)
        .map(|off| {
            let (i, j, k) = probe.coords(off);
            entry_form(n, i, j, k)
        })
        .collect();
    let mut en = Enumerator {
        n,
        d,
        forms,
        found: BTreeSet::new(),
    };
    en.descend(0, Vec::new());
    let mut out: Vec<Tensor3> = en
        .found
        .into_iter()
        .map(|pt| {
            let entries = pt
                .into_iter()
                .map(|(num, den)| Rational::new(num.into(), den.into()))
                .collect();
            Tensor3::new(en.n, entries).unwrap()
        })
        .collect();
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out
}
