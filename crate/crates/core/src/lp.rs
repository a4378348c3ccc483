//! Exact feasibility for `{x : Ax = b, x >= 0}` by phase-1 simplex.
//!
//! Dense tableau over rationals. Entering columns follow the most negative
//! reduced cost until a run of degenerate pivots, after which Bland's rule
//! takes over for good, so the method always terminates. Artificial
//! variables are dropped as soon as they leave the basis.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

const DEGENERATE_LIMIT: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A basic feasible solution.
    Feasible(Vec<Rational>),
    Infeasible,
}

/// Finds a basic feasible solution of `Ax = b, x >= 0` or proves there is none.
pub fn find_feasible(a: &[Vec<Rational>], b: &[Rational]) -> Feasibility {
    let m = a.len();
    assert_eq!(b.len(), m, "row count mismatch");
    let nv = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == nv), "ragged constraint matrix");

    // rows: [A | I | b] with b >= 0
    let width = nv + m + 1;
    let mut tab: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(r, (row, rhs))| {
            let flip = rhs.is_negative();
            let mut t: Vec<Rational> = row
                .iter()
                .map(|v| if flip { -v } else { v.clone() })
                .collect();
            t.extend((0..m).map(|c| Rational::from_integer((c == r).into())));
            t.push(if flip { -rhs } else { rhs.clone() });
            t
        })
        .collect();
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    // reduced costs of the phase-1 objective (sum of artificials)
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    for c in cost.iter_mut().skip(nv).take(m) {
        *c = Rational::zero();
    }

    let mut bland = false;
    let mut degenerate_run = 0;
    loop {
        let enter = if bland {
            (0..nv).find(|&c| cost[c].is_negative())
        } else {
            (0..nv)
                .filter(|&c| cost[c].is_negative())
                .min_by(|&x, &y| cost[x].cmp(&cost[y]))
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (pr, step) = leave.expect("phase-1 objective is bounded below");
        if step.is_zero() {
            degenerate_run += 1;
            bland |= degenerate_run > DEGENERATE_LIMIT;
        } else {
            degenerate_run = 0;
        }
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    let infeasibility = -&cost[width - 1];
    if !infeasibility.is_zero() {
        return Feasibility::Infeasible;
    }
    let mut x = vec![Rational::zero(); nv];
    for (r, &var) in basis.iter().enumerate() {
        if var < nv {
            x[var] = tab[r][width - 1].clone();
        }
    }
    Feasibility::Feasible(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[pr].clone();
    let eliminate = |row: &mut [Rational]| {
        let factor = row[pc].clone();
        if factor.is_zero() {
            return;
        }
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    };
    for (r, row) in tab.iter_mut().enumerate() {
        if r != pr {
            eliminate(row);
        }
    }
    eliminate(cost);
}
