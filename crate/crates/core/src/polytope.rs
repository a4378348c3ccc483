//! The permutation-tensor polytope and the stochastic polytope: decomposition
//! certificates, extreme-point tests and vertex enumeration.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dd;
use crate::diagonal::enumerate_positive_diagonals_capped;
use crate::error::{Error, Result};
use crate::latin::{is_permutation_tensor, latin_to_tensor, LatinSquare};
use crate::linalg;
use crate::lp::{find_feasible, Feasibility};
use crate::rational::Rational;
use crate::stochastic::{constraint_system, is_stochastic};
use crate::tensor::Tensor3;

pub const DEFAULT_MEMBERSHIP_CAP: usize = 4;
pub const DEFAULT_VERTEX_CAP: usize = 3;

/// Convex weights over Latin squares reproducing a tensor, or a marker that
/// no such weights exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub feasible: bool,
    pub terms: Vec<(LatinSquare, Rational)>,
}

impl DecompositionCertificate {
    pub fn infeasible() -> Self {
        DecompositionCertificate {
            feasible: false,
            terms: Vec::new(),
        }
    }

    /// `sum weight * P_square`.
    pub fn recombine(&self, n: usize) -> Result<Tensor3> {
        let tensors: Vec<(Rational, Tensor3)> = self
            .terms
            .iter()
            .map(|(sq, w)| (w.clone(), latin_to_tensor(sq)))
            .collect();
        Tensor3::linear_combination(tensors.iter().map(|(w, t)| (w, t)), n)
    }

    /// Positive weights summing to 1 whose mixture equals `target` exactly.
    pub fn certifies(&self, target: &Tensor3) -> bool {
        if !self.feasible {
            return self.terms.is_empty();
        }
        !self.terms.is_empty()
            && self
                .terms
                .iter()
                .all(|(sq, w)| w.is_positive() && sq.n() == target.n())
            && self.terms.iter().map(|(_, w)| w).sum::<Rational>().is_one()
            && self.recombine(target.n()).as_ref() == Ok(target)
    }
}

/// Decides whether `t` is a convex combination of permutation tensors, with
/// the default order cap of 4.
pub fn membership_delta(t: &Tensor3) -> Result<DecompositionCertificate> {
    membership_delta_capped(t, DEFAULT_MEMBERSHIP_CAP)
}

/// Exact LP over one weight per Latin square. Squares that hit a zero entry
/// of `t` must carry weight 0, so only squares supported inside `t`'s support
/// enter the LP.
pub fn membership_delta_capped(t: &Tensor3, cap: usize) -> Result<DecompositionCertificate> {
    if !is_stochastic(t) {
        return Err(Error::NotStochastic);
    }
    let squares: Vec<LatinSquare> = enumerate_positive_diagonals_capped(t, cap)?
        .into_iter()
        .map(|w| w.square)
        .collect();
    if squares.is_empty() {
        return Ok(DecompositionCertificate::infeasible());
    }
    let n = t.n();
    let cells = n * n * n;
    let mut a = vec![vec![Rational::zero(); squares.len()]; cells + 1];
    for (col, sq) in squares.iter().enumerate() {
        for (i, j, k) in sq.positions() {
            a[t.offset(i, j, k)][col] = Rational::one();
        }
        a[cells][col] = Rational::one();
    }
    let mut b: Vec<Rational> = t.entries().to_vec();
    b.push(Rational::one());

    let cert = match find_feasible(&a, &b) {
        Feasibility::Infeasible => DecompositionCertificate::infeasible(),
        Feasibility::Feasible(x) => DecompositionCertificate {
            feasible: true,
            terms: squares
                .into_iter()
                .zip(x)
                .filter(|(_, w)| w.is_positive())
                .collect(),
        },
    };
    if !cert.certifies(t) {
        return Err(Error::Integrity(
            "decomposition does not recombine to the input".into(),
        ));
    }
    Ok(cert)
}

/// A stochastic tensor is a vertex exactly when its active constraints (all
/// `3n^2` line equalities plus `x_ijk >= 0` at each zero entry) have rank
/// `n^3`.
///
/// The unit rows of the zero entries clear their columns, so the active rank
/// is `#zeros + rank(A_S)` with `A_S` the line equalities restricted to the
/// support; the test reduces to `A_S` having independent columns.
pub fn is_extreme(t: &Tensor3) -> Result<bool> {
    if !is_stochastic(t) {
        return Err(Error::NotStochastic);
    }
    let support: Vec<usize> = (0..t.entries().len())
        .filter(|&o| !t.entries()[o].is_zero())
        .collect();
    let restricted: Vec<Vec<Rational>> = constraint_system(t.n(), false)
        .equality_matrix
        .iter()
        .map(|row| support.iter().map(|&c| row[c].clone()).collect())
        .collect();
    Ok(linalg::rank(&restricted) == support.len())
}

/// Rank of the constraints active at `t`, computed without the support
/// reduction used by [`is_extreme`].
pub fn active_rank(t: &Tensor3) -> usize {
    let n = t.n();
    let mut rows = constraint_system(n, false).equality_matrix;
    for off in t.zero_offsets() {
        let mut row = vec![Rational::zero(); n * n * n];
        row[off] = Rational::one();
        rows.push(row);
    }
    linalg::rank(&rows)
}

/// Defining hyperplanes through `t`: the `3n^2 - 3n + 1` reduced line
/// equalities plus one per zero entry.
pub fn active_hyperplane_count(t: &Tensor3) -> usize {
    let n = t.n();
    3 * n * n - 3 * n + 1 + t.zero_offsets().len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub n: usize,
    /// Sorted lexicographically by entries in storage order.
    pub vertices: Vec<Tensor3>,
}

impl VertexSet {
    pub fn count(&self) -> usize {
        self.vertices.len()
    }

    pub fn permutation_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| is_permutation_tensor(v))
            .count()
    }

    pub fn contains(&self, t: &Tensor3) -> bool {
        self.vertices
            .binary_search_by(|v| v.entries().cmp(t.entries()))
            .is_ok()
    }
}

/// Vertices of the stochastic polytope, with the default cap `n <= 3`.
pub fn enumerate_vertices(n: usize) -> Result<VertexSet> {
    enumerate_vertices_capped(n, DEFAULT_VERTEX_CAP)
}

/// Affine map `x = offset + coeffs * y` onto the solution set of the reduced
/// line equalities, with `y` the free variables of its row echelon form.
struct Parametrization {
    offset: Vec<Rational>,
    coeffs: Vec<Vec<Rational>>,
    free: usize,
}

fn parametrize(n: usize) -> Parametrization {
    let system = constraint_system(n, true);
    let m = system.variable_count();
    let augmented: Vec<Vec<Rational>> = system
        .equality_matrix
        .iter()
        .zip(&system.equality_rhs)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (reduced, pivots) = linalg::rref(&augmented);
    let free_cols: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let mut offset = vec![Rational::zero(); m];
    let mut coeffs = vec![vec![Rational::zero(); free_cols.len()]; m];
    for (slot, &f) in free_cols.iter().enumerate() {
        coeffs[f][slot] = Rational::one();
    }
    for (row, &p) in reduced.iter().zip(&pivots) {
        offset[p] = row[m].clone();
        for (slot, &f) in free_cols.iter().enumerate() {
            coeffs[p][slot] = -&row[f];
        }
    }
    Parametrization {
        offset,
        coeffs,
        free: free_cols.len(),
    }
}

pub fn enumerate_vertices_capped(n: usize, cap: usize) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::OutOfRange("side length must be positive".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let param = parametrize(n);
    // cone rows over z = (t, y): offset_e * t + coeffs_e . y >= 0, and t >= 0
    let mut rows: Vec<Vec<BigInt>> = param
        .offset
        .iter()
        .zip(&param.coeffs)
        .map(|(c, a)| {
            let mut r = vec![c.clone()];
            r.extend(a.iter().cloned());
            linalg::integer_row(&r)
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); param.free + 1];
    t_row[0] = BigInt::one();
    rows.push(t_row);

    let mut vertices = Vec::new();
    for ray in dd::extreme_rays(&rows) {
        if !ray[0].is_positive() {
            return Err(Error::Integrity(
                "stochastic polytope has an unbounded direction".into(),
            ));
        }
        let t = Rational::from_integer(ray[0].clone());
        let y: Vec<Rational> = ray[1..]
            .iter()
            .map(|v| Rational::from_integer(v.clone()) / &t)
            .collect();
        let entries = param
            .offset
            .iter()
            .zip(&param.coeffs)
            .map(|(c, a)| c + a.iter().zip(&y).map(|(p, q)| p * q).sum::<Rational>())
            .collect();
        let v = Tensor3::new(n, entries)?;
        if !is_stochastic(&v) {
            return Err(Error::Integrity(
                "enumerated vertex is not stochastic".into(),
            ));
        }
        vertices.push(v);
    }
    vertices.sort_by(|a, b| a.entries().cmp(b.entries()));
    vertices.dedup();
    Ok(VertexSet { n, vertices })
}

/// `t * p + (1 - t) * q` for stochastic `p`, `q` and `0 <= t <= 1`.
pub fn perturb_toward(p: &Tensor3, q: &Tensor3, t: &Rational) -> Result<Tensor3> {
    if p.n() != q.n() {
        return Err(Error::Dimension {
            expected: p.n(),
            found: q.n(),
        });
    }
    if t.is_negative() || *t > Rational::one() {
        return Err(Error::OutOfRange(format!("t = {t} is outside [0, 1]")));
    }
    if !is_stochastic(p) || !is_stochastic(q) {
        return Err(Error::NotStochastic);
    }
    let rest = Rational::one() - t;
    Ok(&p.scale(t) + &q.scale(&rest))
}

/// Dimension of the stochastic polytope: `n^3 - (3n^2 - 3n + 1) = (n-1)^3`.
pub fn dimension(n: usize) -> usize {
    assert!(n > 0, "side length must be positive");
    (n - 1).pow(3)
}

/// Dimension of the affine hull of a point set.
pub fn affine_dimension(points: &[Tensor3]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = rest.iter().map(|p| (p - first).into_entries()).collect();
    linalg::rank(&diffs)
}
