//! The two 3x3x3 reference cubes: `E` (stochastic, no positive diagonal) and
//! `F` (positive diagonal, not a mixture of permutation tensors).

use crate::latin::LatinSquare;
use crate::tensor::{from_wide_integers, Tensor3};

/// Flattened rows of `2E`; blocks are the slices `k = 1, 2, 3`.
pub const E_WIDE_TIMES_2: [[i64; 9]; 3] = [
    [0, 1, 1, 1, 1, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 1, 1, 0, 1],
    [1, 0, 1, 1, 0, 1, 0, 2, 0],
];

/// Flattened rows of `10F`.
pub const F_WIDE_TIMES_10: [[i64; 9]; 3] = [
    [0, 6, 4, 10, 0, 0, 0, 4, 6],
    [6, 0, 4, 0, 4, 6, 4, 6, 0],
    [4, 4, 2, 0, 6, 4, 6, 0, 4],
];

pub fn example_e() -> Tensor3 {
    let rows: Vec<&[i64]> = E_WIDE_TIMES_2.iter().map(|r| &r[..]).collect();
    from_wide_integers(3, &rows, 2).expect("fixture shape")
}

pub fn example_f() -> Tensor3 {
    let rows: Vec<&[i64]> = F_WIDE_TIMES_10.iter().map(|r| &r[..]).collect();
    from_wide_integers(3, &rows, 10).expect("fixture shape")
}

/// The hand-picked positive diagonal of `F`, as a selector `L(j, k) = i`.
pub fn f_witness() -> LatinSquare {
    LatinSquare::from_rows(&[vec![2, 1, 3], vec![1, 3, 2], vec![3, 2, 1]])
        .expect("valid Latin square")
}
