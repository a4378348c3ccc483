//! Exact computations on the polytope of `n x n x n` line-stochastic tensors
//! (stochastic semi-magic cubes).
//!
//! Every scalar is an exact [`Rational`]; nothing in the crate rounds. The
//! main entry points are:
//!
//! * [`tensor`]: the [`Tensor3`] cube, slices, lines, line-vectorization and
//!   the JSON / text interchange formats.
//! * [`stochastic`]: stochasticity checks and the H-representation
//!   [`ConstraintSystem`].
//! * [`latin`]: Latin squares and their bijection with permutation tensors.
//! * [`diagonal`]: positive-diagonal search.
//! * [`polytope`]: decomposition into permutation tensors, extreme-point tests
//!   and vertex enumeration.
//! * [`bounds`]: vertex-count bounds.
//!
//! Indices are 0-based throughout the Rust API. Human-facing renderings
//! (Latin square symbols, CLI coordinates) are 1-based.

pub mod bounds;
pub mod dd;
pub mod diagonal;
mod error;
pub mod fixtures;
pub mod latin;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rational;
pub mod sampling;
pub mod stochastic;
pub mod tensor;

pub use bounds::{bounds_report, lower_bound, upper_bound, BoundsReport};
pub use diagonal::{
    enumerate_positive_diagonals, find_positive_diagonal, in_l, is_positive_diagonal,
    DiagonalWitness,
};
pub use error::{Error, Result};
pub use latin::{
    enumerate_latin_squares, is_permutation_tensor, latin_to_tensor, tensor_to_latin, LatinSquare,
};
pub use polytope::{
    dimension, enumerate_vertices, is_extreme, membership_delta, perturb_toward,
    DecompositionCertificate, VertexSet,
};
pub use rational::Rational;
pub use stochastic::{
    check_vec_characterization, constraint_system, is_stochastic, matrix_vec_check, satisfies,
    ConstraintSystem,
};
pub use tensor::{FlatSlices, Format, LineVec, Matrix, Mode, Tensor3};
