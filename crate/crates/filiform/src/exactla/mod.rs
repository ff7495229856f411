//! Exact rational arithmetic and sparse linear algebra over the rationals:
//! reduced row echelon form, kernels, linear solves, skew determinants,
//! and rational w-th roots. No tolerances exist anywhere; every result is
//! exact or an explicit error.

pub(crate) mod matrix;
mod rational;
mod subspace;

pub use matrix::{Rref, SparseMatrix, SparseVec};
pub use rational::{
    factorize_u64, format_rational, parse_rational, rat, rational_roots, Rational,
};
pub use subspace::LinearSubspace;
