//! Exact-arithmetic engine for nilpotent Lie algebra cohomology and
//! deformation theory, specialized to the graded filiform algebras
//! `V(n)` with `[e_i, e_j] = (j-i) e_{i+j}`.
//!
//! Everything is computed over the rationals with zero tolerance: sparse
//! exact linear algebra, Chevalley–Eilenberg cohomology graded by weight,
//! the Nijenhuis–Richardson bracket, canonicalization of positively
//! filtered deformations to five moduli coordinates, and symplectic /
//! central-extension machinery for the even- and odd-dimensional families.
//!
//! Module map:
//!
//! * [`exactla`] — rationals, sparse matrices (rref / kernel / solve /
//!   skew determinant), subspaces, rational w-th roots.
//! * [`liealg`] — structure-constant Lie algebras, central series, flags,
//!   associated graded algebras, triangular basis changes.
//! * [`catalog`] — constructors for every named algebra and differential
//!   form used by the classification: `m0`, `m1`, `m2`, `V(n)`, the
//!   parametric `g8`/`g10`, the deformed family `gX`, the cocycles
//!   `psi_{n,l}`, the `xi` ladder, and the symplectic forms.
//! * [`cohomology`] — cochains, the weight-graded differential, exact
//!   cohomology dimensions and representatives.
//! * [`deformation`] — Nijenhuis–Richardson bracket, deformation residual,
//!   Massey obstructions, canonicalization, moduli-orbit arithmetic.
//! * [`symplectic`] — closedness/nondegeneracy, existence decisions with
//!   certificates, one-dimensional central extensions, contact forms.
//! * [`io`] — serde types for the JSON interchange formats.
//! * [`report`] — deterministic report/golden-table generation.
//!
//! The runnable `examples/` directory demonstrates each capability
//! end to end; the `filiform` binary exposes the same operations as a CLI.

pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod exactla;
pub mod io;
pub mod liealg;
pub mod report;
pub mod symplectic;

/// Engine-wide error type. Input errors (parsing, validation, excluded
/// parameters) are distinguished from mathematical negatives, which are
/// ordinary return values, never errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("factorization overflow: {0}")]
    FactorizationOverflow(String),
    #[error("matrix is not skew-symmetric: {0}")]
    NotSkewSymmetric(String),
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("the Jacobi identity fails: {0}")]
    JacobiFails(String),
    #[error("flavor invariant violated: {0}")]
    FlavorViolation(String),
    #[error("form is not closed: {0}")]
    NotClosed(String),
    #[error("deformation residual is nonzero: {0}")]
    ResidualNonzero(String),
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
    #[error("unsolvable canonicalization step: {0}")]
    UnsolvableStep(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Dimension cap honored by the CLI, read from `FILIFORM_MAX_N`
/// (default 24). Library functions do not enforce it.
pub fn dimension_cap() -> usize {
    std::env::var("FILIFORM_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(24)
}
