//! Linear subspaces of Q^n held in a canonical reduced-row-echelon basis,
//! so membership tests and equality are exact structural checks.

use num_traits::{One, Zero};

use super::matrix::{SparseMatrix, SparseVec};
use super::rational::Rational;

/// A subspace of Q^ambient with a canonical (rref) basis: equality of
/// subspaces is plain `==` on the stored bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl LinearSubspace {
    /// Span of the given vectors, canonicalized by row reduction.
    pub fn from_vectors(ambient: usize, vectors: Vec<SparseVec>) -> Self {
        let m = SparseMatrix::from_triplets(
            vectors.len().max(1),
            ambient,
            vectors
                .iter()
                .enumerate()
                .flat_map(|(r, v)| v.iter().map(move |(c, x)| (r, *c, x.clone()))),
        );
        let rref = m.rref();
        let mut basis = Vec::with_capacity(rref.rank);
        for r in 0..rref.rank {
            let mut row = SparseVec::new();
            for ((rr, c), v) in rref.reduced.entries() {
                if *rr == r {
                    row.insert(*c, v.clone());
                }
            }
            basis.push(row);
        }
        LinearSubspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        LinearSubspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| SparseVec::from([(i, Rational::one())]))
            .collect();
        LinearSubspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Exact membership: reduce `v` against the echelon basis and test for
    /// a zero remainder.
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut rem = v.clone();
        rem.retain(|_, x| !x.is_zero());
        for row in &self.basis {
            let Some((pivot_col, _)) = row.iter().next() else { continue };
            let Some(f) = rem.get(pivot_col).cloned() else { continue };
            for (c, x) in row {
                let delta = &f * x;
                let slot = rem.entry(*c).or_insert_with(Rational::zero);
                *slot -= delta;
                if slot.is_zero() {
                    rem.remove(c);
                }
            }
        }
        rem.is_empty()
    }

    /// True when every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &LinearSubspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, x)| (i, rat(x, 1))).collect()
    }

    #[test]
    fn span_canonicalizes_redundant_generators() {
        let s = LinearSubspace::from_vectors(3, vec![v(&[(0, 1), (1, 1)]), v(&[(0, 2), (1, 2)])]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&v(&[(0, -3), (1, -3)])));
        assert!(!s.contains(&v(&[(0, 1)])));
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = LinearSubspace::from_vectors(3, vec![v(&[(0, 1)]), v(&[(1, 1)])]);
        let b = LinearSubspace::from_vectors(3, vec![v(&[(0, 2), (1, 6)]), v(&[(0, 1), (1, 1)])]);
        assert_eq!(a, b);
    }

    #[test]
    fn zero_and_full_extremes() {
        let z = LinearSubspace::zero(4);
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&SparseVec::new()));
        assert!(!z.contains(&v(&[(2, 1)])));
        let f = LinearSubspace::full(4);
        assert_eq!(f.dim(), 4);
        assert!(f.contains(&v(&[(0, 5), (3, -7)])));
        assert!(f.contains_subspace(&z));
        assert!(!z.contains_subspace(&f));
    }
}
