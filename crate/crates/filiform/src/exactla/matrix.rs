//! Sparse exact matrices over the rationals with deterministic Gauss–Jordan
//! elimination: pivots are chosen as the first nonzero entry in column
//! order, so reduced forms, kernels, and particular solutions are unique
//! and reproducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::subspace::LinearSubspace;
use crate::{Error, Result};

/// Sparse vector: index -> nonzero rational entry.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Sparse matrix with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

/// Result of Gauss–Jordan elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: SparseMatrix,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in triplets {
            let acc = m.get(r, c) + v;
            m.set(r, c, acc);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Set an entry; zeros are removed rather than stored.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix-vector product, exact.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for ((r, c), a) in &self.entries {
            if let Some(x) = v.get(c) {
                let acc = out.entry(*r).or_insert_with(Rational::zero);
                *acc += a * x;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// Rows as sparse maps, skipping empty rows entirely.
    fn row_maps(&self) -> Vec<(usize, SparseVec)> {
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for ((r, c), v) in &self.entries {
            rows.entry(*r).or_default().insert(*c, v.clone());
        }
        rows.into_iter().collect()
    }

    /// Unique reduced row-echelon form with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let (reduced_rows, pivots) = rref_rows(
            self.row_maps().into_iter().map(|(_, m)| m).collect(),
            self.cols,
        );
        let mut reduced = SparseMatrix::zero(self.rows, self.cols);
        for (r, row) in reduced_rows.iter().enumerate() {
            for (c, v) in row {
                reduced.set(r, *c, v.clone());
            }
        }
        Rref { rank: pivots.len(), pivots, reduced }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : m v = 0}`, dimension `cols - rank`, returned as a
    /// canonical subspace.
    pub fn kernel_basis(&self) -> LinearSubspace {
        let Rref { pivots, reduced, .. } = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(free, Rational::one());
            for (ri, &pc) in pivots.iter().enumerate() {
                let a = reduced.get(ri, free);
                if !a.is_zero() {
                    v.insert(pc, -a);
                }
            }
            basis.push(v);
        }
        LinearSubspace::from_vectors(self.cols, basis)
    }

    /// A particular solution of `m v = rhs`, or `None` when `rhs` is not in
    /// the column span. Deterministic: free variables are set to zero after
    /// elimination.
    pub fn solve(&self, rhs: &SparseVec) -> Option<SparseVec> {
        let mut rows = self.row_maps();
        let mut augmented: Vec<SparseVec> = Vec::new();
        let aug_col = self.cols;
        let mut touched: std::collections::BTreeSet<usize> = rows.iter().map(|(r, _)| *r).collect();
        touched.extend(rhs.keys().copied());
        let mut by_index: BTreeMap<usize, SparseVec> = rows.drain(..).collect();
        for r in touched {
            let mut row = by_index.remove(&r).unwrap_or_default();
            if let Some(b) = rhs.get(&r) {
                row.insert(aug_col, b.clone());
            }
            augmented.push(row);
        }
        let (reduced, pivots) = rref_rows(augmented, self.cols + 1);
        if pivots.contains(&aug_col) {
            return None;
        }
        let mut v = SparseVec::new();
        for (ri, &pc) in pivots.iter().enumerate() {
            if let Some(b) = reduced[ri].get(&aug_col) {
                if !b.is_zero() {
                    v.insert(pc, b.clone());
                }
            }
        }
        Some(v)
    }

    /// Exact determinant of a skew-symmetric matrix; zero for odd size.
    /// Errors when the matrix is not square or not skew.
    pub fn skew_determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSkewSymmetric(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        for ((r, c), v) in &self.entries {
            if r == c {
                return Err(Error::NotSkewSymmetric(format!("nonzero diagonal at {r}")));
            }
            if self.get(*c, *r) != -v.clone() {
                return Err(Error::NotSkewSymmetric(format!("entry ({r},{c}) has no mate")));
            }
        }
        if self.rows % 2 == 1 {
            return Ok(Rational::zero());
        }
        Ok(self.determinant())
    }

    /// Determinant by fraction-exact elimination with row swaps
    /// (square matrices only; callers validate).
    fn determinant(&self) -> Rational {
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> =
            (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= a[col][col].clone();
            let inv_pivot = a[col][col].clone();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &inv_pivot;
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        det
    }
}

/// Sparse integer row, sorted by column. Elimination runs over stripped
/// integers instead of rationals: cross-multiplying two rows and dividing
/// out the gcd content keeps entries near the size of the data instead of
/// letting them swell to determinant-sized fractions.
type IntRow = Vec<(usize, BigInt)>;

/// Divide out the gcd of all entries (content) in place.
fn strip_content(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// Clear denominators and strip content.
fn integerize(row: &SparseVec) -> IntRow {
    let mut l = BigInt::one();
    for v in row.values() {
        l = l.lcm(v.denom());
    }
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
        .collect();
    strip_content(&mut out);
    out
}

/// `rf · r − qf · q` over the sorted sparse representation.
fn cross_eliminate(r: &IntRow, rf: &BigInt, q: &IntRow, qf: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + q.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < r.len() && j < q.len() {
        match r[i].0.cmp(&q[j].0) {
            std::cmp::Ordering::Less => {
                out.push((r[i].0, rf * &r[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((q[j].0, -(qf * &q[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = rf * &r[i].1 - qf * &q[j].1;
                if !v.is_zero() {
                    out.push((r[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (c, v) in &r[i..] {
        out.push((*c, rf * v));
    }
    for (c, v) in &q[j..] {
        out.push((*c, -(qf * v)));
    }
    out
}

/// Eliminate the leading column of `r` against the pivot row `q` (both
/// rows carry that column); the shared column cancels exactly.
fn reduce_against(r: &IntRow, a: &BigInt, q: &IntRow) -> IntRow {
    let p = &q[0].1;
    let g = a.gcd(p);
    cross_eliminate(r, &(p / &g), q, &(a / &g))
}

/// Reduced row echelon over sparse rows; returns the nonzero reduced rows
/// (in pivot-column order) and the pivot columns. The RREF is unique, so
/// the result does not depend on the input row order.
///
/// Implementation: incremental echelon insertion — each incoming row is
/// reduced against the pivot rows found so far and becomes a new pivot
/// row if it survives — followed by a Jordan back-substitution pass over
/// the at most `rank` surviving rows. Zero rows never participate, which
/// keeps tall matrices (many more equations than unknowns) cheap.
fn rref_rows(rows: Vec<SparseVec>, cols: usize) -> (Vec<SparseVec>, Vec<usize>) {
    let _ = cols;
    let mut pivot_rows: BTreeMap<usize, IntRow> = BTreeMap::new();
    // Short rows first: they seed the echelon with sparse pivots, which
    // keeps fill-in low. The RREF is unique, so order only affects speed.
    let mut int_rows: Vec<IntRow> = rows.iter().map(integerize).collect();
    int_rows.sort_by_key(Vec::len);
    for mut r in int_rows {
        while let Some((c, a)) = r.first().map(|(c, a)| (*c, a.clone())) {
            match pivot_rows.get(&c) {
                Some(q) => {
                    r = reduce_against(&r, &a, q);
                    strip_content(&mut r);
                }
                None => {
                    pivot_rows.insert(c, r);
                    break;
                }
            }
        }
    }
    // Jordan pass, right to left: clear each pivot column from the rows
    // whose own pivot lies further left.
    let pivots: Vec<usize> = pivot_rows.keys().copied().collect();
    for &c in pivots.iter().rev() {
        let q = pivot_rows.get(&c).unwrap().clone();
        for (_, r) in pivot_rows.range_mut(..c) {
            let Ok(pos) = r.binary_search_by_key(&c, |(cc, _)| *cc) else { continue };
            let a = r[pos].1.clone();
            *r = reduce_against(r, &a, &q);
            strip_content(r);
        }
    }
    // Normalize pivots to one; `Ratio::new` reduces and fixes signs.
    let mut out = Vec::with_capacity(pivots.len());
    for (&c, r) in &pivot_rows {
        debug_assert_eq!(r[0].0, c);
        let lead = r[0].1.clone();
        let mut sv = SparseVec::new();
        for (cc, v) in r {
            sv.insert(*cc, Rational::new(v.clone(), lead.clone()));
        }
        out.push(sv);
    }
    (out, pivots)
}

/// Exact inverse of a dense square matrix, `None` when singular.
/// Used for triangular basis changes; small dimensions only.
pub(crate) fn invert_dense(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        inv.swap(p, col);
        let d = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &d;
            inv[col][c] /= &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let (da, di) = (&f * &a[col][c], &f * &inv[col][c]);
                a[r][c] -= da;
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}

/// Signed magnitude comparison helper used by deterministic displays.
pub(crate) fn abs(q: &Rational) -> Rational {
    if q.is_negative() {
        -q.clone()
    } else {
        q.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn m(rows: usize, cols: usize, data: &[(usize, usize, i64)]) -> SparseMatrix {
        SparseMatrix::from_triplets(
            rows,
            cols,
            data.iter().map(|&(r, c, v)| (r, c, rat(v, 1))),
        )
    }

    #[test]
    fn identity_rref() {
        let r = SparseMatrix::identity(2).rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.reduced, SparseMatrix::identity(2));
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let r = m(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(3, 4, &[(0, 1, 2), (0, 3, -1), (1, 0, 3), (1, 1, 1), (2, 0, 3), (2, 3, 5)]);
        let once = a.rref().reduced;
        assert_eq!(once.rref().reduced, once);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(SparseMatrix::identity(3).kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let k = m(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]).kernel_basis();
        assert_eq!(k.dim(), 1);
        let v = SparseVec::from([(0, rat(-2, 1)), (1, rat(1, 1))]);
        assert!(k.contains(&v));
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols() {
        let a = m(3, 5, &[(0, 0, 1), (0, 2, 2), (1, 2, 1), (1, 4, -3), (2, 0, 1), (2, 4, 7)]);
        assert_eq!(a.rank() + a.kernel_basis().dim(), a.cols());
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = SparseMatrix::identity(2);
        let e0 = SparseVec::from([(0, rat(1, 1))]);
        assert_eq!(id.solve(&e0), Some(e0.clone()));
        let a = m(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]);
        let rhs = SparseVec::from([(0, rat(1, 1)), (1, rat(3, 1))]);
        assert_eq!(a.solve(&rhs), None);
    }

    #[test]
    fn solve_returns_exact_solutions() {
        let a = m(3, 4, &[(0, 0, 2), (0, 2, 1), (1, 1, 3), (1, 3, -1), (2, 0, 2), (2, 1, 3)]);
        let rhs = SparseVec::from([(0, rat(5, 1)), (1, rat(1, 1)), (2, rat(6, 1))]);
        let v = a.solve(&rhs).expect("consistent system");
        assert_eq!(a.mul_vec(&v), rhs);
    }

    #[test]
    fn skew_determinant_basics() {
        let s = m(2, 2, &[(0, 1, 1), (1, 0, -1)]);
        assert_eq!(s.skew_determinant().unwrap(), rat(1, 1));
        let odd = m(5, 5, &[(0, 1, 2), (1, 0, -2), (2, 4, 1), (4, 2, -1)]);
        assert_eq!(odd.skew_determinant().unwrap(), rat(0, 1));
        let not_skew = m(2, 2, &[(0, 1, 1), (1, 0, 1)]);
        assert!(not_skew.skew_determinant().is_err());
        let not_square = m(2, 3, &[]);
        assert!(not_square.skew_determinant().is_err());
    }

    #[test]
    fn dense_inverse_round_trip() {
        let mat = vec![
            vec![rat(2, 1), rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(4, 1), rat(0, 1)],
            vec![rat(-3, 1), rat(5, 1), rat(8, 1)],
        ];
        let inv = invert_dense(&mat).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = rat(0, 1);
                for k in 0..3 {
                    acc += &mat[r][k] * &inv[k][c];
                }
                assert_eq!(acc, if r == c { rat(1, 1) } else { rat(0, 1) });
            }
        }
        let singular = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(invert_dense(&singular).is_none());
    }
}
