//! Structure-constant Lie algebras over Q.
//!
//! A [`LieAlgebra`] stores only the brackets `[e_i, e_j]` with `i < j`, so
//! antisymmetry is structural. Weights grade (or filter) the basis: the
//! `graded` flavor requires every structure constant `c_{ij}^k` to satisfy
//! `w(k) = w(i) + w(j)`, the `filtered` flavor requires `w(k) >= w(i) + w(j)`,
//! and `plain` imposes nothing. The Jacobi identity is *not* an invariant of
//! construction — [`LieAlgebra::jacobi_residual`] checks it explicitly so
//! that near-misses can be inspected.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactla::{format_rational, Rational, SparseVec};
use crate::exactla::{LinearSubspace, SparseMatrix};
use crate::{Error, Result};

/// Sparse vector over the algebra basis, 1-based indices.
pub type Vector = BTreeMap<u16, Rational>;

/// Weight discipline satisfied by the structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Flavor {
    Graded,
    Filtered,
    Plain,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Graded => "graded",
            Flavor::Filtered => "filtered",
            Flavor::Plain => "plain",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graded" => Ok(Flavor::Graded),
            "filtered" => Ok(Flavor::Filtered),
            "plain" => Ok(Flavor::Plain),
            other => Err(Error::Parse(format!(
                "unknown flavor {other:?}; expected graded, filtered, or plain"
            ))),
        }
    }
}

/// A finite-dimensional Lie algebra given by structure constants on a
/// weighted basis `e_1, ..., e_n`.
///
/// Equality compares dimension, weights, and brackets; the name and the
/// declared flavor are descriptive metadata.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    weights: Vec<i64>,
    flavor: Flavor,
    brackets: BTreeMap<(u16, u16), BTreeMap<u16, Rational>>,
    /// Reverse index: target `w` -> [((u,v), coefficient of e_w in [e_u,e_v])].
    by_target: BTreeMap<u16, Vec<((u16, u16), Rational)>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    /// Build an algebra from `i < j` brackets, validating index ranges,
    /// positive weights, and the declared flavor's weight discipline.
    /// Jacobi is not checked here.
    pub fn new(
        name: impl Into<String>,
        weights: Vec<i64>,
        flavor: Flavor,
        brackets: impl IntoIterator<Item = ((u16, u16), Vec<(u16, Rational)>)>,
    ) -> Result<Self> {
        let name = name.into();
        let n = weights.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::InvalidInput(format!("dimension {n} out of range")));
        }
        if let Some(w) = weights.iter().find(|&&w| w <= 0) {
            return Err(Error::InvalidInput(format!("weights must be positive, got {w}")));
        }
        let mut stored: BTreeMap<(u16, u16), BTreeMap<u16, Rational>> = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if !(1 <= i && i < j && (j as usize) <= n) {
                return Err(Error::InvalidInput(format!(
                    "bracket key ({i},{j}) must satisfy 1 <= i < j <= {n}"
                )));
            }
            let row = stored.entry((i, j)).or_default();
            for (k, c) in terms {
                if k == 0 || (k as usize) > n {
                    return Err(Error::InvalidInput(format!(
                        "bracket [e{i},e{j}] targets e{k} outside 1..={n}"
                    )));
                }
                if c.is_zero() {
                    continue;
                }
                let slot = row.entry(k).or_insert_with(Rational::zero);
                *slot += c;
                if slot.is_zero() {
                    row.remove(&k);
                }
            }
        }
        stored.retain(|_, row| !row.is_empty());
        for ((i, j), row) in &stored {
            let wi = weights[*i as usize - 1];
            let wj = weights[*j as usize - 1];
            for k in row.keys() {
                let wk = weights[*k as usize - 1];
                match flavor {
                    Flavor::Graded if wk != wi + wj => {
                        return Err(Error::FlavorViolation(format!(
                            "graded: [e{i},e{j}] -> e{k} has weight {wk}, expected {}",
                            wi + wj
                        )));
                    }
                    Flavor::Filtered if wk < wi + wj => {
                        return Err(Error::FlavorViolation(format!(
                            "filtered: [e{i},e{j}] -> e{k} has weight {wk} < {}",
                            wi + wj
                        )));
                    }
                    _ => {}
                }
            }
        }
        let mut by_target: BTreeMap<u16, Vec<((u16, u16), Rational)>> = BTreeMap::new();
        for ((i, j), row) in &stored {
            for (k, c) in row {
                by_target.entry(*k).or_default().push(((*i, *j), c.clone()));
            }
        }
        Ok(LieAlgebra { name, weights, flavor, brackets: stored, by_target })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weight of basis vector `e_i` (1-based).
    pub fn weight(&self, i: u16) -> i64 {
        self.weights[i as usize - 1]
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn brackets(&self) -> &BTreeMap<(u16, u16), BTreeMap<u16, Rational>> {
        &self.brackets
    }

    /// Targets index: for each `w`, the pairs `(u,v)`, `u<v`, with the
    /// coefficient of `e_w` in `[e_u, e_v]`.
    pub fn by_target(&self) -> &BTreeMap<u16, Vec<((u16, u16), Rational)>> {
        &self.by_target
    }

    pub fn basis_vector(&self, i: u16) -> Vector {
        assert!(1 <= i && (i as usize) <= self.n(), "basis index out of range");
        Vector::from([(i, Rational::one())])
    }

    /// `[e_i, e_j]` for any index order (empty when `i == j`).
    pub fn bracket_pair(&self, i: u16, j: u16) -> BTreeMap<u16, Rational> {
        if i == j {
            return BTreeMap::new();
        }
        let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
        let Some(row) = self.brackets.get(&key) else { return BTreeMap::new() };
        if sign > 0 {
            row.clone()
        } else {
            row.iter().map(|(k, c)| (*k, -c.clone())).collect()
        }
    }

    /// Bilinear, antisymmetric extension of the stored constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.n() as u16;
        for key in x.keys().chain(y.keys()) {
            if *key == 0 || *key > n {
                return Err(Error::DimensionMismatch(format!(
                    "vector index e{key} outside 1..={n}"
                )));
            }
        }
        let mut out = Vector::new();
        for (i, a) in x {
            for (j, b) in y {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_pair(*i, *j) {
                    let slot = out.entry(k).or_insert_with(Rational::zero);
                    *slot += &ab * &c;
                    if slot.is_zero() {
                        out.remove(&k);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Residuals `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` for
    /// all `i<j<k`; empty iff the structure constants define a Lie algebra.
    pub fn jacobi_residual(&self) -> Vec<((u16, u16, u16), Vector)> {
        let n = self.n() as u16;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let bij = self.bracket_pair(i, j);
                for k in j + 1..=n {
                    let mut res = Vector::new();
                    for (inner, outer) in [(&bij, k), (&self.bracket_pair(j, k), i)] {
                        accumulate_ad(self, inner, outer, &mut res);
                    }
                    let bki = self.bracket_pair(k, i);
                    accumulate_ad(self, &bki, j, &mut res);
                    if !res.is_empty() {
                        out.push(((i, j, k), res));
                    }
                }
            }
        }
        out
    }

    /// Descending central series `C^1 = g`, `C^{m+1} = [g, C^m]`, listed
    /// until it stabilizes (ending with the zero subspace when nilpotent).
    pub fn lower_central_series(&self) -> Flag {
        let n = self.n();
        let mut subspaces = vec![LinearSubspace::full(n)];
        loop {
            let last = subspaces.last().unwrap();
            let mut images = Vec::new();
            for i in 1..=n as u16 {
                for v in last.basis() {
                    let w = self
                        .bracket(&self.basis_vector(i), &sparse_to_vector(v))
                        .expect("basis indices are in range");
                    if !w.is_empty() {
                        images.push(vector_to_sparse(&w));
                    }
                }
            }
            let next = LinearSubspace::from_vectors(n, images);
            if next.dim() == last.dim() {
                break;
            }
            let done = next.dim() == 0;
            subspaces.push(next);
            if done {
                break;
            }
        }
        Flag::new(n, subspaces).expect("central series is strictly decreasing")
    }

    /// True iff nilpotent of maximal nil-index: central-series dimensions
    /// are exactly `n, n-2, n-3, ..., 1, 0`.
    pub fn is_filiform(&self) -> bool {
        let n = self.n();
        let dims: Vec<usize> = self.lower_central_series().subspaces().iter().map(LinearSubspace::dim).collect();
        let mut expected = vec![n];
        expected.extend((0..n.saturating_sub(1)).map(|k| n - 2 - k));
        dims == expected
    }

    /// `{z : [z, x] = 0 for all x}` as a canonical subspace.
    pub fn center(&self) -> LinearSubspace {
        let n = self.n();
        // Rows are (i, k) pairs: coefficient of e_k in [e_j, e_i], unknowns z_j.
        let mut m = SparseMatrix::zero(n * n, n);
        for j in 1..=n as u16 {
            for i in 1..=n as u16 {
                for (k, c) in self.bracket_pair(j, i) {
                    let row = (i as usize - 1) * n + (k as usize - 1);
                    let acc = m.get(row, j as usize - 1) + c;
                    m.set(row, j as usize - 1, acc);
                }
            }
        }
        m.kernel_basis()
    }

    /// The filtration by basis index: `L_j = span(e_j, ..., e_n)`.
    pub fn basis_filtration(&self) -> Flag {
        let n = self.n();
        let mut subspaces = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let basis = (j..n).map(|i| SparseVec::from([(i, Rational::one())])).collect();
            subspaces.push(LinearSubspace::from_vectors(n, basis));
        }
        Flag::new(n, subspaces).expect("basis filtration is strictly decreasing")
    }

    /// The filtration induced by the weights: `F^k = span{e_i : w(i) >= k}`.
    /// Requires every weight level `1..=max` to be attained so consecutive
    /// subspaces differ.
    pub fn weight_flag(&self) -> Result<Flag> {
        let max = *self.weights.iter().max().expect("nonempty basis");
        let mut subspaces = Vec::new();
        for k in 1..=max {
            if !self.weights.contains(&k) {
                return Err(Error::InvalidInput(format!(
                    "weight level {k} is not attained; the weight filtration is not strict"
                )));
            }
            let basis = self
                .weights
                .iter()
                .enumerate()
                .filter(|(_, w)| **w >= k)
                .map(|(i, _)| SparseVec::from([(i, Rational::one())]))
                .collect();
            subspaces.push(LinearSubspace::from_vectors(self.n(), basis));
        }
        subspaces.push(LinearSubspace::zero(self.n()));
        Flag::new(self.n(), subspaces)
    }

    /// Associated graded algebra of a bracket-compatible filtration
    /// (`[F^k, F^l] ⊆ F^{k+l}`; `F^k = 0` past the end of the flag).
    ///
    /// A layered basis is chosen by extending from the deepest subspace
    /// outward, deterministically from each subspace's canonical basis; the
    /// result's weight of a new basis vector is its layer `k` (it lies in
    /// `F^k` but not `F^{k+1}`).
    pub fn associated_graded(&self, f: &Flag) -> Result<LieAlgebra> {
        let n = self.n();
        if f.ambient() != n {
            return Err(Error::DimensionMismatch(format!(
                "flag ambient {} does not match algebra dimension {n}",
                f.ambient()
            )));
        }
        let levels = f.subspaces();
        if levels.first().map(LinearSubspace::dim) != Some(n) {
            return Err(Error::InvalidInput(
                "incompatible filtration: the flag must start at the full space".into(),
            ));
        }
        let m = levels.len();
        let level = |k: usize| -> Option<&LinearSubspace> { levels.get(k - 1) };
        // Compatibility: [F^k, F^l] ⊆ F^{k+l}.
        for k in 1..=m {
            for l in k..=m {
                for u in level(k).unwrap().basis() {
                    for v in level(l).unwrap().basis() {
                        let b = self
                            .bracket(&sparse_to_vector(u), &sparse_to_vector(v))
                            .expect("flag vectors live in the algebra");
                        let bs = vector_to_sparse(&b);
                        let ok = match level(k + l) {
                            Some(target) => target.contains(&bs),
                            None => bs.is_empty(),
                        };
                        if !ok {
                            return Err(Error::InvalidInput(format!(
                                "incompatible filtration: [F^{k}, F^{l}] escapes F^{}",
                                k + l
                            )));
                        }
                    }
                }
            }
        }
        // Layered basis, deepest level first.
        let mut chosen: Vec<(usize, SparseVec)> = Vec::new();
        for k in (1..=m).rev() {
            for v in level(k).unwrap().basis() {
                let span = LinearSubspace::from_vectors(
                    n,
                    chosen.iter().map(|(_, w)| w.clone()).collect(),
                );
                if !span.contains(v) {
                    chosen.push((k, v.clone()));
                }
            }
        }
        chosen.sort_by_key(|(k, _)| *k);
        debug_assert_eq!(chosen.len(), n);
        let p: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| chosen[c].1.get(&r).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect();
        let p_inv = crate::exactla::matrix::invert_dense(&p)
            .ok_or_else(|| Error::Internal("layered basis is not invertible".into()))?;
        let layer: Vec<usize> = chosen.iter().map(|(k, _)| *k).collect();
        let mut brackets = Vec::new();
        for r in 0..n {
            for s in r + 1..n {
                let x = self
                    .bracket(&sparse_to_vector(&chosen[r].1), &sparse_to_vector(&chosen[s].1))
                    .expect("layered basis lives in the algebra");
                let w = layer[r] + layer[s];
                let mut terms = Vec::new();
                for t in 0..n {
                    let mut coeff = Rational::zero();
                    for (old, a) in &x {
                        coeff += &p_inv[t][*old as usize - 1] * a;
                    }
                    if coeff.is_zero() {
                        continue;
                    }
                    if layer[t] < w {
                        return Err(Error::Internal(format!(
                            "graded truncation found a component below layer {w}"
                        )));
                    }
                    if layer[t] == w {
                        terms.push((t as u16 + 1, coeff));
                    }
                }
                if !terms.is_empty() {
                    brackets.push(((r as u16 + 1, s as u16 + 1), terms));
                }
            }
        }
        LieAlgebra::new(
            format!("gr({})", self.name),
            layer.iter().map(|&k| k as i64).collect(),
            Flavor::Graded,
            brackets,
        )
    }

    /// Conjugate the brackets by a triangular basis change:
    /// `[x, y]' = φ⁻¹ [φ x, φ y]`. The result keeps the weights; its flavor
    /// is recomputed as the strongest discipline the new constants satisfy.
    pub fn apply_basis_change(&self, phi: &BasisChange) -> Result<LieAlgebra> {
        let n = self.n();
        if phi.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis change has dimension {}, algebra has {n}",
                phi.n()
            )));
        }
        let inv = phi.inverse();
        let mut brackets = Vec::new();
        for i in 1..=n as u16 {
            let phi_i = phi.column(i);
            for j in i + 1..=n as u16 {
                let phi_j = phi.column(j);
                let b = self.bracket(&phi_i, &phi_j)?;
                let c = inv.apply(&b);
                if !c.is_empty() {
                    brackets.push(((i, j), c.into_iter().collect()));
                }
            }
        }
        let flavor = strongest_flavor(&self.weights, &brackets);
        LieAlgebra::new(self.name.clone(), self.weights.clone(), flavor, brackets)
    }

    /// Human-readable bracket rows, e.g. `[e1,e2] = e3`.
    pub fn bracket_lines(&self) -> Vec<String> {
        self.brackets
            .iter()
            .map(|((i, j), row)| format!("[e{i},e{j}] = {}", format_terms(row)))
            .collect()
    }
}

/// `res += [x, e_outer]` for a sparse `x` given over basis indices.
fn accumulate_ad(g: &LieAlgebra, x: &BTreeMap<u16, Rational>, outer: u16, res: &mut Vector) {
    for (w, c) in x {
        for (k, d) in g.bracket_pair(*w, outer) {
            let slot = res.entry(k).or_insert_with(Rational::zero);
            *slot += c * &d;
            if slot.is_zero() {
                res.remove(&k);
            }
        }
    }
}

fn strongest_flavor(weights: &[i64], brackets: &[((u16, u16), Vec<(u16, Rational)>)]) -> Flavor {
    let mut graded = true;
    let mut filtered = true;
    for ((i, j), terms) in brackets {
        let wij = weights[*i as usize - 1] + weights[*j as usize - 1];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let wk = weights[*k as usize - 1];
            if wk != wij {
                graded = false;
            }
            if wk < wij {
                filtered = false;
            }
        }
    }
    if graded {
        Flavor::Graded
    } else if filtered {
        Flavor::Filtered
    } else {
        Flavor::Plain
    }
}

fn format_terms(row: &BTreeMap<u16, Rational>) -> String {
    let mut out = String::new();
    for (k, c) in row {
        let mag = crate::exactla::matrix::abs(c);
        let sign_negative = c < &Rational::zero();
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else {
            out.push_str(if sign_negative { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(&format!("e{k}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Convert a 1-based basis vector to a 0-based sparse column.
pub(crate) fn vector_to_sparse(v: &Vector) -> SparseVec {
    v.iter().map(|(i, c)| (*i as usize - 1, c.clone())).collect()
}

/// Convert a 0-based sparse column to a 1-based basis vector.
pub(crate) fn sparse_to_vector(v: &SparseVec) -> Vector {
    v.iter().map(|(i, c)| (*i as u16 + 1, c.clone())).collect()
}

/// A strictly decreasing chain of subspaces, each containing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    ambient: usize,
    subspaces: Vec<LinearSubspace>,
}

impl Flag {
    pub fn new(ambient: usize, subspaces: Vec<LinearSubspace>) -> Result<Self> {
        for pair in subspaces.windows(2) {
            if pair[0].dim() <= pair[1].dim() {
                return Err(Error::InvalidInput(
                    "flag subspaces must strictly decrease in dimension".into(),
                ));
            }
            if !pair[0].contains_subspace(&pair[1]) {
                return Err(Error::InvalidInput(
                    "each flag subspace must contain the next".into(),
                ));
            }
        }
        if let Some(s) = subspaces.iter().find(|s| s.ambient() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "flag subspace ambient {} differs from {ambient}",
                s.ambient()
            )));
        }
        Ok(Flag { ambient, subspaces })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn subspaces(&self) -> &[LinearSubspace] {
        &self.subspaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(LinearSubspace::dim).collect()
    }
}

/// A lower-triangular change of basis with diagonal `(α, α², ..., αⁿ)`,
/// `α ≠ 0` — the transformations that act on positively filtered
/// deformations while preserving the flag of the original basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Vec<Vec<Rational>>,
}

impl BasisChange {
    /// Validate a dense matrix: square, lower-triangular, diagonal equal to
    /// consecutive powers of a single nonzero scalar.
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("basis change matrix must be square".into()));
        }
        for (r, row) in matrix.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if c > r && !v.is_zero() {
                    return Err(Error::InvalidInput(format!(
                        "basis change must be lower-triangular; entry ({r},{c}) is nonzero"
                    )));
                }
            }
        }
        let alpha = matrix[0][0].clone();
        if alpha.is_zero() {
            return Err(Error::InvalidInput("basis change scale α must be nonzero".into()));
        }
        let mut power = alpha.clone();
        for (r, row) in matrix.iter().enumerate() {
            if row[r] != power {
                return Err(Error::InvalidInput(format!(
                    "diagonal entry {r} must equal α^{}",
                    r + 1
                )));
            }
            power *= &alpha;
        }
        Ok(BasisChange { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(n, &Rational::one())
    }

    /// `e_i -> α^i e_i`.
    pub fn diagonal(n: usize, alpha: &Rational) -> Self {
        assert!(!alpha.is_zero(), "α must be nonzero");
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut power = alpha.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = power.clone();
            power *= alpha;
        }
        BasisChange { matrix: m }
    }

    /// `α = 1` with prescribed strictly-lower entries `(row, col) -> value`
    /// (1-based, row > col).
    pub fn unitriangular(n: usize, below: &[(u16, u16, Rational)]) -> Result<Self> {
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        for (r, c, v) in below {
            if !(1 <= *c && c < r && (*r as usize) <= n) {
                return Err(Error::InvalidInput(format!(
                    "unitriangular entry ({r},{c}) must satisfy 1 <= col < row <= {n}"
                )));
            }
            m[*r as usize - 1][*c as usize - 1] = v.clone();
        }
        Self::new(m)
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn alpha(&self) -> Rational {
        self.matrix[0][0].clone()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// Image of `e_i` as a sparse basis vector.
    pub fn column(&self, i: u16) -> Vector {
        let c = i as usize - 1;
        let mut v = Vector::new();
        for (r, row) in self.matrix.iter().enumerate() {
            if !row[c].is_zero() {
                v.insert(r as u16 + 1, row[c].clone());
            }
        }
        v
    }

    /// Matrix-vector application.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, a) in v {
            let c = *i as usize - 1;
            for (r, row) in self.matrix.iter().enumerate() {
                if row[c].is_zero() {
                    continue;
                }
                let slot = out.entry(r as u16 + 1).or_insert_with(Rational::zero);
                *slot += a * &row[c];
                if slot.is_zero() {
                    out.remove(&(r as u16 + 1));
                }
            }
        }
        out
    }

    /// `self ∘ other` as matrices: apply `other` first.
    pub fn compose(&self, other: &BasisChange) -> Result<BasisChange> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose basis changes of dimensions {n} and {}",
                other.n()
            )));
        }
        let mut m = vec![vec![Rational::zero(); n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = Rational::zero();
                for k in c..=r {
                    acc += &self.matrix[r][k] * &other.matrix[k][c];
                }
                m[r][c] = acc;
            }
        }
        BasisChange::new(m)
    }

    /// Exact inverse (always exists: the diagonal is nonzero).
    pub fn inverse(&self) -> BasisChange {
        let inv = crate::exactla::matrix::invert_dense(&self.matrix)
            .expect("triangular matrix with nonzero diagonal is invertible");
        BasisChange { matrix: inv }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn heisenberg3() -> LieAlgebra {
        LieAlgebra::new(
            "heis3",
            vec![1, 1, 2],
            Flavor::Graded,
            [((1u16, 2u16), vec![(3u16, rat(1, 1))])],
        )
        .unwrap()
    }

    fn heisenberg_plus_line() -> LieAlgebra {
        LieAlgebra::new(
            "heis3+R",
            vec![1, 1, 2, 1],
            Flavor::Graded,
            [((1u16, 2u16), vec![(3u16, rat(1, 1))])],
        )
        .unwrap()
    }

    fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::new("abelian", (1..=n as i64).collect(), Flavor::Plain, []).unwrap()
    }

    fn m0_like(n: u16) -> LieAlgebra {
        LieAlgebra::new(
            format!("chain{n}"),
            (1..=n as i64).collect(),
            Flavor::Graded,
            (2..n).map(|i| ((1u16, i), vec![(i + 1, rat(1, 1))])),
        )
        .unwrap()
    }

    fn m2_like(n: u16) -> LieAlgebra {
        let mut brackets: Vec<((u16, u16), Vec<(u16, Rational)>)> =
            (2..n).map(|i| ((1u16, i), vec![(i + 1, rat(1, 1))])).collect();
        for j in 3..=n - 2 {
            brackets.push(((2u16, j), vec![(j + 2, rat(1, 1))]));
        }
        LieAlgebra::new(format!("twostep{n}"), (1..=n as i64).collect(), Flavor::Plain, brackets)
            .unwrap()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(LieAlgebra::new("x", vec![1, -2], Flavor::Plain, []).is_err());
        assert!(
            LieAlgebra::new("x", vec![1, 2], Flavor::Plain, [((2u16, 1u16), vec![(1u16, rat(1, 1))])])
                .is_err()
        );
        assert!(
            LieAlgebra::new("x", vec![1, 2], Flavor::Plain, [((1u16, 2u16), vec![(5u16, rat(1, 1))])])
                .is_err()
        );
        // Graded flavor rejects a weight-violating constant.
        assert!(LieAlgebra::new(
            "x",
            vec![1, 1, 1],
            Flavor::Graded,
            [((1u16, 2u16), vec![(3u16, rat(1, 1))])]
        )
        .is_err());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric() {
        let g = heisenberg3();
        let x: Vector = [(1, rat(2, 1)), (2, rat(3, 1))].into();
        let y: Vector = [(1, rat(-1, 2)), (3, rat(5, 1))].into();
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        // [2e1 + 3e2, -e1/2 + 5e3] = -3/2 [e2,e1] = 3/2 e3.
        assert_eq!(xy, Vector::from([(3, rat(3, 2))]));
        assert_eq!(yx, Vector::from([(3, rat(-3, 2))]));
        assert!(g.bracket(&x, &x).unwrap().is_empty());
    }

    #[test]
    fn bracket_rejects_out_of_range_indices() {
        let g = heisenberg3();
        let bad: Vector = [(7, rat(1, 1))].into();
        assert!(g.bracket(&bad, &g.basis_vector(1)).is_err());
    }

    #[test]
    fn jacobi_residual_detects_non_lie_constants() {
        let g = heisenberg3();
        assert!(g.jacobi_residual().is_empty());
        // The chain algebra plus an uncompensated [e2,e3]=e4 fails Jacobi on
        // (1,2,3): [[e2,e3],e1] = [e4,e1] = -e5 with no cancelling term.
        let bad = LieAlgebra::new(
            "bad",
            vec![1, 2, 3, 4, 5],
            Flavor::Plain,
            [
                ((1u16, 2u16), vec![(3u16, rat(1, 1))]),
                ((1u16, 3u16), vec![(4u16, rat(1, 1))]),
                ((1u16, 4u16), vec![(5u16, rat(1, 1))]),
                ((2u16, 3u16), vec![(4u16, rat(1, 1))]),
            ],
        )
        .unwrap();
        let res = bad.jacobi_residual();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].0, (1, 2, 3));
        assert_eq!(res[0].1, Vector::from([(5, rat(-1, 1))]));
    }

    #[test]
    fn central_series_dims_of_chain_algebra() {
        let g = m0_like(6);
        assert_eq!(g.lower_central_series().dims(), vec![6, 4, 3, 2, 1, 0]);
        assert!(g.is_filiform());
    }

    #[test]
    fn central_series_of_abelian_and_split_algebras() {
        assert_eq!(abelian(4).lower_central_series().dims(), vec![4, 0]);
        assert!(!abelian(4).is_filiform());
        assert_eq!(heisenberg_plus_line().lower_central_series().dims(), vec![4, 1, 0]);
        assert!(!heisenberg_plus_line().is_filiform());
    }

    #[test]
    fn center_of_chain_and_abelian() {
        let g = m0_like(5);
        let z = g.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&SparseVec::from([(4, rat(1, 1))])));
        assert_eq!(abelian(3).center().dim(), 3);
    }

    #[test]
    fn associated_graded_of_graded_algebra_is_itself() {
        let g = m0_like(5);
        let gr = g.associated_graded(&g.weight_flag().unwrap()).unwrap();
        assert_eq!(gr, g);
        assert_eq!(gr.weights(), g.weights());
    }

    #[test]
    fn associated_graded_of_central_series_truncates_leading_terms() {
        let g = m2_like(6);
        let gr = g.associated_graded(&g.lower_central_series()).unwrap();
        assert_eq!(gr.brackets(), m0_like(6).brackets());
        assert_eq!(gr.weights(), &[1, 1, 2, 3, 4, 5]);
        assert_eq!(gr.flavor(), Flavor::Graded);
    }

    #[test]
    fn associated_graded_rejects_incompatible_flags() {
        let g = m0_like(4);
        // span(e1) is not an ideal-compatible tail: [F^1, F^2] escapes F^3.
        let flag = Flag::new(
            4,
            vec![
                LinearSubspace::full(4),
                LinearSubspace::from_vectors(4, vec![SparseVec::from([(0, rat(1, 1))])]),
            ],
        )
        .unwrap();
        assert!(g.associated_graded(&flag).is_err());
    }

    #[test]
    fn basis_change_validation() {
        assert!(BasisChange::new(vec![
            vec![rat(2, 1), rat(0, 1)],
            vec![rat(7, 1), rat(4, 1)],
        ])
        .is_ok());
        // Diagonal not powers of a single α.
        assert!(BasisChange::new(vec![
            vec![rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(3, 1)],
        ])
        .is_err());
        // Upper-triangular entry.
        assert!(BasisChange::new(vec![
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ])
        .is_err());
    }

    #[test]
    fn identity_and_diagonal_changes_fix_graded_algebras() {
        let g = m0_like(5);
        assert_eq!(g.apply_basis_change(&BasisChange::identity(5)).unwrap(), g);
        let scaled = g.apply_basis_change(&BasisChange::diagonal(5, &rat(3, 1))).unwrap();
        assert_eq!(scaled, g);
        assert_eq!(scaled.flavor(), Flavor::Graded);
    }

    #[test]
    fn basis_change_round_trip_is_exact() {
        let g = m2_like(7);
        let phi = BasisChange::unitriangular(
            7,
            &[(3, 1, rat(5, 2)), (4, 2, rat(-1, 3)), (7, 1, rat(11, 1))],
        )
        .unwrap();
        let moved = g.apply_basis_change(&phi).unwrap();
        let back = moved.apply_basis_change(&phi.inverse()).unwrap();
        assert_eq!(back, g);
        assert_eq!(phi.compose(&phi.inverse()).unwrap(), BasisChange::identity(7));
    }

    #[test]
    fn flag_validation() {
        let full = LinearSubspace::full(3);
        let line = LinearSubspace::from_vectors(3, vec![SparseVec::from([(2, rat(1, 1))])]);
        assert!(Flag::new(3, vec![full.clone(), line.clone()]).is_ok());
        assert!(Flag::new(3, vec![line.clone(), full.clone()]).is_err());
        let other_line = LinearSubspace::from_vectors(3, vec![SparseVec::from([(0, rat(1, 1))])]);
        let plane = LinearSubspace::from_vectors(
            3,
            vec![SparseVec::from([(1, rat(1, 1))]), SparseVec::from([(2, rat(1, 1))])],
        );
        assert!(Flag::new(3, vec![plane, other_line]).is_err());
    }

    #[test]
    fn bracket_lines_render_signs_and_coefficients() {
        let g = LieAlgebra::new(
            "fmt",
            vec![1, 2, 3, 3],
            Flavor::Plain,
            [((1u16, 2u16), vec![(3u16, rat(-3, 2)), (4u16, rat(1, 1))])],
        )
        .unwrap();
        assert_eq!(g.bracket_lines(), vec!["[e1,e2] = -3/2 e3 + e4"]);
    }
}
