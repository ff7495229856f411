//! Chevalley–Eilenberg cochain complexes with trivial and adjoint
//! coefficients, graded by weight.
//!
//! The differential follows the convention
//!
//! ```text
//! (d f)(X_1, ..., X_{q+1}) = Σ_{i<j} (-1)^{i+j-1} f([X_i, X_j], X_1, ..î..ĵ.., X_{q+1})
//!                          + Σ_i    (-1)^i       [X_i, f(X_1, ..î.., X_{q+1})]
//! ```
//!
//! (the adjoint action term is absent for trivial coefficients), which
//! yields `d e^3 = e^1 ∧ e^2` on the chain algebras — most textbooks use
//! the opposite global sign. All dimension and vanishing statements are
//! convention-independent; signs of representatives are not, and golden
//! values are pinned to this convention.
//!
//! A weight-`μ` homogeneous cochain satisfies `Σ w(args) = μ` (trivial
//! coefficients) or `w(target) − Σ w(args) = μ` (adjoint coefficients);
//! on a graded algebra the differential preserves `μ`, and every block
//! `C^q_{(μ)}` is small even when the ungraded `C^q` is large.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactla::{format_rational, LinearSubspace, Rational, SparseMatrix, SparseVec};
use crate::liealg::{Flavor, LieAlgebra};
use crate::{Error, Result};

pub use crate::deformation::deformed_differential;

/// Coefficient module of the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coefficients {
    /// Scalar coefficients: cochains are exterior forms.
    Trivial,
    /// The adjoint module: cochains are alternating maps into the algebra.
    Adjoint,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Trivial => "trivial",
            Coefficients::Adjoint => "adjoint",
        })
    }
}

impl std::str::FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Coefficients::Trivial),
            "adjoint" => Ok(Coefficients::Adjoint),
            other => Err(Error::Parse(format!(
                "unknown coefficient system {other:?}; expected trivial or adjoint"
            ))),
        }
    }
}

/// Monomial index of a cochain entry: strictly increasing argument tuple,
/// plus the target basis index for adjoint coefficients.
pub type MonomialKey = (Vec<u16>, Option<u16>);

/// A `q`-cochain: finitely many monomials with rational coefficients.
/// Argument tuples are kept strictly increasing; no zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    n: usize,
    degree: usize,
    coefficients: Coefficients,
    entries: BTreeMap<MonomialKey, Rational>,
}

impl Cochain {
    pub fn zero(n: usize, degree: usize, coefficients: Coefficients) -> Self {
        Cochain { n, degree, coefficients, entries: BTreeMap::new() }
    }

    /// Build a trivial-coefficient form from (tuple, coefficient) pairs.
    /// Tuples are sorted with sign; repeated indices annihilate the term.
    pub fn form(
        n: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u16>, Rational)>,
    ) -> Result<Self> {
        let mut c = Cochain::zero(n, degree, Coefficients::Trivial);
        for (args, v) in terms {
            c.add_term(&args, None, v)?;
        }
        Ok(c)
    }

    /// Build an adjoint cochain from (tuple, target, coefficient) triples.
    pub fn adjoint(
        n: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u16>, u16, Rational)>,
    ) -> Result<Self> {
        let mut c = Cochain::zero(n, degree, Coefficients::Adjoint);
        for (args, target, v) in terms {
            c.add_term(&args, Some(target), v)?;
        }
        Ok(c)
    }

    /// `e_target ⊗ form`: promote a trivial form to an adjoint cochain.
    pub fn tensor(target: u16, form: &Cochain) -> Result<Self> {
        if form.coefficients != Coefficients::Trivial {
            return Err(Error::InvalidInput("tensor expects a trivial-coefficient form".into()));
        }
        let mut c = Cochain::zero(form.n, form.degree, Coefficients::Adjoint);
        for ((args, _), v) in &form.entries {
            c.add_term(args, Some(target), v.clone())?;
        }
        Ok(c)
    }

    /// Accumulate one term, normalizing the argument order.
    pub fn add_term(&mut self, args: &[u16], target: Option<u16>, v: Rational) -> Result<()> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "expected {} arguments, got {}",
                self.degree,
                args.len()
            )));
        }
        if target.is_some() != (self.coefficients == Coefficients::Adjoint) {
            return Err(Error::InvalidInput(
                "target index must be present exactly for adjoint coefficients".into(),
            ));
        }
        for &a in args.iter().chain(target.iter()) {
            if a == 0 || a as usize > self.n {
                return Err(Error::DimensionMismatch(format!(
                    "basis index e{a} outside 1..={}",
                    self.n
                )));
            }
        }
        let Some((sorted, sign)) = sort_sign(args) else {
            return Ok(()); // repeated argument: the alternating term is zero
        };
        let v = if sign < 0 { -v } else { v };
        if v.is_zero() {
            return Ok(());
        }
        let key = (sorted, target);
        let slot = self.entries.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn entries(&self) -> &BTreeMap<MonomialKey, Rational> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficient(&self, args: &[u16], target: Option<u16>) -> Rational {
        let Some((sorted, sign)) = sort_sign(args) else { return Rational::zero() };
        let v = self.entries.get(&(sorted, target)).cloned().unwrap_or_else(Rational::zero);
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.compatible(other)?;
        let mut out = self.clone();
        for ((args, target), v) in &other.entries {
            out.add_term(args, *target, v.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        if s.is_zero() {
            return Cochain::zero(self.n, self.degree, self.coefficients);
        }
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v *= s;
        }
        out
    }

    fn compatible(&self, other: &Cochain) -> Result<()> {
        if self.n != other.n || self.degree != other.degree || self.coefficients != other.coefficients
        {
            return Err(Error::DimensionMismatch(format!(
                "cannot combine a degree-{} {} cochain on n={} with a degree-{} {} cochain on n={}",
                self.degree, self.coefficients, self.n, other.degree, other.coefficients, other.n
            )));
        }
        Ok(())
    }

    /// Evaluate a trivial form on a basis tuple.
    pub fn eval_form(&self, args: &[u16]) -> Rational {
        debug_assert_eq!(self.coefficients, Coefficients::Trivial);
        self.coefficient(args, None)
    }

    /// Evaluate an adjoint cochain on a basis tuple: target -> coefficient.
    pub fn eval_adjoint(&self, args: &[u16]) -> BTreeMap<u16, Rational> {
        debug_assert_eq!(self.coefficients, Coefficients::Adjoint);
        let Some((sorted, sign)) = sort_sign(args) else { return BTreeMap::new() };
        let mut out = BTreeMap::new();
        let lo = (sorted.clone(), Some(0u16));
        let hi = (sorted, Some(u16::MAX));
        for ((_, target), v) in self.entries.range(lo..=hi) {
            let t = target.expect("adjoint entries carry targets");
            let v = if sign < 0 { -v.clone() } else { v.clone() };
            out.insert(t, v);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Exterior product of trivial forms.
    pub fn wedge(&self, other: &Cochain) -> Result<Cochain> {
        if self.coefficients != Coefficients::Trivial || other.coefficients != Coefficients::Trivial
        {
            return Err(Error::InvalidInput("wedge is defined for trivial forms".into()));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "wedge of forms on n={} and n={}",
                self.n, other.n
            )));
        }
        let mut out = Cochain::zero(self.n, self.degree + other.degree, Coefficients::Trivial);
        for ((t1, _), a) in &self.entries {
            for ((t2, _), b) in &other.entries {
                let mut args = t1.clone();
                args.extend_from_slice(t2);
                out.add_term(&args, None, a * b)?;
            }
        }
        Ok(out)
    }

    /// Weight of one monomial of this cochain under `g`'s weights.
    pub fn monomial_weight(g: &LieAlgebra, key: &MonomialKey) -> i64 {
        let (args, target) = key;
        let args_w: i64 = args.iter().map(|&i| g.weight(i)).sum();
        match target {
            None => args_w,
            Some(t) => g.weight(*t) - args_w,
        }
    }

    /// The weight when homogeneous and nonzero; `None` otherwise.
    pub fn weight(&self, g: &LieAlgebra) -> Option<i64> {
        let mut it = self.entries.keys().map(|k| Self::monomial_weight(g, k));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Split into homogeneous components by weight.
    pub fn weight_components(&self, g: &LieAlgebra) -> BTreeMap<i64, Cochain> {
        let mut out: BTreeMap<i64, Cochain> = BTreeMap::new();
        for (key, v) in &self.entries {
            let w = Self::monomial_weight(g, key);
            let slot = out
                .entry(w)
                .or_insert_with(|| Cochain::zero(self.n, self.degree, self.coefficients));
            slot.entries.insert(key.clone(), v.clone());
        }
        out
    }

    /// The single weight-`w` component (zero cochain when absent).
    pub fn weight_part(&self, g: &LieAlgebra, w: i64) -> Cochain {
        self.weight_components(g)
            .remove(&w)
            .unwrap_or_else(|| Cochain::zero(self.n, self.degree, self.coefficients))
    }

    /// Coordinates with respect to an explicit monomial basis; errors when a
    /// monomial of `self` falls outside the basis.
    pub fn coordinates(&self, basis: &[MonomialKey]) -> Result<SparseVec> {
        let index: BTreeMap<&MonomialKey, usize> =
            basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut v = SparseVec::new();
        for (key, c) in &self.entries {
            let Some(&i) = index.get(key) else {
                return Err(Error::Internal(format!(
                    "monomial {key:?} does not belong to the given basis"
                )));
            };
            v.insert(i, c.clone());
        }
        Ok(v)
    }

    /// Inverse of [`Cochain::coordinates`].
    pub fn from_coordinates(
        n: usize,
        degree: usize,
        coefficients: Coefficients,
        basis: &[MonomialKey],
        coords: &SparseVec,
    ) -> Cochain {
        let mut c = Cochain::zero(n, degree, coefficients);
        for (i, v) in coords {
            let (args, target) = &basis[*i];
            c.add_term(args, *target, v.clone()).expect("basis keys are valid");
        }
        c
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((args, target), v) in &self.entries {
            let neg = v.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = if neg { -v.clone() } else { v.clone() };
            if !mag.is_one() || args.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
                if !args.is_empty() {
                    f.write_str(" ")?;
                }
            }
            let mono =
                args.iter().map(|i| format!("e^{i}")).collect::<Vec<_>>().join("^");
            f.write_str(&mono)?;
            if let Some(t) = target {
                if args.is_empty() {
                    write!(f, "e_{t}")?;
                } else {
                    write!(f, " (x) e_{t}")?;
                }
            }
        }
        Ok(())
    }
}

/// Sort a tuple, returning the sorted tuple and the permutation sign, or
/// `None` when an index repeats.
pub(crate) fn sort_sign(t: &[u16]) -> Option<(Vec<u16>, i32)> {
    let mut t = t.to_vec();
    let mut sign = 1;
    for i in 0..t.len() {
        for j in 0..t.len().saturating_sub(1 + i) {
            match t[j].cmp(&t[j + 1]) {
                std::cmp::Ordering::Greater => {
                    t.swap(j, j + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some((t, sign))
}

/// Sign of a permutation of `0..len` (used for shuffle signs).
pub(crate) fn perm_sign(perm: &[usize]) -> i32 {
    let mut p = perm.to_vec();
    let mut s = 1;
    for i in 0..p.len() {
        while p[i] != i {
            let j = p[i];
            p.swap(i, j);
            s = -s;
        }
    }
    s
}

/// The Chevalley–Eilenberg differential (see the module conventions).
pub fn differential(g: &LieAlgebra, c: &Cochain) -> Result<Cochain> {
    if c.n() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "cochain on n={} applied to algebra of dimension {}",
            c.n(),
            g.n()
        )));
    }
    let mut out = Cochain::zero(c.n(), c.degree() + 1, c.coefficients());
    for ((args, target), a) in c.entries() {
        // Bracket-insertion part: replace one argument e_w by every pair
        // (e_u, e_v) whose bracket hits e_w.
        for (r, &w) in args.iter().enumerate() {
            let rest: Vec<u16> = args.iter().copied().filter(|&t| t != w).collect();
            let Some(pairs) = g.by_target().get(&w) else { continue };
            for ((u, v), gamma) in pairs {
                if rest.contains(u) || rest.contains(v) {
                    continue;
                }
                let mut widened = rest.clone();
                widened.push(*u);
                widened.push(*v);
                let Some((uu, _)) = sort_sign(&widened) else { continue };
                let i = uu.iter().position(|t| t == u).unwrap() + 1;
                let j = uu.iter().position(|t| t == v).unwrap() + 1;
                let mut sign = if (i + j - 1) % 2 == 0 { 1 } else { -1 };
                if r % 2 == 1 {
                    sign = -sign;
                }
                let term = a * gamma * Rational::from_integer(sign.into());
                out.add_term(&uu, *target, term)?;
            }
        }
        // Adjoint-action part: bracket the target with every absent e_u.
        if let Some(m) = target {
            for u in 1..=g.n() as u16 {
                if args.contains(&u) {
                    continue;
                }
                let mut widened = args.clone();
                widened.push(u);
                let (uu, _) = sort_sign(&widened).expect("u is not among the arguments");
                let i = uu.iter().position(|t| *t == u).unwrap() + 1;
                let row_sign = if i % 2 == 0 { 1 } else { -1 };
                for (k, beta) in g.bracket_pair(u, *m) {
                    let term = a * &beta * Rational::from_integer(row_sign.into());
                    out.add_term(&uu, Some(k), term)?;
                }
            }
        }
    }
    Ok(out)
}

/// All strictly increasing `q`-tuples in `1..=n`, lexicographic.
pub(crate) fn combinations(n: u16, q: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    if q > n as usize {
        return out;
    }
    let mut cur: Vec<u16> = (1..=q as u16).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that can still move.
        let mut i = q;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (q - 1 - i) as u16 {
                cur[i] += 1;
                for k in i + 1..q {
                    cur[k] = cur[k - 1] + 1;
                }
                break;
            }
        }
        if q == 0 {
            return out;
        }
    }
}

/// Monomial basis of `C^q` (all weights) or of the block `C^q_{(μ)}`.
/// Trivial coefficients at `q = 0` consist of the constants (weight 0).
pub fn cochain_basis(
    g: &LieAlgebra,
    q: usize,
    coefficients: Coefficients,
    mu: Option<i64>,
) -> Vec<MonomialKey> {
    let n = g.n() as u16;
    let mut out = Vec::new();
    for args in combinations(n, q) {
        let args_w: i64 = args.iter().map(|&i| g.weight(i)).sum();
        match coefficients {
            Coefficients::Trivial => {
                if mu.is_none() || mu == Some(args_w) {
                    out.push((args.clone(), None));
                }
            }
            Coefficients::Adjoint => {
                for m in 1..=n {
                    let w = g.weight(m) - args_w;
                    if mu.is_none() || mu == Some(w) {
                        out.push((args.clone(), Some(m)));
                    }
                }
            }
        }
    }
    out
}

/// Matrix of `d : C^q_{(μ)} → C^{q+1}_{(μ)}` (or of the full `C^q → C^{q+1}`
/// when `μ` is `None`) in the monomial bases: columns index the source
/// basis, rows the target basis.
pub fn differential_matrix(
    g: &LieAlgebra,
    q: usize,
    mu: Option<i64>,
    coefficients: Coefficients,
) -> Result<SparseMatrix> {
    let src = cochain_basis(g, q, coefficients, mu);
    let tgt = cochain_basis(g, q + 1, coefficients, mu);
    differential_matrix_between(g, &src, &tgt, q, coefficients)
}

/// Matrix of the differential between explicit bases (columns = `src`).
pub(crate) fn differential_matrix_between(
    g: &LieAlgebra,
    src: &[MonomialKey],
    tgt: &[MonomialKey],
    q: usize,
    coefficients: Coefficients,
) -> Result<SparseMatrix> {
    let tix: BTreeMap<&MonomialKey, usize> = tgt.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = SparseMatrix::zero(tgt.len(), src.len());
    for (col, (args, target)) in src.iter().enumerate() {
        let mut unit = Cochain::zero(g.n(), q, coefficients);
        unit.add_term(args, *target, Rational::one())?;
        let image = differential(g, &unit)?;
        for (key, v) in image.entries() {
            let Some(&row) = tix.get(key) else {
                return Err(Error::Internal(format!(
                    "differential leaks outside the target block at {key:?}"
                )));
            };
            m.set(row, col, v.clone());
        }
    }
    Ok(m)
}

/// Dimensions and representatives for one weight block. `weight` is
/// `None` for the aggregate block of a non-graded algebra, whose
/// differential mixes weights.
#[derive(Debug, Clone)]
pub struct WeightReport {
    pub weight: Option<i64>,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
    /// Deterministic representatives of a basis of `H`: kernel vectors, in
    /// monomial order, that extend a basis of the coboundaries.
    pub representatives: Vec<Cochain>,
}

/// Cohomology of one degree, reported per weight.
#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub degree: usize,
    pub coefficients: Coefficients,
    pub weights: Vec<WeightReport>,
}

impl CohomologyReport {
    pub fn total_h(&self) -> usize {
        self.weights.iter().map(|w| w.dim_h).sum()
    }

    /// `(weight, dim H)` for the graded weights with nonzero cohomology.
    pub fn h_weights(&self) -> Vec<(i64, usize)> {
        self.weights
            .iter()
            .filter(|w| w.dim_h > 0)
            .filter_map(|w| w.weight.map(|mu| (mu, w.dim_h)))
            .collect()
    }

    pub fn weight_report(&self, mu: i64) -> Option<&WeightReport> {
        self.weights.iter().find(|w| w.weight == Some(mu))
    }
}

/// All weights with a nonempty `C^q_{(μ)}` block.
pub fn weight_range(g: &LieAlgebra, q: usize, coefficients: Coefficients) -> Vec<i64> {
    let mut ws: std::collections::BTreeSet<i64> = std::collections::BTreeSet::new();
    for key in cochain_basis(g, q, coefficients, None) {
        ws.insert(Cochain::monomial_weight(g, &key));
    }
    ws.into_iter().collect()
}

/// Cohomology of one weight block, with representatives. Requires a
/// graded algebra: only there does the differential preserve the weight
/// decomposition. Use [`cohomology_full`] for filtered or plain algebras.
pub fn cohomology_block(
    g: &LieAlgebra,
    q: usize,
    mu: i64,
    coefficients: Coefficients,
) -> Result<WeightReport> {
    if g.flavor() != Flavor::Graded {
        return Err(Error::InvalidInput(format!(
            "per-weight cohomology needs a graded algebra; {} is {}",
            g.name(),
            g.flavor()
        )));
    }
    block_report(g, q, Some(mu), coefficients)
}

/// Cohomology of the full (ungraded) cochain space in one block. Works
/// for every flavor; this is the only per-degree report available when
/// the differential does not preserve weights.
pub fn cohomology_full(
    g: &LieAlgebra,
    q: usize,
    coefficients: Coefficients,
) -> Result<WeightReport> {
    block_report(g, q, None, coefficients)
}

fn block_report(
    g: &LieAlgebra,
    q: usize,
    mu: Option<i64>,
    coefficients: Coefficients,
) -> Result<WeightReport> {
    let src = cochain_basis(g, q, coefficients, mu);
    let d_q = differential_matrix(g, q, mu, coefficients)?;
    let kernel = d_q.kernel_basis();
    let dim_z = kernel.dim();
    // Coboundaries: column span of the incoming differential.
    let boundaries: Vec<SparseVec> = if q == 0 {
        Vec::new()
    } else {
        let prev = cochain_basis(g, q - 1, coefficients, mu);
        let d_prev = differential_matrix(g, q - 1, mu, coefficients)?;
        (0..prev.len())
            .map(|col| {
                let mut unit = SparseVec::new();
                unit.insert(col, Rational::one());
                d_prev.mul_vec(&unit)
            })
            .collect()
    };
    let b_space = LinearSubspace::from_vectors(src.len(), boundaries);
    let dim_b = b_space.dim();
    let mut representatives = Vec::new();
    let mut span = b_space;
    for v in kernel.basis() {
        if !span.contains(v) {
            representatives.push(Cochain::from_coordinates(g.n(), q, coefficients, &src, v));
            let mut gens: Vec<SparseVec> = span.basis().to_vec();
            gens.push(v.clone());
            span = LinearSubspace::from_vectors(src.len(), gens);
        }
    }
    debug_assert_eq!(representatives.len(), dim_z - dim_b);
    Ok(WeightReport {
        weight: mu,
        dim_cochains: src.len(),
        dim_cocycles: dim_z,
        dim_coboundaries: dim_b,
        dim_h: dim_z - dim_b,
        representatives,
    })
}

/// Cohomology of degree `q`: per weight for graded algebras, one
/// aggregate block otherwise.
pub fn cohomology(g: &LieAlgebra, q: usize, coefficients: Coefficients) -> Result<CohomologyReport> {
    let mut weights = Vec::new();
    if g.flavor() == Flavor::Graded {
        for mu in weight_range(g, q, coefficients) {
            weights.push(cohomology_block(g, q, mu, coefficients)?);
        }
    } else {
        weights.push(cohomology_full(g, q, coefficients)?);
    }
    Ok(CohomologyReport { degree: q, coefficients, weights })
}

/// True iff `d c = 0`.
pub fn is_cocycle(g: &LieAlgebra, c: &Cochain) -> Result<bool> {
    Ok(differential(g, c)?.is_zero())
}

/// A deterministic `φ` with `d φ = c`, or `None` when `c` is not a
/// coboundary. Solved weight block by weight block; free variables are
/// set to zero.
pub fn coboundary_preimage(g: &LieAlgebra, c: &Cochain) -> Result<Option<Cochain>> {
    let q = c.degree();
    if q == 0 {
        return Ok(if c.is_zero() { None } else { None });
    }
    let mut total = Cochain::zero(c.n(), q - 1, c.coefficients());
    for (mu, comp) in c.weight_components(g) {
        let src = cochain_basis(g, q - 1, c.coefficients(), Some(mu));
        let tgt = cochain_basis(g, q, c.coefficients(), Some(mu));
        let m = differential_matrix_between(g, &src, &tgt, q - 1, c.coefficients())?;
        let rhs = comp.coordinates(&tgt)?;
        let Some(solution) = m.solve(&rhs) else { return Ok(None) };
        let phi = Cochain::from_coordinates(c.n(), q - 1, c.coefficients(), &src, &solution);
        total = total.add(&phi)?;
    }
    Ok(Some(total))
}
