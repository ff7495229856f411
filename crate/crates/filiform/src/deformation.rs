//! Nijenhuis–Richardson bracket, the deformation equation, Massey
//! obstructions, and the moduli arithmetic of ℤ>0-filtered deformations
//! of `V(n)`.
//!
//! A filtered deformation `Ψ = Ψ₁ + Ψ₂ + ⋯` collects homogeneous adjoint
//! 2-cochains of strictly positive weight; `[,] + Ψ` is a Lie bracket iff
//! the residual `dΨ + ½[Ψ,Ψ]` vanishes. For `n ≥ 16` every such
//! deformation of `V(n)` is equivalent, under the unitriangular group, to
//! `Σ xᵢ ψ_{n,12-i}`; [`canonicalize`] computes the five coordinates and
//! the basis-change trail, and [`moduli_normal_form`] / [`orbit_equivalent`]
//! handle the residual weighted ℚ*-scaling action
//! `x_i ↦ α^{n-12+i} x_i`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cohomology::{
    cochain_basis, cohomology_block, combinations, differential, differential_matrix_between,
    perm_sign, Cochain, Coefficients, MonomialKey,
};
use crate::exactla::{
    factorize_u64, format_rational, rat, rational_roots, Rational, SparseMatrix,
};
use crate::liealg::{BasisChange, Flavor, LieAlgebra};
use crate::{Error, Result};

/// A ℤ>0-filtered deformation: homogeneous adjoint 2-cochain components
/// `Ψ_l`, indexed by their strictly positive weight `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct Deformation {
    n: usize,
    components: BTreeMap<i64, Cochain>,
}

impl Deformation {
    pub fn zero(n: usize) -> Self {
        Deformation { n, components: BTreeMap::new() }
    }

    /// Split a (possibly inhomogeneous) adjoint 2-cochain by weight under
    /// `g0`'s grading. Errors unless every component has weight ≥ 1.
    pub fn from_cochain(g0: &LieAlgebra, c: &Cochain) -> Result<Self> {
        if c.degree() != 2 || c.coefficients() != Coefficients::Adjoint {
            return Err(Error::InvalidInput(
                "a deformation is an adjoint 2-cochain".into(),
            ));
        }
        if c.n() != g0.n() {
            return Err(Error::DimensionMismatch(format!(
                "deformation on n={} against an algebra of dimension {}",
                c.n(),
                g0.n()
            )));
        }
        let mut components = BTreeMap::new();
        for (l, part) in c.weight_components(g0) {
            if l < 1 {
                return Err(Error::InvalidInput(format!(
                    "a ℤ>0-filtered deformation has strictly positive weights; \
                     found a component of weight {l}"
                )));
            }
            components.insert(l, part);
        }
        Ok(Deformation { n: g0.n(), components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &BTreeMap<i64, Cochain> {
        &self.components
    }

    /// The weight-`l` component (zero when absent).
    pub fn component(&self, l: i64) -> Cochain {
        self.components
            .get(&l)
            .cloned()
            .unwrap_or_else(|| Cochain::zero(self.n, 2, Coefficients::Adjoint))
    }

    /// Sum of all components as one cochain.
    pub fn total(&self) -> Cochain {
        let mut out = Cochain::zero(self.n, 2, Coefficients::Adjoint);
        for part in self.components.values() {
            out = out.add(part).expect("components share n/degree/coefficients");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(Cochain::is_zero)
    }

    /// Weights with a nonzero component, ascending.
    pub fn weights(&self) -> Vec<i64> {
        self.components.iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| *l).collect()
    }
}

/// The insertion product `a ∘̄ b`: feed `b`'s output into each argument
/// slot of `a`, alternating over all shuffles of the arguments.
fn insertion(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    let p = a.degree();
    let q = b.degree();
    let n = a.n();
    let deg = p + q - 1;
    let mut out = Cochain::zero(n, deg, Coefficients::Adjoint);
    if q > deg {
        // `a` has no argument slots (p = 0): the insertion vanishes.
        return Ok(out);
    }
    for u in combinations(n as u16, deg) {
        let mut acc: BTreeMap<u16, Rational> = BTreeMap::new();
        for comb in combinations(deg as u16, q) {
            let pos: Vec<usize> = comb.iter().map(|&t| t as usize - 1).collect();
            let inner: Vec<u16> = pos.iter().map(|&t| u[t]).collect();
            let rest_pos: Vec<usize> = (0..deg).filter(|t| !pos.contains(t)).collect();
            let rest: Vec<u16> = rest_pos.iter().map(|&t| u[t]).collect();
            let mut perm = pos.clone();
            perm.extend(&rest_pos);
            let sign = perm_sign(&perm);
            for (mid, bc) in b.eval_adjoint(&inner) {
                let mut args = Vec::with_capacity(p);
                args.push(mid);
                args.extend_from_slice(&rest);
                for (tgt, ac) in a.eval_adjoint(&args) {
                    let mut term = &bc * &ac;
                    if sign < 0 {
                        term = -term;
                    }
                    *acc.entry(tgt).or_insert_with(Rational::zero) += term;
                }
            }
        }
        for (tgt, v) in acc {
            if !v.is_zero() {
                out.add_term(&u, Some(tgt), v)?;
            }
        }
    }
    Ok(out)
}

/// The Nijenhuis–Richardson bracket `[a, b] = a ∘̄ b + (-1)^{pq+p+q} b ∘̄ a`
/// of adjoint cochains. Weight-additive on homogeneous inputs and
/// super-antisymmetric: `[a,b] = -(-1)^{(p-1)(q-1)}[b,a]`.
pub fn nr_bracket(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    if a.coefficients() != Coefficients::Adjoint || b.coefficients() != Coefficients::Adjoint {
        return Err(Error::InvalidInput(
            "the Nijenhuis–Richardson bracket is defined for adjoint cochains".into(),
        ));
    }
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "NR bracket of cochains on n={} and n={}",
            a.n(),
            b.n()
        )));
    }
    let (p, q) = (a.degree(), b.degree());
    if p + q == 0 {
        return Err(Error::InvalidInput(
            "the NR bracket needs cochain degrees with p + q >= 1".into(),
        ));
    }
    let first = insertion(a, b)?;
    let second = insertion(b, a)?;
    let sign = if (p * q + p + q) % 2 == 0 { 1 } else { -1 };
    first.add(&second.scale(&rat(sign, 1)))
}

/// `dΨ + ½[Ψ,Ψ]`: zero iff `[,] + Ψ` satisfies the Jacobi identity.
pub fn deformation_residual(g0: &LieAlgebra, psi: &Deformation) -> Result<Cochain> {
    if g0.flavor() != Flavor::Graded {
        return Err(Error::PreconditionFailed(format!(
            "the deformation residual needs a graded base algebra, got {}",
            g0.flavor()
        )));
    }
    if let Some(((i, j, k), _)) = g0.jacobi_residual().first() {
        return Err(Error::JacobiFails(format!(
            "base algebra {} violates Jacobi at (e{i}, e{j}, e{k})",
            g0.name()
        )));
    }
    let total = psi.total();
    let d = differential(g0, &total)?;
    let nr = nr_bracket(&total, &total)?;
    d.add(&nr.scale(&rat(1, 2)))
}

/// Build the algebra `[,] + Ψ`. The residual must vanish; a nonzero
/// residual reports its lowest failing weight.
pub fn deform(g0: &LieAlgebra, psi: &Cochain) -> Result<LieAlgebra> {
    let def = Deformation::from_cochain(g0, psi)?;
    let residual = deformation_residual(g0, &def)?;
    if !residual.is_zero() {
        let w = residual
            .weight_components(g0)
            .into_iter()
            .find(|(_, c)| !c.is_zero())
            .map(|(w, _)| w)
            .expect("nonzero residual has a nonzero component");
        return Err(Error::ResidualNonzero(format!(
            "dΨ + ½[Ψ,Ψ] ≠ 0, first at weight {w}"
        )));
    }
    if psi.is_zero() {
        return Ok(g0.clone());
    }
    let mut brackets = g0.brackets().clone();
    for ((args, target), c) in psi.entries() {
        let (i, j) = (args[0], args[1]);
        let t = target.expect("adjoint entries carry targets");
        let slot = brackets.entry((i, j)).or_default();
        let v = slot.entry(t).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            slot.remove(&t);
        }
    }
    brackets.retain(|_, terms| !terms.is_empty());
    LieAlgebra::new(
        format!("deform({})", g0.name()),
        g0.weights().to_vec(),
        Flavor::Filtered,
        brackets.into_iter().map(|(k, terms)| (k, terms.into_iter().collect::<Vec<_>>())),
    )
}

/// The difference of structure constants `g − g0` as a deformation;
/// inverse of [`deform`]. Errors when `g` is not a ℤ>0-filtered
/// deformation of `g0` (weights must match and every difference must
/// raise weight).
pub fn extract_deformation(g: &LieAlgebra, g0: &LieAlgebra) -> Result<Deformation> {
    if g.n() != g0.n() || g.weights() != g0.weights() {
        return Err(Error::DimensionMismatch(format!(
            "cannot extract a deformation: {} and {} differ in dimension or weights",
            g.name(),
            g0.name()
        )));
    }
    let mut diff = Cochain::zero(g0.n(), 2, Coefficients::Adjoint);
    let keys: std::collections::BTreeSet<(u16, u16)> =
        g.brackets().keys().chain(g0.brackets().keys()).copied().collect();
    for (i, j) in keys {
        let new = g.bracket_pair(i, j);
        let base = g0.bracket_pair(i, j);
        let targets: std::collections::BTreeSet<u16> =
            new.keys().chain(base.keys()).copied().collect();
        for t in targets {
            let c = new.get(&t).cloned().unwrap_or_else(Rational::zero)
                - base.get(&t).cloned().unwrap_or_else(Rational::zero);
            if !c.is_zero() {
                diff.add_term(&[i, j], Some(t), c)?;
            }
        }
    }
    Deformation::from_cochain(g0, &diff)
}

/// Differential of the deformed algebra `deform(g0, Ψ)` applied to `c`;
/// block-triangular in the weight grading of `g0`.
pub fn deformed_differential(g0: &LieAlgebra, psi: &Cochain, c: &Cochain) -> Result<Cochain> {
    let g = deform(g0, psi)?;
    differential(&g, c)
}

/// A Massey obstruction: the weight-`k` class blocking the next step of a
/// weight-by-weight solution of the deformation equation.
#[derive(Debug, Clone)]
pub struct ObstructionClass {
    weight: i64,
    representative: Cochain,
    coordinates: Vec<Rational>,
}

impl ObstructionClass {
    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// The raw cocycle `-½ Σ_{m+l=k} [Ψ_m, Ψ_l]`.
    pub fn representative(&self) -> &Cochain {
        &self.representative
    }

    /// Coordinates in the deterministic `H³` representative basis of the
    /// weight block.
    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }

    /// A zero class means the partial deformation extends one more step.
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }
}

/// The order-`k` Massey obstruction of a partial deformation `Ψ₁..Ψ_{k-1}`
/// (components of weight ≥ `k` are ignored): the class of
/// `-½ Σ_{m+l=k} [Ψ_m, Ψ_l]` in `H³_(k)`. Requires the first `k-1`
/// deformation equations `dΨ_i + ½ Σ_{m+l=i} [Ψ_m, Ψ_l] = 0`.
pub fn massey_obstruction(
    g0: &LieAlgebra,
    partial: &Deformation,
    k: i64,
) -> Result<ObstructionClass> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "Massey obstructions start at order k = 2, got {k}"
        )));
    }
    if partial.n() != g0.n() {
        return Err(Error::DimensionMismatch(format!(
            "partial deformation on n={} against an algebra of dimension {}",
            partial.n(),
            g0.n()
        )));
    }
    let half_sum = |i: i64| -> Result<Cochain> {
        let mut sum = Cochain::zero(g0.n(), 3, Coefficients::Adjoint);
        for m in 1..i {
            let a = partial.component(m);
            let b = partial.component(i - m);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            sum = sum.add(&nr_bracket(&a, &b)?)?;
        }
        Ok(sum.scale(&rat(1, 2)))
    };
    for i in 1..k {
        let lhs = differential(g0, &partial.component(i))?.add(&half_sum(i)?)?;
        if !lhs.is_zero() {
            return Err(Error::PreconditionFailed(format!(
                "the deformation equation fails first at weight {i}"
            )));
        }
    }
    let ob = half_sum(k)?.scale(&rat(-1, 1));
    if !is_closed_cochain(g0, &ob)? {
        return Err(Error::Internal(
            "Massey obstruction cocycle is not closed despite valid preconditions".into(),
        ));
    }
    // Class coordinates: solve ob = d(C²_(k)) + Σ cᵢ·repᵢ with the block's
    // deterministic H³ representatives appended after the coboundary columns.
    let c3 = cochain_basis(g0, 3, Coefficients::Adjoint, Some(k));
    let block = cohomology_block(g0, 3, k, Coefficients::Adjoint)?;
    let reps = &block.representatives;
    if c3.is_empty() {
        return Ok(ObstructionClass { weight: k, representative: ob, coordinates: Vec::new() });
    }
    let c2 = cochain_basis(g0, 2, Coefficients::Adjoint, Some(k));
    let d2 = differential_matrix_between(g0, &c2, &c3, 2, Coefficients::Adjoint)?;
    let mut m = SparseMatrix::zero(c3.len(), c2.len() + reps.len());
    for ((r, c), v) in d2.entries() {
        m.set(*r, *c, v.clone());
    }
    for (ri, rep) in reps.iter().enumerate() {
        for (row, v) in rep.coordinates(&c3)? {
            m.set(row, c2.len() + ri, v);
        }
    }
    let rhs = ob.coordinates(&c3)?;
    let sol = m.solve(&rhs).ok_or_else(|| {
        Error::Internal("closed obstruction cocycle escaped Z³ = B³ ⊕ representatives".into())
    })?;
    let coordinates =
        (0..reps.len()).map(|ri| sol.get(&(c2.len() + ri)).cloned().unwrap_or_else(Rational::zero)).collect();
    Ok(ObstructionClass { weight: k, representative: ob, coordinates })
}

fn is_closed_cochain(g: &LieAlgebra, c: &Cochain) -> Result<bool> {
    Ok(differential(g, c)?.is_zero())
}

/// A point of the moduli space: the coordinates `(x₁..x₅)` of a
/// canonicalized deformation of `V(n)`, `n ≥ 16`. The scaling action gives
/// `x_i` the weight `n-12+i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliPoint {
    n: usize,
    x: [Rational; 5],
}

impl ModuliPoint {
    pub fn new(n: usize, x: [Rational; 5]) -> Result<Self> {
        if n < 16 {
            return Err(Error::UnsupportedDimension(format!(
                "moduli points are defined for n >= 16, got {n}"
            )));
        }
        Ok(ModuliPoint { n, x })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &[Rational; 5] {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(Zero::is_zero)
    }

    /// Scaling weight of the `i`-th coordinate (1-based): `n - 12 + i`.
    pub fn weight(&self, i: usize) -> i64 {
        self.n as i64 - 12 + i as i64
    }
}

impl std::fmt::Display for ModuliPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coords: Vec<String> = self.x.iter().map(format_rational).collect();
        write!(f, "({})", coords.join(", "))
    }
}

/// The canonical deformation `Σ xᵢ ψ_{n,12-i}` attached to coordinates.
pub fn moduli_deformation(n: usize, x: &[Rational; 5]) -> Result<Cochain> {
    let mut out = Cochain::zero(n, 2, Coefficients::Adjoint);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        out = out.add(&crate::catalog::psi(n, 11 - i)?.scale(xi))?;
    }
    Ok(out)
}

/// The unitriangular change `e_i ↦ e_i + φ(e_i)` attached to a
/// positive-weight adjoint 1-cochain `φ`.
pub fn basis_change_from_one_cochain(phi: &Cochain) -> Result<BasisChange> {
    if phi.degree() != 1 || phi.coefficients() != Coefficients::Adjoint {
        return Err(Error::InvalidInput(
            "id + φ needs an adjoint 1-cochain".into(),
        ));
    }
    let mut below = Vec::new();
    for ((args, target), c) in phi.entries() {
        let j = args[0];
        let t = target.expect("adjoint entries carry targets");
        if t <= j {
            return Err(Error::InvalidInput(format!(
                "id + φ is unitriangular only for index-raising φ; found e{t}⊗e^{j}"
            )));
        }
        below.push((t, j, c.clone()));
    }
    BasisChange::unitriangular(phi.n(), &below)
}

/// Canonicalize a residual-zero deformation of `V(n)`, `n ≥ 16`: sweep the
/// weights `l = 1..n-3`, solving `dφ_l = Ψ_l` off the moduli window and the
/// augmented system `dφ_l + x·ψ_{n,12-i} = Ψ_l` (ψ column appended last,
/// free variables zero) at the window weights `l = n-12+i`, applying
/// `id + φ_l` exactly and re-extracting after every step. Returns the five
/// coordinates and the applied basis changes in order.
pub fn canonicalize(psi: &Deformation) -> Result<(ModuliPoint, Vec<BasisChange>)> {
    let n = psi.n();
    if n < 16 {
        return Err(Error::UnsupportedDimension(format!(
            "canonicalization requires n >= 16; n = {n} carries extra weight-1 \
             cohomology and is outside the five-coordinate moduli description"
        )));
    }
    let g0 = crate::catalog::v(n)?;
    let residual = deformation_residual(&g0, psi)?;
    if !residual.is_zero() {
        return Err(Error::ResidualNonzero(
            "canonicalization needs dΨ + ½[Ψ,Ψ] = 0".into(),
        ));
    }
    let mut cur = psi.total();
    let mut x: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
    let mut trail = Vec::new();
    for l in 1..=(n as i64 - 3) {
        let cur_l = cur.weight_part(&g0, l);
        let window = l - (n as i64 - 12);
        let in_window = (1..=5).contains(&window);
        if cur_l.is_zero() {
            continue;
        }
        let c1 = cochain_basis(&g0, 1, Coefficients::Adjoint, Some(l));
        let c2 = cochain_basis(&g0, 2, Coefficients::Adjoint, Some(l));
        let d1 = differential_matrix_between(&g0, &c1, &c2, 1, Coefficients::Adjoint)?;
        let cols = c1.len() + usize::from(in_window);
        let mut m = SparseMatrix::zero(c2.len(), cols);
        for ((r, c), v) in d1.entries() {
            m.set(*r, *c, v.clone());
        }
        if in_window {
            let rep = crate::catalog::psi(n, (12 - window) as usize)?;
            for (row, v) in rep.coordinates(&c2)? {
                m.set(row, c1.len(), v);
            }
        }
        let rhs = cur_l.coordinates(&c2)?;
        let Some(mut sol) = m.solve(&rhs) else {
            return Err(Error::UnsolvableStep(format!(
                "the weight-{l} step has no solution; the input is not a residual-zero \
                 filtered deformation of V({n})"
            )));
        };
        if in_window {
            let xi = sol.remove(&c1.len()).unwrap_or_else(Rational::zero);
            x[(window - 1) as usize] = xi;
        }
        let phi = Cochain::from_coordinates(n, 1, Coefficients::Adjoint, &c1, &sol);
        if phi.is_zero() {
            continue;
        }
        let bc = basis_change_from_one_cochain(&phi)?;
        let g_cur = deform(&g0, &cur)?;
        let g_new = g_cur.apply_basis_change(&bc)?;
        cur = extract_deformation(&g_new, &g0)?.total();
        trail.push(bc);
    }
    let point = ModuliPoint::new(n, x)?;
    let expect = moduli_deformation(n, point.x())?;
    if cur != expect {
        return Err(Error::Internal(
            "canonicalization left a non-canonical remainder".into(),
        ));
    }
    Ok((point, trail))
}

/// Answer of the orbit-equivalence test under the weighted scaling action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitAnswer {
    /// Both points are the origin: every `α ∈ ℚ*` works.
    Any,
    /// The nonempty set of scalars `α` with `q_i = α^{n-12+i} p_i`.
    Scalars(Vec<Rational>),
    /// No rational scalar maps `p` to `q`.
    NotEquivalent,
}

impl OrbitAnswer {
    pub fn is_equivalent(&self) -> bool {
        !matches!(self, OrbitAnswer::NotEquivalent)
    }
}

fn rat_pow(a: &Rational, e: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= a;
    }
    out
}

/// All `α ∈ ℚ*` with `q_i = α^{n-12+i} p_i` for every `i`: candidate roots
/// are taken at the first common nonzero coordinate and verified on all
/// five. Mismatched supports are never equivalent.
pub fn orbit_equivalent(p: &ModuliPoint, q: &ModuliPoint) -> Result<OrbitAnswer> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(format!(
            "moduli points live at n = {} and n = {}",
            p.n(),
            q.n()
        )));
    }
    let support_p: Vec<usize> = (0..5).filter(|&i| !p.x()[i].is_zero()).collect();
    let support_q: Vec<usize> = (0..5).filter(|&i| !q.x()[i].is_zero()).collect();
    if support_p != support_q {
        return Ok(OrbitAnswer::NotEquivalent);
    }
    let Some(&i0) = support_p.first() else {
        return Ok(OrbitAnswer::Any);
    };
    let w = p.weight(i0 + 1) as u32;
    let ratio = &q.x()[i0] / &p.x()[i0];
    let mut scalars = Vec::new();
    for alpha in rational_roots(&ratio, w)? {
        if alpha.is_zero() {
            continue;
        }
        let matches = (0..5).all(|i| {
            q.x()[i] == rat_pow(&alpha, p.weight(i + 1) as u32) * &p.x()[i]
        });
        if matches {
            scalars.push(alpha);
        }
    }
    if scalars.is_empty() {
        Ok(OrbitAnswer::NotEquivalent)
    } else {
        Ok(OrbitAnswer::Scalars(scalars))
    }
}

/// Signed prime exponents of a nonzero rational.
fn signed_factorization(x: &Rational) -> Result<BTreeMap<u64, i64>> {
    let to_u64 = |v: num_bigint::BigInt, what: &str| -> Result<u64> {
        v.to_u64().ok_or_else(|| {
            Error::FactorizationOverflow(format!("{what} does not fit in 64 bits"))
        })
    };
    let mut out: BTreeMap<u64, i64> = BTreeMap::new();
    for (p, e) in factorize_u64(to_u64(x.numer().abs(), "numerator")?)? {
        *out.entry(p).or_insert(0) += e as i64;
    }
    for (p, e) in factorize_u64(to_u64(x.denom().clone(), "denominator")?)? {
        *out.entry(p).or_insert(0) -= e as i64;
    }
    Ok(out)
}

/// The canonical representative of a point's ℚ*-orbit: reduce the first
/// nonzero coordinate's prime exponents modulo its weight `w`; for odd `w`
/// fix the sign positive, for even `w` pick the lexicographically smaller
/// of the two candidate images.
pub fn moduli_normal_form(p: &ModuliPoint) -> Result<ModuliPoint> {
    let n = p.n() as i64;
    let Some(i0) = (0..5).find(|&i| !p.x()[i].is_zero()) else {
        return Ok(p.clone());
    };
    let w = (n - 12 + i0 as i64 + 1) as u32;
    let mut alpha = Rational::one();
    for (prime, e) in signed_factorization(&p.x()[i0])? {
        let k = e.div_euclid(w as i64);
        let power = num_bigint::BigInt::from(prime).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            alpha /= Rational::from(power);
        } else {
            alpha *= Rational::from(power);
        }
    }
    let image = |alpha: &Rational| -> [Rational; 5] {
        std::array::from_fn(|i| rat_pow(alpha, (n - 12 + i as i64 + 1) as u32) * &p.x()[i])
    };
    let mut y = image(&alpha);
    if w % 2 == 1 {
        if y[i0].is_negative() {
            y = image(&-alpha);
        }
    } else {
        let y_neg = image(&-alpha.clone());
        if y_neg.as_slice() < y.as_slice() {
            y = y_neg;
        }
    }
    ModuliPoint::new(p.n(), y)
}

/// True iff the deformation at `p` is non-singular: at most one coordinate
/// nonzero (the union of the five coordinate lines).
pub fn nonsingular_classify(p: &ModuliPoint) -> bool {
    p.x().iter().filter(|v| !v.is_zero()).count() <= 1
}

/// Exact dimensions at a residual-zero deformation `Ψ` of a graded `g0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangentDims {
    /// `dim ker d_Ψ` on the positive-weight 1-cochains.
    pub kernel_c1_pos: usize,
    /// Orbit dimension: `rank d_Ψ` on the positive-weight 1-cochains.
    pub orbit_dim: usize,
    /// `dim Z²` on the positive-weight 2-cochains.
    pub z2_pos: usize,
    /// `dim ker d_Ψ` on the 1-cochains of weight ≥ 0 (the stabilizer).
    pub stabilizer_dim: usize,
}

/// Kernel/rank dimensions of the deformed differential on the
/// positive-weight (and, for the stabilizer, weight ≥ 0) blocks.
pub fn tangent_dims(g0: &LieAlgebra, psi: &Cochain) -> Result<TangentDims> {
    let g = deform(g0, psi)?;
    let filtered = |q: usize, min_weight: i64| -> Vec<MonomialKey> {
        cochain_basis(&g, q, Coefficients::Adjoint, None)
            .into_iter()
            .filter(|k| Cochain::monomial_weight(&g, k) >= min_weight)
            .collect()
    };
    let c1_pos = filtered(1, 1);
    let c2_pos = filtered(2, 1);
    let c3_pos = filtered(3, 1);
    let d1 = differential_matrix_between(&g, &c1_pos, &c2_pos, 1, Coefficients::Adjoint)?;
    let orbit_dim = d1.rank();
    let d2 = differential_matrix_between(&g, &c2_pos, &c3_pos, 2, Coefficients::Adjoint)?;
    let z2_pos = c2_pos.len() - d2.rank();
    let c1_ge0 = filtered(1, 0);
    let c2_ge0 = filtered(2, 0);
    let d1_stab = differential_matrix_between(&g, &c1_ge0, &c2_ge0, 1, Coefficients::Adjoint)?;
    let stabilizer_dim = c1_ge0.len() - d1_stab.rank();
    Ok(TangentDims {
        kernel_c1_pos: c1_pos.len() - orbit_dim,
        orbit_dim,
        z2_pos,
        stabilizer_dim,
    })
}

/// The classical kernel basis of `d_Ψ` on positive-weight 1-cochains:
/// `d(e_1)..d(e_{n-1})` together with the three tail operators
/// `e_n⊗e²`, `e_{n-1}⊗e² + (n-2) e_n⊗e³`, and
/// `e_{n-2}⊗e² + (n-3) e_{n-1}⊗e³ + ½(n-2)(n-3) e_n⊗e⁴`.
pub fn printed_kernel_basis(g: &LieAlgebra) -> Result<Vec<Cochain>> {
    let n = g.n();
    if n < 5 {
        return Err(Error::InvalidInput(format!(
            "the printed kernel basis needs n >= 5, got {n}"
        )));
    }
    let big = n as i64;
    let top = n as u16;
    let mut out = Vec::new();
    for i in 1..top {
        let e_i = Cochain::adjoint(n, 0, [(vec![], i, Rational::one())])?;
        out.push(differential(g, &e_i)?);
    }
    out.push(Cochain::adjoint(n, 1, [(vec![2], top, Rational::one())])?);
    out.push(Cochain::adjoint(
        n,
        1,
        [(vec![2], top - 1, Rational::one()), (vec![3], top, rat(big - 2, 1))],
    )?);
    out.push(Cochain::adjoint(
        n,
        1,
        [
            (vec![2], top - 2, Rational::one()),
            (vec![3], top - 1, rat(big - 3, 1)),
            (vec![4], top, rat((big - 2) * (big - 3), 2)),
        ],
    )?);
    Ok(out)
}

/// Rank of a list of 1-cochains inside an explicit monomial basis.
pub fn cochain_rank(vectors: &[Cochain], basis: &[MonomialKey]) -> Result<usize> {
    let mut m = SparseMatrix::zero(vectors.len(), basis.len());
    for (r, v) in vectors.iter().enumerate() {
        for (c, val) in v.coordinates(basis)? {
            m.set(r, c, val);
        }
    }
    Ok(m.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_point(rng: &mut ChaCha8Rng) -> [Rational; 5] {
        std::array::from_fn(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
    }

    #[test]
    fn nr_bracket_of_basic_cocycles_vanishes() {
        let psi7 = catalog::psi(16, 7).unwrap();
        let psi9 = catalog::psi(16, 9).unwrap();
        assert!(nr_bracket(&psi7, &psi9).unwrap().is_zero());
        assert!(nr_bracket(&psi7, &psi7).unwrap().is_zero());
    }

    #[test]
    fn half_self_bracket_is_the_cyclic_composition() {
        // ½[Ψ,Ψ](x,y,z) = Ψ(Ψ(x,y),z) + Ψ(Ψ(y,z),x) + Ψ(Ψ(z,x),y).
        let n = 8;
        let mut psi = Cochain::zero(n, 2, Coefficients::Adjoint);
        psi.add_term(&[2, 3], Some(6), rat(1, 1)).unwrap();
        psi.add_term(&[2, 4], Some(7), rat(-2, 1)).unwrap();
        psi.add_term(&[3, 4], Some(8), rat(5, 2)).unwrap();
        let half = nr_bracket(&psi, &psi).unwrap().scale(&rat(1, 2));
        for args in crate::cohomology::combinations(n as u16, 3) {
            let (x, y, z) = (args[0], args[1], args[2]);
            let mut expect: BTreeMap<u16, Rational> = BTreeMap::new();
            for (inner, outer) in [([x, y], z), ([y, z], x), ([z, x], y)] {
                for (mid, c) in psi.eval_adjoint(&inner) {
                    for (tgt, c2) in psi.eval_adjoint(&[mid, outer]) {
                        *expect.entry(tgt).or_insert_with(Rational::zero) += &c * &c2;
                    }
                }
            }
            expect.retain(|_, v| !v.is_zero());
            assert_eq!(half.eval_adjoint(&args), expect, "mismatch at {args:?}");
        }
    }

    #[test]
    fn residual_vanishes_on_canonical_deformations_and_flags_bad_ones() {
        let g0 = catalog::v(16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = random_point(&mut rng);
        let psi = moduli_deformation(16, &x).unwrap();
        let def = Deformation::from_cochain(&g0, &psi).unwrap();
        assert!(deformation_residual(&g0, &def).unwrap().is_zero());
        // A non-closed single term has residual dΨ ≠ 0.
        let mut bad = Cochain::zero(16, 2, Coefficients::Adjoint);
        bad.add_term(&[2, 3], Some(9), rat(1, 1)).unwrap();
        let bad_def = Deformation::from_cochain(&g0, &bad).unwrap();
        let res = deformation_residual(&g0, &bad_def).unwrap();
        assert!(!res.is_zero());
        assert!(matches!(deform(&g0, &bad), Err(Error::ResidualNonzero(_))));
    }

    #[test]
    fn deform_and_extract_are_mutually_inverse() {
        let g0 = catalog::v(16).unwrap();
        let x = [rat(1, 1), rat(0, 1), rat(-2, 3), rat(0, 1), rat(5, 1)];
        let psi = moduli_deformation(16, &x).unwrap();
        let g = deform(&g0, &psi).unwrap();
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(5)).unwrap()[&7],
            rat(3, 1)
        );
        let back = extract_deformation(&g, &g0).unwrap();
        assert_eq!(back.total(), psi);
        assert!(extract_deformation(&g0, &g0).unwrap().is_zero());
    }

    #[test]
    fn deform_with_x5_matches_the_printed_row() {
        let g0 = catalog::v(16).unwrap();
        let x5 = rat(4, 7);
        let psi = catalog::psi(16, 7).unwrap().scale(&x5);
        let g = deform(&g0, &psi).unwrap();
        let b25 = g.bracket(&g.basis_vector(2), &g.basis_vector(5)).unwrap();
        assert_eq!(b25[&7], rat(3, 1));
        assert_eq!(b25[&16], x5.clone());
        let b34 = g.bracket(&g.basis_vector(3), &g.basis_vector(4)).unwrap();
        assert_eq!(b34[&7], rat(1, 1));
        assert_eq!(b34[&16], rat(-3, 1) * &x5);
    }

    #[test]
    fn deformed_differential_reduces_to_plain_differential_at_zero() {
        let g0 = catalog::v(12).unwrap();
        let zero = Cochain::zero(12, 2, Coefficients::Adjoint);
        let c = catalog::psi(12, 8).unwrap();
        assert_eq!(
            deformed_differential(&g0, &zero, &c).unwrap(),
            differential(&g0, &c).unwrap()
        );
    }

    #[test]
    fn canonicalize_recovers_coordinates_after_unitriangular_churn() {
        let n = 16;
        let g0 = catalog::v(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = random_point(&mut rng);
        let psi = moduli_deformation(n, &x).unwrap();
        let mut below = Vec::new();
        for _ in 0..6 {
            let i = rng.gen_range(1..n as u16);
            let m = rng.gen_range(i + 1..=n as u16);
            below.push((m, i, rat(rng.gen_range(-2..=2), 1)));
        }
        let bc = BasisChange::unitriangular(n, &below).unwrap();
        let g1 = deform(&g0, &psi).unwrap().apply_basis_change(&bc).unwrap();
        let extracted = extract_deformation(&g1, &g0).unwrap();
        let (point, _trail) = canonicalize(&extracted).unwrap();
        assert_eq!(point.x(), &x);
        // Idempotence: the canonical deformation canonicalizes to itself.
        let canonical = Deformation::from_cochain(&g0, &psi).unwrap();
        let (again, trail) = canonicalize(&canonical).unwrap();
        assert_eq!(again.x(), &x);
        assert!(trail.is_empty());
    }

    #[test]
    fn canonicalize_sends_pure_coboundaries_to_zero() {
        let n = 16;
        let g0 = catalog::v(n).unwrap();
        let bc = BasisChange::unitriangular(
            n,
            &[(5, 2, rat(3, 1)), (9, 4, rat(-1, 2)), (16, 1, rat(2, 1))],
        )
        .unwrap();
        let g1 = g0.apply_basis_change(&bc).unwrap();
        let extracted = extract_deformation(&g1, &g0).unwrap();
        let (point, _) = canonicalize(&extracted).unwrap();
        assert!(point.is_zero());
    }

    #[test]
    fn canonicalize_rejects_small_n() {
        let err = canonicalize(&Deformation::zero(13)).unwrap_err();
        assert!(matches!(err, Error::UnsupportedDimension(_)));
    }

    #[test]
    fn scaling_pullback_matches_the_weighted_action() {
        // Pullback by diag(α^{-i}) scales the weight-w component by α^w, so
        // it realizes the moduli action y_i = α^{n-12+i} x_i.
        let n = 16;
        let g0 = catalog::v(n).unwrap();
        let x = [rat(1, 1), rat(-2, 1), rat(0, 1), rat(3, 1), rat(1, 2)];
        let psi = moduli_deformation(n, &x).unwrap();
        let alpha = rat(2, 1);
        let bc = BasisChange::diagonal(n, &rat(1, 2));
        let g1 = deform(&g0, &psi).unwrap().apply_basis_change(&bc).unwrap();
        let pulled = extract_deformation(&g1, &g0).unwrap().total();
        let y: [Rational; 5] =
            std::array::from_fn(|i| rat_pow(&alpha, (n as i64 - 12 + i as i64 + 1) as u32) * &x[i]);
        assert_eq!(pulled, moduli_deformation(n, &y).unwrap());
    }

    #[test]
    fn orbit_equivalence_examples() {
        let zero: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
        let mk = |x: [Rational; 5]| ModuliPoint::new(16, x).unwrap();
        let p = mk([rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        let q64 = mk([rat(0, 1), rat(64, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        let q2 = mk([rat(0, 1), rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        match orbit_equivalent(&p, &q64).unwrap() {
            OrbitAnswer::Scalars(s) => assert_eq!(s, vec![rat(-2, 1), rat(2, 1)]),
            other => panic!("expected scalars, got {other:?}"),
        }
        assert_eq!(orbit_equivalent(&p, &q2).unwrap(), OrbitAnswer::NotEquivalent);
        assert_eq!(
            orbit_equivalent(&mk(zero.clone()), &mk(zero.clone())).unwrap(),
            OrbitAnswer::Any
        );
        assert_eq!(orbit_equivalent(&mk(zero), &p).unwrap(), OrbitAnswer::NotEquivalent);
    }

    #[test]
    fn normal_form_examples() {
        let mk = |x: [Rational; 5]| ModuliPoint::new(16, x).unwrap();
        let p = mk([rat(0, 1), rat(64, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(
            moduli_normal_form(&p).unwrap().x(),
            &[rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]
        );
        let q = mk([rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 1)]);
        assert_eq!(
            moduli_normal_form(&q).unwrap().x(),
            &[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]
        );
        let zero = mk(std::array::from_fn(|_| Rational::zero()));
        assert_eq!(moduli_normal_form(&zero).unwrap(), zero);
    }

    #[test]
    fn normal_form_agrees_with_orbit_equivalence_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let x = random_point(&mut rng);
            let p = ModuliPoint::new(16, x.clone()).unwrap();
            let alpha = rat(*[2, 3, -2, 5].iter().nth(rng.gen_range(0..4)).unwrap(), 1);
            let y: [Rational; 5] = std::array::from_fn(|i| {
                rat_pow(&alpha, (16 - 12 + i as i64 + 1) as u32) * &x[i]
            });
            let q = ModuliPoint::new(16, y).unwrap();
            assert!(orbit_equivalent(&p, &q).unwrap().is_equivalent());
            assert_eq!(moduli_normal_form(&p).unwrap(), moduli_normal_form(&q).unwrap());
        }
    }

    #[test]
    fn nonsingular_points_are_the_coordinate_axes() {
        let mk = |x: [Rational; 5]| ModuliPoint::new(16, x).unwrap();
        assert!(nonsingular_classify(&mk([
            rat(0, 1),
            rat(0, 1),
            rat(3, 1),
            rat(0, 1),
            rat(0, 1)
        ])));
        assert!(!nonsingular_classify(&mk([
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1)
        ])));
        assert!(nonsingular_classify(&mk(std::array::from_fn(|_| Rational::zero()))));
    }

    #[test]
    fn massey_obstructions_vanish_on_extendable_partials() {
        let g0 = catalog::v(16).unwrap();
        let zero = massey_obstruction(&g0, &Deformation::zero(16), 3).unwrap();
        assert!(zero.is_zero());
        // ψ₁₆,₁₁ at its own weight 5: [Ψ₅,Ψ₅] = 0, so order 10 is unobstructed.
        let psi11 = catalog::psi(16, 11).unwrap();
        let partial = Deformation::from_cochain(&g0, &psi11).unwrap();
        let ob = massey_obstruction(&g0, &partial, 10).unwrap();
        assert_eq!(ob.weight(), 10);
        assert!(ob.is_zero());
    }

    #[test]
    fn massey_precondition_reports_first_failing_weight() {
        let g0 = catalog::v(16).unwrap();
        let mut bad = Cochain::zero(16, 2, Coefficients::Adjoint);
        bad.add_term(&[2, 3], Some(9), rat(1, 1)).unwrap();
        let partial = Deformation::from_cochain(&g0, &bad).unwrap();
        let err = massey_obstruction(&g0, &partial, 6).unwrap_err();
        match err {
            Error::PreconditionFailed(msg) => assert!(msg.contains("weight 4"), "{msg}"),
            other => panic!("expected precondition failure, got {other}"),
        }
    }

    #[test]
    fn tangent_dims_reproduce_the_variety_dimensions() {
        let n = 16;
        let g0 = catalog::v(n).unwrap();
        let x = [rat(1, 1), rat(-2, 1), rat(0, 1), rat(3, 1), rat(1, 1)];
        let psi = moduli_deformation(n, &x).unwrap();
        let dims = tangent_dims(&g0, &psi).unwrap();
        assert_eq!(dims.kernel_c1_pos, 18);
        assert_eq!(dims.orbit_dim, 102);
        assert_eq!(dims.z2_pos, 107);
        assert_eq!(dims.stabilizer_dim, 18);
        let zero = Cochain::zero(n, 2, Coefficients::Adjoint);
        let at_zero = tangent_dims(&g0, &zero).unwrap();
        assert_eq!(at_zero.stabilizer_dim, n + 3);
    }

    #[test]
    fn printed_kernel_basis_lies_in_the_kernel_with_full_rank() {
        let n = 16;
        let g0 = catalog::v(n).unwrap();
        let psi = moduli_deformation(
            n,
            &[rat(1, 1), rat(0, 1), rat(2, 1), rat(0, 1), rat(-1, 1)],
        )
        .unwrap();
        let g = deform(&g0, &psi).unwrap();
        let basis = printed_kernel_basis(&g).unwrap();
        assert_eq!(basis.len(), n + 2);
        for v in &basis {
            assert!(differential(&g, v).unwrap().is_zero());
        }
        let c1_pos: Vec<MonomialKey> = cochain_basis(&g, 1, Coefficients::Adjoint, None)
            .into_iter()
            .filter(|k| Cochain::monomial_weight(&g, k) > 0)
            .collect();
        assert_eq!(cochain_rank(&basis, &c1_pos).unwrap(), 18);
    }
}
