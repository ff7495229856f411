//! Symplectic and contact structures on nilpotent Lie algebras.
//!
//! A 2-form `ω` is symplectic when it is closed (`dω = 0`) and
//! nondegenerate (the skew matrix `ω(e_i, e_j)` has nonzero determinant).
//! Everything here is exact: closedness is a differential in `cohomology`,
//! nondegeneracy is a fraction-free skew determinant, and the negative
//! branch of the existence decision is a certificate, not a failed search.
//!
//! The module also builds one-dimensional central extensions `g ×_c Q`
//! from closed 2-forms — the bridge between even-dimensional symplectic
//! algebras and odd-dimensional filiform ones — and tests contact forms
//! `θ ∧ (dθ)^k ≠ 0` on odd-dimensional algebras.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{
    cochain_basis, differential, differential_matrix, Cochain, Coefficients,
};
use crate::exactla::{format_rational, Rational, SparseMatrix};
use crate::liealg::{BasisChange, Flavor, LieAlgebra, Vector};
use crate::{Error, Result};

/// Number of random closed forms tried by [`symplectic_decision`] before
/// answering `Undecided`.
pub const DEFAULT_TRIALS: usize = 64;

/// Outcome of the symplectic existence decision.
///
/// `Exists` carries a witness that has been re-verified closed and
/// nondegenerate. `CertifiedNone` carries an exact proof of nonexistence:
/// every closed 2-form annihilates a central vector, so no closed form can
/// be nondegenerate. `Undecided` is an honest "not found in N random
/// trials" and is *not* evidence of nonexistence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticDecision {
    /// A verified symplectic form.
    Exists(Cochain),
    /// No symplectic form exists; the string states the certificate.
    CertifiedNone(String),
    /// No witness found in `trials` random samples; existence is open.
    Undecided { trials: usize },
}

impl SymplecticDecision {
    pub fn is_exists(&self) -> bool {
        matches!(self, SymplecticDecision::Exists(_))
    }

    pub fn is_certified_none(&self) -> bool {
        matches!(self, SymplecticDecision::CertifiedNone(_))
    }
}

fn check_trivial_form(g: &LieAlgebra, c: &Cochain, degree: usize, what: &str) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "{what} lives on dimension {}, algebra has dimension {}",
            c.n(),
            g.n()
        )));
    }
    if c.coefficients() != Coefficients::Trivial || c.degree() != degree {
        return Err(Error::InvalidInput(format!(
            "{what} must be a degree-{degree} form with trivial coefficients"
        )));
    }
    Ok(())
}

/// Whether the 2-form `ω` is closed, i.e. `dω = 0`.
pub fn is_closed(g: &LieAlgebra, omega: &Cochain) -> Result<bool> {
    check_trivial_form(g, omega, 2, "the 2-form")?;
    Ok(differential(g, omega)?.is_zero())
}

/// Whether the 2-form `ω` is nondegenerate: the `n × n` skew matrix
/// `ω(e_i, e_j)` has nonzero determinant. Always false in odd dimension.
pub fn nondegenerate(g: &LieAlgebra, omega: &Cochain) -> Result<bool> {
    check_trivial_form(g, omega, 2, "the 2-form")?;
    let n = g.n();
    if n % 2 == 1 {
        return Ok(false);
    }
    let mut m = SparseMatrix::zero(n, n);
    for ((args, _), c) in omega.entries() {
        let (i, j) = (args[0] as usize, args[1] as usize);
        m.set(i - 1, j - 1, c.clone());
        m.set(j - 1, i - 1, -c.clone());
    }
    Ok(!m.skew_determinant()?.is_zero())
}

/// A basis of the space `Z²` of *all* closed 2-forms (every weight),
/// computed as the exact kernel of the trivial-coefficient differential
/// `d: C² → C³`.
pub fn closed_two_form_basis(g: &LieAlgebra) -> Result<Vec<Cochain>> {
    let basis = cochain_basis(g, 2, Coefficients::Trivial, None);
    let d = differential_matrix(g, 2, None, Coefficients::Trivial)?;
    Ok(d.kernel_basis()
        .basis()
        .iter()
        .map(|v| Cochain::from_coordinates(g.n(), 2, Coefficients::Trivial, &basis, v))
        .collect())
}

/// Interior product `ι_v ω` of a 2-form with a vector: the 1-form
/// `x ↦ ω(v, x)`.
pub fn contraction(omega: &Cochain, v: &Vector) -> Result<Cochain> {
    if omega.coefficients() != Coefficients::Trivial || omega.degree() != 2 {
        return Err(Error::InvalidInput(
            "contraction expects a 2-form with trivial coefficients".into(),
        ));
    }
    let n = omega.n() as u16;
    if let Some(i) = v.keys().find(|&&i| i == 0 || i > n) {
        return Err(Error::DimensionMismatch(format!(
            "vector index e{i} outside 1..={n}"
        )));
    }
    let mut out = Cochain::zero(omega.n(), 1, Coefficients::Trivial);
    for x in 1..=n {
        let mut val = Rational::zero();
        for (i, vi) in v {
            val += vi * omega.eval_form(&[*i, x]);
        }
        if !val.is_zero() {
            out.add_term(&[x], None, val)?;
        }
    }
    Ok(out)
}

fn vector_display(v: &Vector) -> String {
    let mut parts = Vec::new();
    for (i, c) in v {
        if c.is_one() {
            parts.push(format!("e{i}"));
        } else {
            parts.push(format!("{} e{i}", format_rational(c)));
        }
    }
    parts.join(" + ")
}

/// Decide whether `g` carries a symplectic form.
///
/// Requires even dimension and a genuine Lie algebra (Jacobi holds).
/// The procedure is:
///
/// 1. compute an exact basis of the closed 2-forms `Z²`;
/// 2. if some central vector `v` satisfies `ι_v ω = 0` for every `ω ∈ Z²`,
///    no closed form can be nondegenerate — return `CertifiedNone`;
/// 3. otherwise sample `trials` random integer combinations of the `Z²`
///    basis (coefficients in `-3..=3`, `ChaCha8` stream from `seed`) and
///    return the first nondegenerate one, re-verified, as `Exists`;
/// 4. give up honestly with `Undecided`.
///
/// The certificate in step 2 is sound: a symplectic form is itself a
/// closed form, and nondegeneracy forces `ι_v ω ≠ 0` for every `v ≠ 0`.
pub fn symplectic_decision(
    g: &LieAlgebra,
    seed: u64,
    trials: usize,
) -> Result<SymplecticDecision> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::PreconditionFailed(format!(
            "symplectic decision needs even dimension, got {n}"
        )));
    }
    if let Some(((i, j, k), _)) = g.jacobi_residual().first() {
        return Err(Error::PreconditionFailed(format!(
            "the Jacobi identity fails at (e{i}, e{j}, e{k})"
        )));
    }

    let z2 = closed_two_form_basis(g)?;

    for col in g.center().basis() {
        let v: Vector = col
            .iter()
            .map(|(r, c)| (*r as u16 + 1, c.clone()))
            .collect();
        if z2.iter().map(|z| contraction(z, &v)).try_fold(true, |acc, c| {
            c.map(|c| acc && c.is_zero())
        })? {
            return Ok(SymplecticDecision::CertifiedNone(format!(
                "every closed 2-form contracts to zero with the central vector {}",
                vector_display(&v)
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut omega = Cochain::zero(n, 2, Coefficients::Trivial);
        for z in &z2 {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                omega = omega.add(&z.scale(&Rational::from_integer(c.into())))?;
            }
        }
        if nondegenerate(g, &omega)? {
            if !is_closed(g, &omega)? {
                return Err(Error::Internal(
                    "sampled witness escaped the closed-form span".into(),
                ));
            }
            return Ok(SymplecticDecision::Exists(omega));
        }
    }
    Ok(SymplecticDecision::Undecided { trials })
}

/// The one-dimensional central extension of `g` by the closed 2-form `c`:
/// the algebra on `e_1, …, e_{n+1}` with
/// `[x, y] = [x, y]_g + c(x, y) e_{n+1}` and `e_{n+1}` central.
///
/// The new generator receives the weight of `c` when `c` is homogeneous
/// and nonzero, and `n + 1` otherwise. The result keeps the strongest
/// weight discipline it satisfies, never stronger than `g`'s own flavor
/// (a graded `g` extended by a weight-respecting cocycle stays graded; a
/// low-weight cocycle demotes the extension to filtered or plain).
pub fn central_extension(g: &LieAlgebra, c: &Cochain) -> Result<LieAlgebra> {
    check_trivial_form(g, c, 2, "the extension cocycle")?;
    if !is_closed(g, c)? {
        return Err(Error::NotClosed(
            "the extension cocycle must be closed for the extension to satisfy Jacobi".into(),
        ));
    }
    let n = g.n();
    let new = (n + 1) as u16;
    let mut brackets: Vec<((u16, u16), Vec<(u16, Rational)>)> = g
        .brackets()
        .iter()
        .map(|(&key, terms)| (key, terms.iter().map(|(&k, v)| (k, v.clone())).collect()))
        .collect();
    for ((args, _), coeff) in c.entries() {
        let key = (args[0], args[1]);
        match brackets.iter_mut().find(|(k, _)| *k == key) {
            Some((_, terms)) => terms.push((new, coeff.clone())),
            None => brackets.push((key, vec![(new, coeff.clone())])),
        }
    }
    let mut weights = g.weights().to_vec();
    weights.push(c.weight(g).unwrap_or(n as i64 + 1));

    let name = format!("ext({})", g.name());
    let candidates = [Flavor::Graded, Flavor::Filtered, Flavor::Plain];
    let mut ext = None;
    for &flavor in candidates.iter().filter(|&&f| f >= g.flavor()) {
        match LieAlgebra::new(&name, weights.clone(), flavor, brackets.clone()) {
            Ok(a) => {
                ext = Some(a);
                break;
            }
            Err(Error::FlavorViolation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let ext = ext.ok_or_else(|| Error::Internal("no flavor admits the extension".into()))?;
    if let Some(((i, j, k), _)) = ext.jacobi_residual().first() {
        return Err(Error::Internal(format!(
            "central extension by a closed form lost Jacobi at (e{i}, e{j}, e{k})"
        )));
    }
    Ok(ext)
}

/// Whether the central extension of a filiform `g` by the closed 2-form
/// `c` is again filiform.
///
/// Requires `g` filiform with one-dimensional center `span(ξ)`. The
/// extension is filiform exactly when the functional `x ↦ c(x, ξ)` is
/// nonzero, i.e. `ι_ξ c ≠ 0` — the new central generator is then reached
/// by the lower central series through `ξ`.
pub fn extension_filiform_check(g: &LieAlgebra, c: &Cochain) -> Result<bool> {
    check_trivial_form(g, c, 2, "the extension cocycle")?;
    if !is_closed(g, c)? {
        return Err(Error::NotClosed("the extension cocycle must be closed".into()));
    }
    if !g.is_filiform() {
        return Err(Error::PreconditionFailed(
            "the filiform extension test needs a filiform algebra".into(),
        ));
    }
    let center = g.center();
    if center.dim() != 1 {
        return Err(Error::PreconditionFailed(format!(
            "the filiform extension test needs a one-dimensional center, got dimension {}",
            center.dim()
        )));
    }
    let xi: Vector = center.basis()[0]
        .iter()
        .map(|(r, v)| (*r as u16 + 1, v.clone()))
        .collect();
    Ok(!contraction(c, &xi)?.is_zero())
}

/// Whether the 1-form `θ` is a contact form on the odd-dimensional `g`:
/// `θ ∧ (dθ)^k ≠ 0` where `dim g = 2k + 1`. The wedge powers are expanded
/// exactly and the product stops early once it hits zero; no factorial
/// normalization is applied.
pub fn contact_check(g: &LieAlgebra, theta: &Cochain) -> Result<bool> {
    check_trivial_form(g, theta, 1, "the 1-form")?;
    let n = g.n();
    if n % 2 == 0 {
        return Err(Error::PreconditionFailed(format!(
            "contact check needs odd dimension, got {n}"
        )));
    }
    let k = (n - 1) / 2;
    let dtheta = differential(g, theta)?;
    let mut acc = theta.clone();
    for _ in 0..k {
        acc = acc.wedge(&dtheta)?;
        if acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pullback `φ*ω` of a 2-form along a basis change:
/// `(φ*ω)(x, y) = ω(φ x, φ y)`.
pub fn pullback_two_form(omega: &Cochain, phi: &BasisChange) -> Result<Cochain> {
    if omega.coefficients() != Coefficients::Trivial || omega.degree() != 2 {
        return Err(Error::InvalidInput(
            "pullback expects a 2-form with trivial coefficients".into(),
        ));
    }
    if phi.n() != omega.n() {
        return Err(Error::DimensionMismatch(format!(
            "basis change on dimension {}, form on dimension {}",
            phi.n(),
            omega.n()
        )));
    }
    let n = omega.n() as u16;
    let mut out = Cochain::zero(omega.n(), 2, Coefficients::Trivial);
    for i in 1..n {
        let ci = phi.column(i);
        for j in i + 1..=n {
            let cj = phi.column(j);
            let mut val = Rational::zero();
            for (a, va) in &ci {
                for (b, vb) in &cj {
                    val += va * vb * omega.eval_form(&[*a, *b]);
                }
            }
            if !val.is_zero() {
                out.add_term(&[i, j], None, val)?;
            }
        }
    }
    Ok(out)
}
