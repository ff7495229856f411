//! Constructors for the named algebras, polynomials, cocycles, and
//! differential forms of the classification, with exact coefficients.
//!
//! Algebras: the chain algebra `m0(n)`, its one-relation cousins `m1(2k)`
//! and `m2(n)`, the maximal graded filiform algebra `V(n)` with
//! `[e_i, e_j] = (j-i) e_{i+j}`, the parametric families `g8(α)` and
//! `g10(α)`, and the deformed family `gX(2k, X)`. Every constructor
//! verifies the Jacobi identity before returning.
//!
//! Forms: the low-weight cocycles `g5`, `g7`, `g12`, the `ξ` ladder with
//! its `P/Q/Z` polynomial coefficients, the adjoint basic cocycles
//! `ψ_{n,l}` (weights `n-7 .. n-11`), and the symplectic candidates
//! `ω` for each algebra, including `Ω_{X,x5}` and the projections
//! `Ω_{n+1}, Ω_{n+2}, Ω_{n+3}`.

use num_traits::One;

use crate::cohomology::Cochain;
use crate::exactla::{rat, Rational};
use crate::liealg::{Flavor, LieAlgebra};
use crate::{Error, Result};

/// Check the Jacobi identity, reporting the first failing triple.
fn verified(g: LieAlgebra) -> Result<LieAlgebra> {
    let residual = g.jacobi_residual();
    match residual.first() {
        None => Ok(g),
        Some(((i, j, k), _)) => Err(Error::JacobiFails(format!(
            "{}: first failing triple (e{i}, e{j}, e{k})",
            g.name()
        ))),
    }
}

fn chain_brackets(n: u16) -> Vec<((u16, u16), Vec<(u16, Rational)>)> {
    (2..n).map(|i| ((1u16, i), vec![(i + 1, Rational::one())])).collect()
}

/// The chain algebra: `[e_1, e_i] = e_{i+1}`, weights `1..n`.
pub fn m0(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("m0 requires n >= 3, got {n}")));
    }
    verified(LieAlgebra::new(
        format!("m0({n})"),
        (1..=n as i64).collect(),
        Flavor::Graded,
        chain_brackets(n as u16),
    )?)
}

/// The chain algebra plus `[e_j, e_{2k+1-j}] = (-1)^{j+1} e_{2k}`,
/// `j = 2..k`; weights `(1, 1, 2, ..., 2k-1)`.
pub fn m1(n: usize) -> Result<LieAlgebra> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidInput(format!("m1 requires even n >= 4, got {n}")));
    }
    let k = n / 2;
    let mut brackets = chain_brackets(n as u16);
    for j in 2..=k as u16 {
        let sign = if j % 2 == 0 { -1 } else { 1 };
        brackets.push(((j, n as u16 + 1 - j), vec![(n as u16, rat(sign, 1))]));
    }
    let mut weights = vec![1i64, 1];
    weights.extend(2..n as i64);
    verified(LieAlgebra::new(format!("m1({n})"), weights, Flavor::Graded, brackets)?)
}

/// The chain algebra plus `[e_2, e_j] = e_{j+2}`, `j = 3..n-2`;
/// weights `1..n`.
pub fn m2(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("m2 requires n >= 3, got {n}")));
    }
    let mut brackets = chain_brackets(n as u16);
    for j in 3..=(n as u16).saturating_sub(2) {
        brackets.push(((2, j), vec![(j + 2, Rational::one())]));
    }
    verified(LieAlgebra::new(
        format!("m2({n})"),
        (1..=n as i64).collect(),
        Flavor::Graded,
        brackets,
    )?)
}

/// The maximal graded filiform algebra: `[e_i, e_j] = (j-i) e_{i+j}`
/// whenever `i + j <= n`; weights `1..n`.
pub fn v(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("V requires n >= 3, got {n}")));
    }
    let mut brackets = Vec::new();
    for i in 1..=n as u16 {
        for j in i + 1..=n as u16 {
            if (i + j) as usize <= n {
                brackets.push(((i, j), vec![(i + j, rat((j - i) as i64, 1))]));
            }
        }
    }
    verified(LieAlgebra::new(
        format!("V({n})"),
        (1..=n as i64).collect(),
        Flavor::Graded,
        brackets,
    )?)
}

fn check_excluded(alpha: &Rational, excluded: &[Rational], family: &str) -> Result<()> {
    if excluded.contains(alpha) {
        let list =
            excluded.iter().map(crate::exactla::format_rational).collect::<Vec<_>>().join(", ");
        return Err(Error::ExcludedParameter(format!(
            "{family} is undefined at α = {}; excluded values: {list}",
            crate::exactla::format_rational(alpha)
        )));
    }
    Ok(())
}

/// The 8-dimensional family, defined for `α ∉ {-5/2, -2, -1/2, 1/2}`:
/// the chain brackets plus
/// `[e2,e3] = (2+α)e5`, `[e2,e4] = (2+α)e6`, `[e2,e5] = (1+α)e7`,
/// `[e3,e4] = e7`, `[e2,e6] = α e8`, `[e3,e5] = e8`.
pub fn g8(alpha: &Rational) -> Result<LieAlgebra> {
    check_excluded(alpha, &[rat(-5, 2), rat(-2, 1), rat(-1, 2), rat(1, 2)], "g8")?;
    let mut brackets = chain_brackets(8);
    let two_plus = rat(2, 1) + alpha;
    brackets.push(((2, 3), vec![(5, two_plus.clone())]));
    brackets.push(((2, 4), vec![(6, two_plus)]));
    brackets.push(((2, 5), vec![(7, rat(1, 1) + alpha)]));
    brackets.push(((3, 4), vec![(7, Rational::one())]));
    brackets.push(((2, 6), vec![(8, alpha.clone())]));
    brackets.push(((3, 5), vec![(8, Rational::one())]));
    verified(LieAlgebra::new(
        format!("g8({})", crate::exactla::format_rational(alpha)),
        (1..=8).collect(),
        Flavor::Graded,
        brackets,
    )?)
}

/// The 10-dimensional family, defined for `α ∉ {-5/2, -1/4, -1, -3}`:
/// the `g8` rows plus, with `d = 2α+5`,
/// `[e2,e7] = (2α²+3α-2)/d e9`, `[e3,e6] = (2α+2)/d e9`, `[e4,e5] = 3/d e9`,
/// `[e2,e8] = (2α²+α-1)/d e10`, `[e3,e7] = (2α-1)/d e10`, `[e4,e6] = 3/d e10`.
///
/// The two further excluded parameters of the classification are irrational
/// (roots of the cubics `2α³+2α²+3` and `4α³+8α²-8α-21`, which have no
/// rational roots), so no rational α can hit them.
pub fn g10(alpha: &Rational) -> Result<LieAlgebra> {
    check_excluded(alpha, &[rat(-5, 2), rat(-1, 4), rat(-1, 1), rat(-3, 1)], "g10")?;
    let a = alpha.clone();
    let d = rat(2, 1) * &a + rat(5, 1);
    let a2 = &a * &a;
    let mut brackets = chain_brackets(10);
    let two_plus = rat(2, 1) + &a;
    brackets.push(((2, 3), vec![(5, two_plus.clone())]));
    brackets.push(((2, 4), vec![(6, two_plus)]));
    brackets.push(((2, 5), vec![(7, rat(1, 1) + &a)]));
    brackets.push(((3, 4), vec![(7, Rational::one())]));
    brackets.push(((2, 6), vec![(8, a.clone())]));
    brackets.push(((3, 5), vec![(8, Rational::one())]));
    brackets.push(((2, 7), vec![(9, (rat(2, 1) * &a2 + rat(3, 1) * &a - rat(2, 1)) / &d)]));
    brackets.push(((3, 6), vec![(9, (rat(2, 1) * &a + rat(2, 1)) / &d)]));
    brackets.push(((4, 5), vec![(9, rat(3, 1) / &d)]));
    brackets.push(((2, 8), vec![(10, (rat(2, 1) * &a2 + &a - rat(1, 1)) / &d)]));
    brackets.push(((3, 7), vec![(10, (rat(2, 1) * &a - rat(1, 1)) / &d)]));
    brackets.push(((4, 6), vec![(10, rat(3, 1) / &d)]));
    verified(LieAlgebra::new(
        format!("g10({})", crate::exactla::format_rational(alpha)),
        (1..=10).collect(),
        Flavor::Graded,
        brackets,
    )?)
}

/// The deformed family `gX(2k, X) = V(2k) + x1 ψ_{2k,10} + x2 ψ_{2k,9}
/// + x3 ψ_{2k,8} + x4 ψ_{2k,7}` for even `2k >= 16`; filtered flavor.
pub fn g_x(two_k: usize, x: &[Rational; 4]) -> Result<LieAlgebra> {
    if two_k < 16 || two_k % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "gX requires an even dimension >= 16, got {two_k}"
        )));
    }
    let g0 = v(two_k)?;
    let mut psi_sum = Cochain::zero(two_k, 2, crate::cohomology::Coefficients::Adjoint);
    for (i, xi) in x.iter().enumerate() {
        let component = psi(two_k, 10 - i)?;
        psi_sum = psi_sum.add(&component.scale(xi))?;
    }
    let name = format!(
        "gX({two_k}; {})",
        x.iter().map(crate::exactla::format_rational).collect::<Vec<_>>().join(",")
    );
    Ok(crate::deformation::deform(&g0, &psi_sum)?.with_name(name))
}

/// The ten polynomial families appearing as `ξ`/`ψ` coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyFamily {
    P1,
    P2,
    P3,
    Q1,
    Q2,
    Q3,
    Z1,
    Z2,
    Z3,
    Z4,
}

/// Generalized binomial coefficient `C(m, k) = m(m-1)...(m-k+1)/k!`,
/// a polynomial in `m` (so defined for every integer, negative included).
pub fn binom(m: i64, k: u32) -> Rational {
    let mut num = Rational::one();
    for t in 0..k as i64 {
        num *= rat(m - t, 1);
        num /= rat(t + 1, 1);
    }
    num
}

/// Exact evaluation of the printed closed forms at integer `j`.
pub fn poly(family: PolyFamily, j: i64) -> Rational {
    use PolyFamily::*;
    let c = |m: i64, k: u32| binom(m, k);
    match family {
        P1 => (rat(5, 1) * c(j, 2) + rat(3, 1) * c(j, 1) - rat(6, 1)) / rat(21, 1),
        P2 => -(rat(4, 1) * c(j, 2) + rat(15, 1) * c(j, 1) - rat(30, 1)) / rat(21, 1),
        P3 => -(rat(13, 1) * c(j, 2) - rat(30, 1) * c(j, 1) + rat(60, 1)) / rat(21, 1),
        Q1 => {
            (rat(3, 1) * c(j + 1, 3) + rat(4, 1) * c(j + 1, 2) - rat(4, 1) * c(j + 1, 1))
                / rat(28, 1)
        }
        Q2 => (c(j + 1, 3) - rat(8, 1) * c(j + 1, 2) + rat(8, 1) * c(j + 1, 1)) / rat(14, 1),
        Q3 => {
            (rat(-13, 1) * c(j + 1, 3) + rat(20, 1) * c(j + 1, 2) - rat(20, 1) * c(j + 1, 1))
                / rat(28, 1)
        }
        Z1 => {
            rat(1, 22) * c(j + 2, 4) + rat(23, 231) * c(j + 2, 3) - rat(7, 198) * c(j + 2, 2)
                - rat(59, 693) * c(j + 2, 1)
                + rat(37, 231)
        }
        Z2 => {
            rat(17, 154) * c(j + 2, 4) - rat(62, 231) * c(j + 2, 3)
                - rat(53, 1386) * c(j + 2, 2)
                + rat(59, 99) * c(j + 2, 1)
                - rat(37, 33)
        }
        Z3 => {
            rat(-29, 154) * c(j + 2, 4) - rat(4, 77) * c(j + 2, 3) + rat(317, 462) * c(j + 2, 2)
                - rat(59, 33) * c(j + 2, 1)
                + rat(37, 11)
        }
        Z4 => {
            rat(-47, 154) * c(j + 2, 4) + rat(185, 231) * c(j + 2, 3)
                - rat(2245, 1386) * c(j + 2, 2)
                + rat(295, 99) * c(j + 2, 1)
                - rat(185, 33)
        }
    }
}

impl std::str::FromStr for PolyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use PolyFamily::*;
        Ok(match s {
            "P1" | "p1" => P1,
            "P2" | "p2" => P2,
            "P3" | "p3" => P3,
            "Q1" | "q1" => Q1,
            "Q2" | "q2" => Q2,
            "Q3" | "q3" => Q3,
            "Z1" | "z1" => Z1,
            "Z2" | "z2" => Z2,
            "Z3" | "z3" => Z3,
            "Z4" | "z4" => Z4,
            other => {
                return Err(Error::Parse(format!(
                    "unknown polynomial family {other:?}; expected P1..P3, Q1..Q3, Z1..Z4"
                )))
            }
        })
    }
}

/// `g5 = e²∧e³` (weight 5), on an `n`-dimensional space.
pub fn g5(n: usize) -> Result<Cochain> {
    Cochain::form(n, 2, [(vec![2, 3], Rational::one())])
}

/// `g7 = e²∧e⁵ - 3 e³∧e⁴` (weight 7).
pub fn g7(n: usize) -> Result<Cochain> {
    Cochain::form(n, 2, [(vec![2, 5], rat(1, 1)), (vec![3, 4], rat(-3, 1))])
}

/// `g12 = 2 e²∧e³∧e⁷ - 5 e²∧e⁴∧e⁶ + 20 e³∧e⁴∧e⁵` (weight 12).
pub fn g12(n: usize) -> Result<Cochain> {
    Cochain::form(
        n,
        3,
        [
            (vec![2, 3, 7], rat(2, 1)),
            (vec![2, 4, 6], rat(-5, 1)),
            (vec![3, 4, 5], rat(20, 1)),
        ],
    )
}

/// `ξ_p(j)` for `p ∈ {1..4}`: the homogeneous 2-forms of weight `7 + p`
/// solving the ladder `dξ_q = Σ_{m=1}^{q} (j+q-2m) e^m ∧ ξ_{q-m}`
/// (with `ξ_0 = g7`).
pub fn xi_form(p: usize, j: i64, n: usize) -> Result<Cochain> {
    use PolyFamily::*;
    match p {
        1 => Cochain::form(
            n,
            2,
            [
                (vec![2, 6], rat(j - 1, 2)),
                (vec![3, 5], rat(-(j - 1), 1)),
            ],
        ),
        2 => Cochain::form(
            n,
            2,
            [
                (vec![2, 7], poly(P1, j)),
                (vec![3, 6], poly(P2, j)),
                (vec![4, 5], poly(P3, j)),
            ],
        ),
        3 => Cochain::form(
            n,
            2,
            [
                (vec![2, 8], poly(Q1, j)),
                (vec![3, 7], poly(Q2, j)),
                (vec![4, 6], poly(Q3, j)),
            ],
        ),
        4 => Cochain::form(
            n,
            2,
            [
                (vec![2, 9], poly(Z1, j)),
                (vec![3, 8], poly(Z2, j)),
                (vec![4, 7], poly(Z3, j)),
                (vec![5, 6], poly(Z4, j)),
            ],
        ),
        _ => Err(Error::InvalidInput(format!("ξ_p requires p in 1..=4, got {p}"))),
    }
}

/// The full ladder `(ξ1, ξ2, ξ3, ξ4)` at parameter `j`.
pub fn xi_forms(j: i64, n: usize) -> Result<[Cochain; 4]> {
    Ok([xi_form(1, j, n)?, xi_form(2, j, n)?, xi_form(3, j, n)?, xi_form(4, j, n)?])
}

/// The basic adjoint 2-cocycle `ψ_{n,l}`, `l ∈ {7..11}`, of weight `n-l`:
/// with `s = l-7` and `j = n-s`,
/// `ψ_{n,l} = e_j ⊗ g7 + e_{j+1} ⊗ ξ1(j) + ... + e_{j+s} ⊗ ξs(j)`.
pub fn psi(n: usize, l: usize) -> Result<Cochain> {
    if n < 12 {
        return Err(Error::InvalidInput(format!("ψ requires n >= 12, got {n}")));
    }
    if !(7..=11).contains(&l) {
        return Err(Error::InvalidInput(format!("ψ requires l in 7..=11, got {l}")));
    }
    let s = l - 7;
    let j = (n - s) as i64;
    let mut out = Cochain::zero(n, 2, crate::cohomology::Coefficients::Adjoint);
    for p in 0..=s {
        let level = if p == 0 { g7(n)? } else { xi_form(p, j, n)? };
        let target = (n - s + p) as u16;
        out = out.add(&Cochain::tensor(target, &level)?)?;
    }
    Ok(out)
}

/// `ω` for `m0(2k)`: `Σ_{i=1}^{k} (-1)^{i+1} e^i ∧ e^{2k+1-i}`.
pub fn omega_m0(n: usize) -> Result<Cochain> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidInput(format!("ω_m0 requires even n >= 4, got {n}")));
    }
    let terms = (1..=n as u16 / 2).map(|i| {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        (vec![i, n as u16 + 1 - i], rat(sign, 1))
    });
    Cochain::form(n, 2, terms)
}

/// `ω` for `V(2k)`: `½ Σ_{i+j=2k+1} (j-i) e^i ∧ e^j`, stored as
/// `Σ_{i<j} (j-i) e^i ∧ e^j`.
pub fn omega_v(n: usize) -> Result<Cochain> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidInput(format!("ω_V requires even n >= 4, got {n}")));
    }
    let terms = (1..=n as u16 / 2).map(|i| {
        let j = n as u16 + 1 - i;
        (vec![i, j], rat((j - i) as i64, 1))
    });
    Cochain::form(n, 2, terms)
}

/// The symplectic form printed for `g8(α)`:
/// `e¹∧e⁸ + (2α²+3α-2)/(2α+5) e²∧e⁷ + (2α+2)/(2α+5) e³∧e⁶ + 3/(2α+5) e⁴∧e⁵`.
/// (At `α = -1` the `e³∧e⁶` coefficient vanishes and the form degenerates,
/// which is why `-1` is admissible for `g8` itself but not for this form.)
pub fn omega_g8(alpha: &Rational) -> Result<Cochain> {
    check_excluded(alpha, &[rat(-5, 2), rat(-2, 1), rat(-1, 2), rat(1, 2)], "ω_g8")?;
    let a = alpha.clone();
    let d = rat(2, 1) * &a + rat(5, 1);
    let a2 = &a * &a;
    Cochain::form(
        8,
        2,
        [
            (vec![1, 8], Rational::one()),
            (vec![2, 7], (rat(2, 1) * &a2 + rat(3, 1) * &a - rat(2, 1)) / &d),
            (vec![3, 6], (rat(2, 1) * &a + rat(2, 1)) / &d),
            (vec![4, 5], rat(3, 1) / &d),
        ],
    )
}

/// The symplectic form printed for `g10(α)`:
/// `e¹∧e¹⁰ + (2α³+2α²+3)/(2(α²+4α+3)) e²∧e⁹
///  + (4α³+8α²-8α-21)/(2(α²+4α+3)(2α+5)) e³∧e⁸
///  + 3(2α²+4α+5)/(2(α²+4α+3)(2α+5)) e⁴∧e⁷
///  + 3(4α+1)/(2(α²+4α+3)(2α+5)) e⁵∧e⁶`.
pub fn omega_g10(alpha: &Rational) -> Result<Cochain> {
    check_excluded(alpha, &[rat(-5, 2), rat(-1, 4), rat(-1, 1), rat(-3, 1)], "ω_g10")?;
    let a = alpha.clone();
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let d1 = rat(2, 1) * (&a2 + rat(4, 1) * &a + rat(3, 1));
    let d2 = &d1 * (rat(2, 1) * &a + rat(5, 1));
    Cochain::form(
        10,
        2,
        [
            (vec![1, 10], Rational::one()),
            (vec![2, 9], (rat(2, 1) * &a3 + rat(2, 1) * &a2 + rat(3, 1)) / &d1),
            (
                vec![3, 8],
                (rat(4, 1) * &a3 + rat(8, 1) * &a2 - rat(8, 1) * &a - rat(21, 1)) / &d2,
            ),
            (vec![4, 7], rat(3, 1) * (rat(2, 1) * &a2 + rat(4, 1) * &a + rat(5, 1)) / &d2),
            (vec![5, 6], rat(3, 1) * (rat(4, 1) * &a + rat(1, 1)) / &d2),
        ],
    )
}

/// `Ω_{2k,l}` for `l ∈ {7..11}`: `g7` at `l = 7` and `ξ_{l-7}(2k+8-l)`
/// above, the weight-`l` building blocks of `Ω_{X,x5}`.
pub fn omega_level(two_k: usize, l: usize) -> Result<Cochain> {
    if !(7..=11).contains(&l) {
        return Err(Error::InvalidInput(format!("Ω_{{2k,l}} requires l in 7..=11, got {l}")));
    }
    if l == 7 {
        g7(two_k)
    } else {
        xi_form(l - 7, (two_k + 8 - l) as i64, two_k)
    }
}

/// `Ω_{X,x5} = ½ Σ_{i+j=2k+1} (j-i) e^i∧e^j + x1 Ω_{2k,11} + x2 Ω_{2k,10}
/// + x3 Ω_{2k,9} + x4 Ω_{2k,8} + x5 Ω_{2k,7}`, the symplectic candidate
/// for `gX(2k, X)`.
pub fn omega_x(two_k: usize, x: &[Rational; 4], x5: &Rational) -> Result<Cochain> {
    if two_k < 16 || two_k % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "Ω_X requires an even dimension >= 16, got {two_k}"
        )));
    }
    let mut out = omega_v(two_k)?;
    for (i, xi) in x.iter().enumerate() {
        out = out.add(&omega_level(two_k, 11 - i)?.scale(xi))?;
    }
    out.add(&omega_level(two_k, 7)?.scale(x5))
}

/// The weight-`m` projection forms for `m ∈ {n+1, n+2, n+3}`:
/// `Ω_m = ½ Σ_{i+j=m} (j-i) e^i ∧ e^j` over indices `1 <= i < j <= n`
/// (which enforces the printed restrictions `i,j > m-n-1`).
pub fn omega_proj(n: usize, m: usize) -> Result<Cochain> {
    if !(n + 1..=n + 3).contains(&m) {
        return Err(Error::InvalidInput(format!(
            "Ω_m requires m in {{n+1, n+2, n+3}}, got m = {m} at n = {n}"
        )));
    }
    let mut terms = Vec::new();
    let lo = (m - n) as u16;
    for i in lo..=(m as u16 - 1) / 2 {
        let j = m as u16 - i;
        if i < j {
            terms.push((vec![i, j], rat((j - i) as i64, 1)));
        }
    }
    Cochain::form(n, 2, terms)
}

/// `Ω_{n+1}`, the top-weight 2-cocycle class generator on `V(n)`.
pub fn omega_top(n: usize) -> Result<Cochain> {
    omega_proj(n, n + 1)
}

/// The §-table symplectic form for a named algebra: `m0` and `v` need the
/// even dimension, `g8`/`g10` the parameter α.
pub fn omega_catalog(name: &str, dim: usize, alpha: Option<&Rational>) -> Result<Cochain> {
    match name {
        "m0" => omega_m0(dim),
        "v" | "V" => omega_v(dim),
        "g8" => {
            let a = alpha
                .ok_or_else(|| Error::InvalidInput("ω_g8 requires the parameter α".into()))?;
            omega_g8(a)
        }
        "g10" => {
            let a = alpha
                .ok_or_else(|| Error::InvalidInput("ω_g10 requires the parameter α".into()))?;
            omega_g10(a)
        }
        other => Err(Error::InvalidInput(format!(
            "no catalog form for {other:?}; known: m0, v, g8, g10"
        ))),
    }
}

/// Look up a catalog algebra by name for the CLI: `m0|m1|m2|v` take `dim`,
/// `g8|g10` take α, `gx` takes `dim` and the four coordinates.
pub fn algebra_by_name(
    name: &str,
    dim: Option<usize>,
    alpha: Option<&Rational>,
    x: Option<&[Rational; 4]>,
) -> Result<LieAlgebra> {
    let need_dim = |op: &str| {
        dim.ok_or_else(|| Error::InvalidInput(format!("{op} requires --dim")))
    };
    match name {
        "m0" => m0(need_dim("m0")?),
        "m1" => m1(need_dim("m1")?),
        "m2" => m2(need_dim("m2")?),
        "v" | "V" => v(need_dim("v")?),
        "g8" => g8(alpha.ok_or_else(|| Error::InvalidInput("g8 requires --param α".into()))?),
        "g10" => g10(alpha.ok_or_else(|| Error::InvalidInput("g10 requires --param α".into()))?),
        "gx" | "gX" => {
            let x = x.ok_or_else(|| Error::InvalidInput("gX requires --x x1,x2,x3,x4".into()))?;
            g_x(need_dim("gX")?, x)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown catalog algebra {other:?}; known: m0, m1, m2, v, g8, g10, gx"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{differential, is_cocycle};
    use crate::liealg::Vector;
    use num_traits::Zero;

    #[test]
    fn m0_and_v_bracket_examples() {
        let g = m0(4).unwrap();
        assert_eq!(g.bracket_lines(), vec!["[e1,e2] = e3", "[e1,e3] = e4"]);
        let v6 = v(6).unwrap();
        assert_eq!(
            v6.bracket(&v6.basis_vector(1), &v6.basis_vector(5)).unwrap(),
            Vector::from([(6, rat(4, 1))])
        );
        assert_eq!(
            v6.bracket(&v6.basis_vector(2), &v6.basis_vector(4)).unwrap(),
            Vector::from([(6, rat(2, 1))])
        );
        assert!(v6.is_filiform());
    }

    #[test]
    fn m1_sign_and_grading() {
        let g = m1(8).unwrap();
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(7)).unwrap(),
            Vector::from([(8, rat(-1, 1))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(3), &g.basis_vector(6)).unwrap(),
            Vector::from([(8, rat(1, 1))])
        );
        assert_eq!(g.weights(), &[1, 1, 2, 3, 4, 5, 6, 7]);
        assert!(m1(7).is_err());
        assert!(g.is_filiform());
    }

    #[test]
    fn m2_rows_and_graded_quotient() {
        let g = m2(6).unwrap();
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(3)).unwrap(),
            Vector::from([(5, rat(1, 1))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(4)).unwrap(),
            Vector::from([(6, rat(1, 1))])
        );
        // gr of the central series recovers the chain algebra exactly.
        let gr = g.associated_graded(&g.lower_central_series()).unwrap();
        assert_eq!(gr.brackets(), m0(6).unwrap().brackets());
    }

    #[test]
    fn gr_central_of_v_is_the_chain_algebra_up_to_scaling() {
        // gr_C V(8) has [e1,e_i] = (i-1) e_{i+1} and nothing else; the
        // rescaling e_i -> e_i/(i-2)! identifies it with m0(8).
        let g = v(8).unwrap();
        let gr = g.associated_graded(&g.lower_central_series()).unwrap();
        let mut expected = std::collections::BTreeMap::new();
        for i in 2u16..8 {
            expected.insert(
                (1u16, i),
                std::collections::BTreeMap::from([(i + 1, rat(i as i64 - 1, 1))]),
            );
        }
        assert_eq!(gr.brackets(), &expected);
        assert_eq!(gr.weights(), &[1, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn g8_constants_and_exclusions() {
        let g = g8(&rat(1, 1)).unwrap();
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(3)).unwrap(),
            Vector::from([(5, rat(3, 1))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(5)).unwrap(),
            Vector::from([(7, rat(2, 1))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(6)).unwrap(),
            Vector::from([(8, rat(1, 1))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(3), &g.basis_vector(5)).unwrap(),
            Vector::from([(8, rat(1, 1))])
        );
        assert!(g.is_filiform());
        for bad in [rat(-5, 2), rat(-2, 1), rat(-1, 2), rat(1, 2)] {
            assert!(matches!(g8(&bad), Err(Error::ExcludedParameter(_))));
        }
    }

    #[test]
    fn g10_constants_and_exclusions() {
        let g = g10(&rat(0, 1)).unwrap();
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(7)).unwrap(),
            Vector::from([(9, rat(-2, 5))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(4), &g.basis_vector(5)).unwrap(),
            Vector::from([(9, rat(3, 5))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(2), &g.basis_vector(8)).unwrap(),
            Vector::from([(10, rat(-1, 5))])
        );
        assert_eq!(
            g.bracket(&g.basis_vector(3), &g.basis_vector(7)).unwrap(),
            Vector::from([(10, rat(-1, 5))])
        );
        assert!(g.is_filiform());
        for bad in [rat(-5, 2), rat(-1, 4), rat(-1, 1), rat(-3, 1)] {
            assert!(matches!(g10(&bad), Err(Error::ExcludedParameter(_))));
        }
    }

    #[test]
    fn g10_irrational_exclusions_have_no_rational_roots() {
        // Rational-root test on 2α³+2α²+3 and 4α³+8α²-8α-21: any rational
        // root p/q must have p | constant and q | leading coefficient.
        let cubics: [(i64, i64, i64, i64); 2] = [(2, 2, 0, 3), (4, 8, -8, -21)];
        for (c3, c2, c1, c0) in cubics {
            for p in divisors(c0.unsigned_abs()) {
                for q in divisors(c3.unsigned_abs()) {
                    for sign in [1i64, -1] {
                        let a = rat(sign * p as i64, q as i64);
                        let val = rat(c3, 1) * &a * &a * &a
                            + rat(c2, 1) * &a * &a
                            + rat(c1, 1) * &a
                            + rat(c0, 1);
                        assert!(!val.is_zero(), "rational root {a} found");
                    }
                }
            }
        }
    }

    fn divisors(m: u64) -> Vec<u64> {
        (1..=m).filter(|d| m % d == 0).collect()
    }

    #[test]
    fn poly_closed_form_examples() {
        assert_eq!(poly(PolyFamily::P1, 2), rat(5, 21));
        assert_eq!(poly(PolyFamily::P2, 2), rat(-4, 21));
        assert_eq!(poly(PolyFamily::P3, 2), rat(-13, 21));
        assert_eq!(poly(PolyFamily::Q1, 2), rat(3, 28));
        assert_eq!(binom(4, 4), rat(1, 1));
        assert_eq!(binom(3, 4), rat(0, 1));
        assert_eq!(binom(-2, 2), rat(3, 1));
    }

    #[test]
    fn xi_ladder_examples_and_weights() {
        let xi1 = xi_form(1, 2, 20).unwrap();
        assert_eq!(xi1.coefficient(&[2, 6], None), rat(1, 2));
        assert_eq!(xi1.coefficient(&[3, 5], None), rat(-1, 1));
        let xi2 = xi_form(2, 2, 20).unwrap();
        assert_eq!(xi2.coefficient(&[2, 7], None), rat(5, 21));
        assert_eq!(xi2.coefficient(&[3, 6], None), rat(-4, 21));
        assert_eq!(xi2.coefficient(&[4, 5], None), rat(-13, 21));
        let g = v(20).unwrap();
        for (p, w) in [(1usize, 8i64), (2, 9), (3, 10), (4, 11)] {
            let xi = xi_form(p, 5, 20).unwrap();
            assert_eq!(xi.weight(&g), Some(w));
        }
    }

    #[test]
    fn psi_examples_weight_and_closedness() {
        let g = v(16).unwrap();
        let p7 = psi(16, 7).unwrap();
        assert_eq!(p7.coefficient(&[2, 5], Some(16)), rat(1, 1));
        assert_eq!(p7.coefficient(&[3, 4], Some(16)), rat(-3, 1));
        assert_eq!(p7.entries().len(), 2);
        assert_eq!(p7.weight(&g), Some(9));
        let p8 = psi(16, 8).unwrap();
        assert_eq!(p8.coefficient(&[2, 5], Some(15)), rat(1, 1));
        assert_eq!(p8.coefficient(&[2, 6], Some(16)), rat(7, 1));
        assert_eq!(p8.coefficient(&[3, 5], Some(16)), rat(-14, 1));
        assert_eq!(p8.weight(&g), Some(8));
        for l in 7..=11 {
            let p = psi(16, l).unwrap();
            assert!(is_cocycle(&g, &p).unwrap(), "dψ_{{16,{l}}} ≠ 0");
            assert_eq!(p.weight(&g), Some(16 - l as i64));
        }
        assert!(psi(11, 7).is_err());
        assert!(psi(16, 12).is_err());
    }

    #[test]
    fn g_x_table_rows() {
        let zero = Rational::zero();
        let one = Rational::one();
        let gx0 = g_x(16, &[zero.clone(), zero.clone(), zero.clone(), zero.clone()]).unwrap();
        assert_eq!(gx0, v(16).unwrap());
        let gx4 = g_x(16, &[zero.clone(), zero.clone(), zero.clone(), one.clone()]).unwrap();
        assert_eq!(
            gx4.bracket(&gx4.basis_vector(2), &gx4.basis_vector(5)).unwrap(),
            Vector::from([(7, rat(3, 1)), (16, rat(1, 1))])
        );
        assert_eq!(
            gx4.bracket(&gx4.basis_vector(3), &gx4.basis_vector(4)).unwrap(),
            Vector::from([(7, rat(1, 1)), (16, rat(-3, 1))])
        );
        let gx1 = g_x(16, &[one, zero.clone(), zero.clone(), zero]).unwrap();
        assert_eq!(gx1.bracket(&gx1.basis_vector(2), &gx1.basis_vector(6)).unwrap()[&14], rat(6, 1));
        assert!(gx1.is_filiform());
        assert_eq!(gx1.flavor(), crate::liealg::Flavor::Filtered);
        assert!(g_x(14, &[Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()])
            .is_err());
    }

    #[test]
    fn omega_catalog_examples() {
        let w4 = omega_m0(4).unwrap();
        assert_eq!(w4.coefficient(&[1, 4], None), rat(1, 1));
        assert_eq!(w4.coefficient(&[2, 3], None), rat(-1, 1));
        let w6 = omega_v(6).unwrap();
        assert_eq!(w6.coefficient(&[1, 6], None), rat(5, 1));
        assert_eq!(w6.coefficient(&[2, 5], None), rat(3, 1));
        assert_eq!(w6.coefficient(&[3, 4], None), rat(1, 1));
        // Ω_{2k,8} = ((2k-1)/2)(e²∧e⁶ - 2e³∧e⁵) at 2k = 16.
        let l8 = omega_level(16, 8).unwrap();
        assert_eq!(l8.coefficient(&[2, 6], None), rat(15, 2));
        assert_eq!(l8.coefficient(&[3, 5], None), rat(-15, 1));
        assert_eq!(
            omega_catalog("m0", 4, None).unwrap(),
            w4
        );
        assert!(omega_catalog("m1", 8, None).is_err());
    }

    #[test]
    fn omega_g8_closed_and_g8_neg1_degenerates() {
        let a = rat(1, 3);
        let g = g8(&a).unwrap();
        let w = omega_g8(&a).unwrap();
        assert!(is_cocycle(&g, &w).unwrap());
        // α = -1: the e³∧e⁶ coefficient 2α+2 vanishes.
        let w_neg = omega_g8(&rat(-1, 1)).unwrap();
        assert!(w_neg.coefficient(&[3, 6], None).is_zero());
    }

    #[test]
    fn omega_proj_restrictions_and_identities() {
        let n = 12;
        let g = v(n).unwrap();
        let o13 = omega_proj(n, 13).unwrap();
        let o14 = omega_proj(n, 14).unwrap();
        let o15 = omega_proj(n, 15).unwrap();
        assert_eq!(o13.coefficient(&[1, 12], None), rat(11, 1));
        assert!(o14.coefficient(&[1, 13], None).is_zero()); // index 13 > n
        assert_eq!(o14.coefficient(&[2, 12], None), rat(10, 1));
        assert_eq!(o15.coefficient(&[3, 12], None), rat(9, 1));
        assert!(o15.entries().keys().all(|(args, _)| args[0] >= 3));
        // dΩ_{n+1} = 0; dΩ_{n+2} = n e¹∧Ω_{n+1}; dΩ_{n+3} = (n+1)e¹∧Ω_{n+2} + (n-1)e²∧Ω_{n+1}.
        assert!(is_cocycle(&g, &o13).unwrap());
        let e1 = Cochain::form(n, 1, [(vec![1], rat(1, 1))]).unwrap();
        let e2 = Cochain::form(n, 1, [(vec![2], rat(1, 1))]).unwrap();
        assert_eq!(differential(&g, &o14).unwrap(), e1.wedge(&o13).unwrap().scale(&rat(12, 1)));
        let rhs = e1
            .wedge(&o14)
            .unwrap()
            .scale(&rat(13, 1))
            .add(&e2.wedge(&o13).unwrap().scale(&rat(11, 1)))
            .unwrap();
        assert_eq!(differential(&g, &o15).unwrap(), rhs);
    }

    #[test]
    fn g12_and_g5_g7_are_cocycles_of_the_right_weight() {
        let g = v(16).unwrap();
        let f5 = g5(16).unwrap();
        let f7 = g7(16).unwrap();
        let f12 = g12(16).unwrap();
        assert_eq!(f12.coefficient(&[3, 4, 5], None), rat(20, 1));
        assert_eq!(f5.weight(&g), Some(5));
        assert_eq!(f7.weight(&g), Some(7));
        assert_eq!(f12.weight(&g), Some(12));
        assert!(is_cocycle(&g, &f5).unwrap());
        assert!(is_cocycle(&g, &f7).unwrap());
        assert!(is_cocycle(&g, &f12).unwrap());
    }
}
