//! The ξ ladder on V(20): four parametric 2-forms ξ₁..ξ₄ obeying
//!
//! ```text
//! d ξ_q = Σ_{m=1}^{q} (j + q - 2m) e^m ∧ ξ_{q-m},      ξ₀ = g₇,
//! ```
//!
//! and the 3-form ξ = Σ_{m=1}^{5} (j + 5 - 2m) e^m ∧ ξ_{5-m} they
//! assemble into, whose class in the one-dimensional H³₍₁₂₎ is an
//! explicit degree-5 polynomial multiple of [g₁₂].

use filiform::catalog::{g12, g7, xi_forms};
use filiform::cohomology::{coboundary_preimage, differential, Cochain};
use filiform::exactla::{format_rational, rat, Rational};
use filiform::{catalog, Result};
use num_traits::One;

/// `Σ_{m=1}^{q+1} (j + q + 1 - 2m) e^m ∧ ξ_{q+1-m}` — the right-hand
/// side of the ladder at step `q+1`, also the 3-form ξ when `q+1 = 5`.
fn ladder_rhs(j: i64, ladder: &[Cochain], step: usize, n: usize) -> Result<Cochain> {
    let degree = ladder[0].degree() + 1;
    let mut rhs = Cochain::zero(n, degree, ladder[0].coefficients());
    for m in 1..=step {
        let coeff = rat(j + step as i64 - 2 * m as i64, 1);
        let em = Cochain::form(n, 1, [(vec![m as u16], Rational::one())])?;
        rhs = rhs.add(&em.wedge(&ladder[step - m])?.scale(&coeff))?;
    }
    Ok(rhs)
}

fn main() -> Result<()> {
    let n = 20;
    let g = catalog::v(n)?;

    for j in 2..=12 {
        let xi = xi_forms(j, n)?;
        let mut ladder = vec![g7(n)?];
        ladder.extend(xi.iter().cloned());

        for q in 1..=4usize {
            let lhs = differential(&g, &ladder[q])?;
            let rhs = ladder_rhs(j, &ladder, q, n)?;
            assert_eq!(lhs, rhs, "ladder fails at q={q}, j={j}");
        }

        // ξ is closed (d of the rhs telescopes), of weight 12, and its
        // class is λ(j)·[g₁₂] with λ = -(j-8)(j²-4j+27)(j²-13j+48)/11088.
        let xi_total = ladder_rhs(j, &ladder, 5, n)?;
        assert!(differential(&g, &xi_total)?.is_zero());
        let lambda = rat(-(j - 8) * (j * j - 4 * j + 27) * (j * j - 13 * j + 48), 11088);
        let residue = xi_total.add(&g12(n)?.scale(&-lambda.clone()))?;
        assert!(
            coboundary_preimage(&g, &residue)?.is_some(),
            "[xi] differs from lambda [g12] at j={j}"
        );
        println!("j={j:>2}: ladder holds, [xi] = {} [g12]", format_rational(&lambda));
    }

    // [g12] itself is nonzero, so lambda is pinned uniquely.
    assert!(coboundary_preimage(&g, &g12(n)?)?.is_none());
    println!("[g12] is a nonzero class in H^3 at weight 12");
    Ok(())
}
