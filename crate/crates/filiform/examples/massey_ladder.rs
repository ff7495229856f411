//! Massey obstructions, step by step: a weight-graded deformation
//! Ψ = Ψ₁ + Ψ₂ + ... extends from weight k-1 to weight k exactly when
//! the class of -½ Σ_{m+l=k} [Ψ_m, Ψ_l] vanishes in H³₍ₖ₎. For the
//! basic cocycles every bracket [ψ_i, ψ_j] is zero on the nose, so the
//! whole ladder of obstructions collapses — this is why the moduli space
//! is a plain K⁵ with no higher-order corrections.

use filiform::catalog;
use filiform::cohomology::{cohomology_block, Coefficients};
use filiform::deformation::{massey_obstruction, Deformation};
use filiform::exactla::rat;
use filiform::Result;

fn main() -> Result<()> {
    let n = 16;
    let g0 = catalog::v(n)?;

    // Ψ = x₂ψ₁₀ + x₅ψ₇ has components at weights 6 and 9.
    let total = catalog::psi(n, 10)?.scale(&rat(2, 1)).add(&catalog::psi(n, 7)?.scale(&rat(-1, 1)))?;
    let psi = Deformation::from_cochain(&g0, &total)?;
    println!("partial deformation with components at weights {:?}", psi.weights());

    // Every obstruction vanishes: the first candidate weight where two
    // components can interact is 12 = 6 + 6, then 15 = 6 + 9, 18 = 9 + 9.
    for k in [12i64, 15, 18] {
        let ob = massey_obstruction(&g0, &psi, k)?;
        assert!(ob.is_zero(), "unexpected obstruction at weight {k}");
        let h3 = cohomology_block(&g0, 3, k, Coefficients::Adjoint)?;
        println!(
            "weight {k:>2}: obstruction class = 0 in H³ of dimension {}",
            h3.dim_h
        );
    }

    // The raw representative is not even nonzero here: the ψ's commute
    // under the Nijenhuis–Richardson bracket before passing to cohomology.
    let ob = massey_obstruction(&g0, &psi, 15)?;
    assert!(ob.representative().is_zero());
    println!("the raw cocycle -½[Ψ,Ψ]_15 vanishes identically");
    Ok(())
}
