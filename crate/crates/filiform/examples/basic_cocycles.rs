//! The basic cocycles ψ_{n,l}, l ∈ 7..=11: closed, pairwise commuting
//! under the Nijenhuis–Richardson bracket, and therefore summable into
//! genuine deformations with zero residual — no Massey corrections ever
//! needed for this family.

use filiform::catalog;
use filiform::cohomology::is_cocycle;
use filiform::deformation::{deformation_residual, nr_bracket, Deformation};
use filiform::exactla::rat;
use filiform::Result;

fn main() -> Result<()> {
    let n = 16;
    let g0 = catalog::v(n)?;

    for l in 7..=11 {
        let psi = catalog::psi(n, l)?;
        assert!(is_cocycle(&g0, &psi)?, "psi({n},{l}) is not closed");
        println!("d psi({n},{l}) = 0   (weight {})", psi.weight(&g0).unwrap());
    }

    for i in 7..=11 {
        for j in i..=11 {
            let b = nr_bracket(&catalog::psi(n, i)?, &catalog::psi(n, j)?)?;
            assert!(b.is_zero(), "[psi_{i}, psi_{j}] != 0");
        }
    }
    println!("[psi({n},i), psi({n},j)] = 0 for all i, j in 7..=11");

    // Any linear combination solves the full deformation equation on the
    // nose: the residual [Ψ, Ψ] vanishes identically.
    let x = [rat(3, 2), rat(-1, 1), rat(0, 1), rat(7, 3), rat(-4, 1)];
    let total = filiform::deformation::moduli_deformation(n, &x)?;
    let psi = Deformation::from_cochain(&g0, &total)?;
    let residual = deformation_residual(&g0, &psi)?;
    assert!(residual.is_zero());
    println!("residual of Σ x_i ψ at X = (3/2, -1, 0, 7/3, -4): 0");

    // The deformed bracket really is a Lie bracket.
    let g = filiform::deformation::deform(&g0, &total)?;
    assert!(g.jacobi_residual().is_empty());
    assert!(g.is_filiform());
    println!("deform(V({n}), Σ x_i ψ) satisfies Jacobi and stays filiform");
    Ok(())
}
