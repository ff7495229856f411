//! Symplectic census: every catalog (algebra, form) pair passes closed +
//! nondegenerate, and the existence decision on the deformed family
//! splits along x₁: a witness when x₁ = 0, a center-pairing certificate
//! of nonexistence when x₁ ≠ 0.

use filiform::catalog;
use filiform::cohomology::cohomology_full;
use filiform::cohomology::Coefficients;
use filiform::deformation::{deform, moduli_deformation};
use filiform::exactla::rat;
use filiform::symplectic::{is_closed, nondegenerate, symplectic_decision, SymplecticDecision};
use filiform::Result;

fn main() -> Result<()> {
    // The even-dimensional catalog: chains with their standard forms.
    for n in [4usize, 6, 8, 10, 12] {
        for (g, omega) in [
            (catalog::m0(n)?, catalog::omega_m0(n)?),
            (catalog::v(n)?, catalog::omega_v(n)?),
        ] {
            assert!(is_closed(&g, &omega)?);
            assert!(nondegenerate(&g, &omega)?);
            println!("{:<8} closed + nondegenerate", g.name());
        }
    }
    for alpha in [rat(1, 1), rat(3, 1), rat(-3, 1)] {
        let g = catalog::g8(&alpha)?;
        let omega = catalog::omega_g8(&alpha)?;
        assert!(is_closed(&g, &omega)? && nondegenerate(&g, &omega)?);
        println!("{:<8} closed + nondegenerate", g.name());
    }

    // The deformed family at 2k = 16. x₁ = 0 (in moduli coordinates the
    // first slot) leaves room for Ω_{X,x₅}; the decision finds a witness.
    let n = 16;
    let g0 = catalog::v(n)?;
    let x = [rat(0, 1), rat(2, 1), rat(-1, 1), rat(3, 2), rat(1, 1)];
    let g = deform(&g0, &moduli_deformation(n, &x)?)?;
    match symplectic_decision(&g, 0, 64)? {
        SymplecticDecision::Exists(w) => {
            assert!(is_closed(&g, &w)? && nondegenerate(&g, &w)?);
            println!("x1 = 0 family member: witness with {} terms", w.entries().len());
        }
        other => panic!("expected a witness, got {other:?}"),
    }

    // x₁ ≠ 0 kills every candidate: each closed 2-form annihilates the
    // center, so nondegeneracy is impossible. Along the way the Betti
    // numbers collapse to b₁ = b₂ = 2.
    let x = [rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    let g = deform(&g0, &moduli_deformation(n, &x)?)?;
    let b1 = cohomology_full(&g, 1, Coefficients::Trivial)?.dim_h;
    let b2 = cohomology_full(&g, 2, Coefficients::Trivial)?.dim_h;
    assert_eq!((b1, b2), (2, 2));
    match symplectic_decision(&g, 0, 64)? {
        SymplecticDecision::CertifiedNone(cert) => {
            println!("x1 != 0 family member: b1 = b2 = 2, no symplectic form ({cert})");
        }
        other => panic!("expected a certificate, got {other:?}"),
    }
    Ok(())
}
