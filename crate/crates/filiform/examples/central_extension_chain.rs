//! From even to odd dimension: extend a deformed family member 𝔤_X by
//! its symplectic form Ω_{X,x₅} and land exactly on the odd-dimensional
//! deformation with coordinates (x₁..x₄, x₅). The extension is filiform
//! (the form pairs the center nontrivially) and carries the contact form
//! e^{2k+1}.

use filiform::catalog;
use filiform::deformation::{canonicalize, extract_deformation, ModuliPoint};
use filiform::exactla::rat;
use filiform::symplectic::{
    central_extension, contact_check, extension_filiform_check, is_closed,
};
use filiform::cohomology::Cochain;
use filiform::exactla::Rational;
use filiform::Result;
use num_traits::One;

fn main() -> Result<()> {
    let two_k = 16;
    let x = [rat(2, 1), rat(-1, 1), rat(3, 1), rat(1, 1)];
    let x5 = rat(-2, 1);

    let g = catalog::g_x(two_k, &x)?;
    let omega = catalog::omega_x(two_k, &x, &x5)?;
    assert!(is_closed(&g, &omega)?);

    // The filiform criterion reads off the extension's shape before
    // building it: ι_ξ Ω ≠ 0 on the center ξ.
    assert!(extension_filiform_check(&g, &omega)?);

    let ext = central_extension(&g, &omega)?;
    println!("{} -> {} (dim {})", g.name(), ext.name(), ext.n());
    assert_eq!(ext.n(), two_k + 1);
    assert!(ext.is_filiform());
    assert!(ext.jacobi_residual().is_empty());

    // Extract against V(17) and canonicalize: the five coordinates are
    // (x₁..x₄, x₅) on the nose.
    let g0 = catalog::v(two_k + 1)?;
    let psi = extract_deformation(&ext, &g0)?;
    let (point, _) = canonicalize(&psi)?;
    let expected = ModuliPoint::new(
        two_k + 1,
        [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone(), x5.clone()],
    )?;
    assert_eq!(point, expected);
    println!("extension canonicalizes to {point}");

    // Odd dimension 2k+1 = 17: θ = e^17 is a contact form.
    let theta = Cochain::form(two_k + 1, 1, [(vec![17u16], Rational::one())])?;
    assert!(contact_check(&ext, &theta)?);
    println!("theta = e^17 is a contact form on the extension");

    // Extending by zero instead gives a direct sum with a 2-dimensional
    // center — never filiform.
    let zero = Cochain::zero(two_k, 2, filiform::cohomology::Coefficients::Trivial);
    let sum = central_extension(&g, &zero)?;
    assert!(!sum.is_filiform());
    assert!(!extension_filiform_check(&g, &zero)?);
    println!("extending by the zero form loses filiformity, as predicted");
    Ok(())
}
