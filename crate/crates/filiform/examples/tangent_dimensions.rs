//! Tangent and orbit dimensions at points of the deformation variety of
//! V(16): the kernel of d_Ψ on positive-weight 1-cochains, the
//! unitriangular orbit dimension, the positive-weight cocycle space, and
//! the stabilizer — constant along the variety except for the jump at
//! the origin.

use filiform::catalog;
use filiform::deformation::{moduli_deformation, tangent_dims};
use filiform::exactla::{rat, Rational};
use filiform::Result;

fn main() -> Result<()> {
    let n = 16;
    let g0 = catalog::v(n)?;

    let samples: [(&str, [Rational; 5]); 4] = [
        ("origin", [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]),
        ("x1 axis", [rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]),
        ("x5 axis", [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(-2, 1)]),
        ("generic", [rat(1, 2), rat(-1, 1), rat(3, 1), rat(2, 3), rat(-5, 1)]),
    ];

    println!(
        "{:<10} {:>10} {:>7} {:>8} {:>12}",
        "point", "ker d_Psi", "orbit", "Z2_{>0}", "stabilizer"
    );
    for (label, x) in &samples {
        let psi = moduli_deformation(n, x)?;
        let dims = tangent_dims(&g0, &psi)?;
        println!(
            "{:<10} {:>10} {:>7} {:>8} {:>12}",
            label, dims.kernel_c1_pos, dims.orbit_dim, dims.z2_pos, dims.stabilizer_dim
        );

        // n(n-3)/2 = 104 positive-weight directions in C¹ split into an
        // 18-dimensional kernel plus the orbit's tangent directions; the
        // 107 = n(n-3)/2 + 3 cocycles leave codimension 5 = dim H²_{>0}
        // over the orbit.
        assert_eq!(dims.kernel_c1_pos, 18);
        assert_eq!(dims.z2_pos, 107);
        assert_eq!(dims.orbit_dim, 102);
        let expected_stab = if x.iter().all(|c| c == &rat(0, 1)) { 19 } else { 18 };
        assert_eq!(dims.stabilizer_dim, expected_stab);
    }
    println!("\nstabilizer jumps 18 -> 19 exactly at the origin");
    Ok(())
}
