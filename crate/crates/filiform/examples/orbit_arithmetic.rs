//! Orbit arithmetic on the moduli space: the scaling action
//! x_i ↦ α^{n-12+i} x_i of ℚ*, exact orbit-equivalence decisions via
//! rational root extraction, and canonical orbit representatives.

use filiform::deformation::{moduli_normal_form, orbit_equivalent, ModuliPoint, OrbitAnswer};
use filiform::exactla::rat;
use filiform::Result;

fn point(n: usize, x: [i64; 5]) -> Result<ModuliPoint> {
    ModuliPoint::new(n, x.map(|v| rat(v, 1)))
}

fn main() -> Result<()> {
    let n = 16;

    // x₂ carries weight n-10 = 6, and 64 = (±2)⁶: two scalars connect
    // the points.
    let p = point(n, [0, 1, 0, 0, 0])?;
    let q = point(n, [0, 64, 0, 0, 0])?;
    match orbit_equivalent(&p, &q)? {
        OrbitAnswer::Scalars(alphas) => {
            println!("(0,1,0,0,0) ~ (0,64,0,0,0) via alpha in {alphas:?}");
            assert_eq!(alphas, vec![rat(-2, 1), rat(2, 1)]);
        }
        other => panic!("expected two scalars, got {other:?}"),
    }

    // 2 has no rational 6th root: same support, no orbit.
    let r = point(n, [0, 2, 0, 0, 0])?;
    assert_eq!(orbit_equivalent(&p, &r)?, OrbitAnswer::NotEquivalent);
    println!("(0,1,0,0,0) !~ (0,2,0,0,0): 2 is not a rational 6th power");

    // Support mismatch is decided without any root extraction.
    let s = point(n, [1, 1, 0, 0, 0])?;
    assert_eq!(orbit_equivalent(&p, &s)?, OrbitAnswer::NotEquivalent);

    // The zero point is a fixed orbit: every scalar works.
    let zero = point(n, [0; 5])?;
    assert_eq!(orbit_equivalent(&zero, &zero)?, OrbitAnswer::Any);
    println!("0 ~ 0 for every alpha");

    // Normal forms decide equivalence by equality, including the odd-weight
    // sign fix: x₅ has weight 9, and (-1)⁹ = -1 flips the sign away.
    assert_eq!(moduli_normal_form(&q)?, p);
    let neg = point(n, [0, 0, 0, 0, -1])?;
    assert_eq!(moduli_normal_form(&neg)?, point(n, [0, 0, 0, 0, 1])?);
    println!("normal form of (0,0,0,0,-1) is (0,0,0,0,1)");

    // Equivalent points share a normal form; inequivalent ones never do.
    assert_eq!(moduli_normal_form(&p)?, moduli_normal_form(&q)?);
    assert_ne!(moduli_normal_form(&p)?, moduli_normal_form(&r)?);
    println!("normal forms separate orbits exactly");
    Ok(())
}
