//! Tour of the algebra catalog: the graded chain algebras, the two
//! parametric families, and the deformed family, with their basic
//! invariants (Jacobi, filiformity, central series).

use filiform::catalog;
use filiform::exactla::rat;
use filiform::Result;

fn main() -> Result<()> {
    let samples = [
        catalog::m0(8)?,
        catalog::m1(8)?,
        catalog::m2(8)?,
        catalog::v(8)?,
        catalog::g8(&rat(1, 3))?,
        catalog::g10(&rat(2, 1))?,
        catalog::g_x(16, &[rat(1, 1), rat(-2, 1), rat(0, 1), rat(3, 1)])?,
    ];

    println!("{:<22} {:>4}  {:<8} {:>8} {:>6}", "algebra", "dim", "flavor", "filiform", "steps");
    for g in &samples {
        assert!(g.jacobi_residual().is_empty(), "{} fails Jacobi", g.name());
        let series = g.lower_central_series();
        println!(
            "{:<22} {:>4}  {:<8} {:>8} {:>6}",
            g.name(),
            g.n(),
            g.flavor().to_string(),
            g.is_filiform(),
            series.subspaces().len() - 1,
        );
    }

    // A filiform algebra of dimension n has the longest possible central
    // series: n - 1 proper steps. The chain V(8) realizes it.
    let v8 = catalog::v(8)?;
    println!("\nV(8) central series dims: {:?}", v8.lower_central_series().dims());
    assert_eq!(v8.lower_central_series().dims(), vec![8, 6, 5, 4, 3, 2, 1, 0]);

    // The excluded parameters of the parametric families are rejected,
    // not silently patched.
    assert!(catalog::g8(&rat(1, 2)).is_err());
    assert!(catalog::g10(&rat(-3, 1)).is_err());
    println!("excluded parameters g8(1/2), g10(-3) are rejected");
    Ok(())
}
