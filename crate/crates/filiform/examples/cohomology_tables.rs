//! Weight-graded Chevalley–Eilenberg cohomology tables of the chain
//! algebras V(n): trivial-coefficient H² and H³, and adjoint H⁰, H¹, H².
//!
//! The adjoint H² table drives the whole deformation story: its
//! positive-weight part is the five-dimensional space spanned by the
//! basic cocycles ψ_{n,7..11}.

use filiform::catalog;
use filiform::cohomology::{cohomology, Coefficients};
use filiform::Result;

fn line(pairs: &[(i64, usize)]) -> String {
    pairs.iter().map(|(w, d)| format!("{w}:{d}")).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<()> {
    println!("trivial coefficients");
    for n in [12, 14, 16] {
        let g = catalog::v(n)?;
        for q in [2usize, 3] {
            let report = cohomology(&g, q, Coefficients::Trivial)?;
            println!(
                "  H^{q}(V({n}))  total {:>2}   weights {}",
                report.total_h(),
                line(&report.h_weights())
            );
        }
    }

    println!("\nadjoint coefficients");
    for n in [12, 14, 16] {
        let g = catalog::v(n)?;
        for q in [0usize, 1, 2] {
            let report = cohomology(&g, q, Coefficients::Adjoint)?;
            println!(
                "  H^{q}(V({n}),V({n}))  total {:>2}   weights {}",
                report.total_h(),
                line(&report.h_weights())
            );
        }
    }

    // The positive-weight part of adjoint H² is exactly 5-dimensional for
    // every n >= 12: one class per ψ level. At n >= 16 nothing else has
    // positive weight, so deformations live in a clean K^5.
    let g = catalog::v(16)?;
    let h2 = cohomology(&g, 2, Coefficients::Adjoint)?;
    let positive: usize = h2.h_weights().iter().filter(|(w, _)| *w > 0).map(|(_, d)| d).sum();
    assert_eq!(positive, 5);
    println!("\npositive-weight adjoint H² of V(16) is {positive}-dimensional");
    Ok(())
}
