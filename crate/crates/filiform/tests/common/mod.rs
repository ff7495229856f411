//! Shared generators for the randomized test suites. Everything is
//! driven by explicitly seeded ChaCha streams so failures reproduce
//! byte-for-byte.

use filiform::cohomology::{Cochain, Coefficients};
use filiform::exactla::{rat, Rational, SparseMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// A random cochain with up to `terms` nonzero entries. Adjoint targets
/// and argument tuples are drawn freely; `add_term` handles the
/// antisymmetrization and drops collisions.
pub fn random_cochain(
    rng: &mut ChaCha8Rng,
    n: usize,
    q: usize,
    coefficients: Coefficients,
    terms: usize,
) -> Cochain {
    let mut c = Cochain::zero(n, q, coefficients);
    for _ in 0..terms {
        let mut args: Vec<u16> = Vec::with_capacity(q);
        while args.len() < q {
            let i = rng.gen_range(1..=n as u16);
            if !args.contains(&i) {
                args.push(i);
            }
        }
        let target = match coefficients {
            Coefficients::Trivial => None,
            Coefficients::Adjoint => Some(rng.gen_range(1..=n as u16)),
        };
        c.add_term(&args, target, random_rational(rng)).unwrap();
    }
    c
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, fill: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zero(rows, cols);
    for _ in 0..fill {
        m.set(rng.gen_range(0..rows), rng.gen_range(0..cols), random_rational(rng));
    }
    m
}
