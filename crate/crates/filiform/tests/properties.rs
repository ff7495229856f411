//! Randomized property suites, each on at least 100 cases with a fixed
//! seed: the differential squares to zero, the Nijenhuis–Richardson
//! bracket is a graded Lie bracket compatible with d, weights add, the
//! deform/extract pair inverts, and the exact row reduction is
//! idempotent. A failure in any of these is a soundness bug, never a
//! tolerance issue — all arithmetic is exact.

use filiform::catalog;
use filiform::cohomology::{differential, Cochain, Coefficients};
use filiform::deformation::{
    deform, extract_deformation, moduli_deformation, nr_bracket, Deformation,
};
use filiform::exactla::{rat, Rational, SparseMatrix};
use filiform::liealg::BasisChange;
use num_traits::Zero;
use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{random_cochain, random_matrix, random_rational};

const CASES: usize = 100;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xF111F0 + salt)
}

#[test]
fn the_differential_squares_to_zero() {
    let mut rng = rng(1);
    for case in 0..CASES {
        let n = rng.gen_range(5..=10);
        let q = rng.gen_range(0..=3);
        let coefficients =
            if rng.gen_bool(0.5) { Coefficients::Trivial } else { Coefficients::Adjoint };
        let g = match case % 3 {
            0 => catalog::v(n).unwrap(),
            1 => catalog::m0(n).unwrap(),
            _ => catalog::m2(n).unwrap(),
        };
        let c = random_cochain(&mut rng, n, q, coefficients, 4);
        let dd = differential(&g, &differential(&g, &c).unwrap()).unwrap();
        assert!(dd.is_zero(), "d² ≠ 0 on {} for {c}", g.name());
    }
}

#[test]
fn the_nr_bracket_is_super_antisymmetric() {
    // [a, b] = -(-1)^{(p-1)(q-1)} [b, a] on C^p, C^q.
    let mut rng = rng(2);
    for _ in 0..CASES {
        let n = rng.gen_range(5..=9);
        let p = rng.gen_range(1..=3usize);
        let q = rng.gen_range(1..=3usize);
        let a = random_cochain(&mut rng, n, p, Coefficients::Adjoint, 3);
        let b = random_cochain(&mut rng, n, q, Coefficients::Adjoint, 3);
        let ab = nr_bracket(&a, &b).unwrap();
        let ba = nr_bracket(&b, &a).unwrap();
        let sign = if (p - 1) * (q - 1) % 2 == 0 { rat(-1, 1) } else { rat(1, 1) };
        assert_eq!(ab, ba.scale(&sign), "antisymmetry fails at p={p}, q={q}");
    }
}

#[test]
fn the_nr_bracket_satisfies_the_graded_jacobi_identity() {
    // (-1)^{(p-1)(r-1)}[[a,b],c] + (-1)^{(q-1)(p-1)}[[b,c],a]
    //                            + (-1)^{(r-1)(q-1)}[[c,a],b] = 0.
    let mut rng = rng(3);
    for _ in 0..CASES {
        let n = rng.gen_range(5..=8);
        let (p, q, r) =
            (rng.gen_range(1..=3usize), rng.gen_range(1..=3usize), rng.gen_range(1..=3usize));
        let a = random_cochain(&mut rng, n, p, Coefficients::Adjoint, 2);
        let b = random_cochain(&mut rng, n, q, Coefficients::Adjoint, 2);
        let c = random_cochain(&mut rng, n, r, Coefficients::Adjoint, 2);
        let sign = |s: usize, t: usize| {
            if (s - 1) * (t - 1) % 2 == 0 {
                rat(1, 1)
            } else {
                rat(-1, 1)
            }
        };
        let total = nr_bracket(&nr_bracket(&a, &b).unwrap(), &c)
            .unwrap()
            .scale(&sign(p, r))
            .add(&nr_bracket(&nr_bracket(&b, &c).unwrap(), &a).unwrap().scale(&sign(q, p)))
            .unwrap()
            .add(&nr_bracket(&nr_bracket(&c, &a).unwrap(), &b).unwrap().scale(&sign(r, q)))
            .unwrap();
        assert!(total.is_zero(), "graded Jacobi fails at ({p},{q},{r})");
    }
}

#[test]
fn the_differential_is_a_derivation_of_the_nr_bracket() {
    // d[a, b] = (-1)^{q-1} [da, b] + [a, db] for a ∈ C^p, b ∈ C^q.
    let mut rng = rng(4);
    for case in 0..CASES {
        let n = rng.gen_range(5..=8);
        let p = rng.gen_range(1..=3usize);
        let q = rng.gen_range(1..=3usize);
        let g = if case % 2 == 0 { catalog::v(n).unwrap() } else { catalog::m0(n).unwrap() };
        let a = random_cochain(&mut rng, n, p, Coefficients::Adjoint, 3);
        let b = random_cochain(&mut rng, n, q, Coefficients::Adjoint, 3);
        let lhs = differential(&g, &nr_bracket(&a, &b).unwrap()).unwrap();
        let sign = if (q - 1) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let rhs = nr_bracket(&differential(&g, &a).unwrap(), &b)
            .unwrap()
            .scale(&sign)
            .add(&nr_bracket(&a, &differential(&g, &b).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "Leibniz fails at p={p}, q={q} on {}", g.name());
    }
}

#[test]
fn weights_are_additive_under_wedge_bracket_and_differential() {
    let mut rng = rng(5);
    let mut checked = 0;
    while checked < CASES {
        let n = rng.gen_range(6..=10);
        let g = catalog::v(n).unwrap();

        // Homogeneous pieces: single random terms.
        let (pa, pb) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = random_cochain(&mut rng, n, pa, Coefficients::Trivial, 1);
        let b = random_cochain(&mut rng, n, pb, Coefficients::Trivial, 1);
        let (Some(wa), Some(wb)) = (a.weight(&g), b.weight(&g)) else { continue };
        let wedge = a.wedge(&b).unwrap();
        if !wedge.is_zero() {
            assert_eq!(wedge.weight(&g), Some(wa + wb));
        }

        let u = random_cochain(&mut rng, n, 2, Coefficients::Adjoint, 1);
        let v = random_cochain(&mut rng, n, 2, Coefficients::Adjoint, 1);
        let (Some(wu), Some(wv)) = (u.weight(&g), v.weight(&g)) else { continue };
        let bracket = nr_bracket(&u, &v).unwrap();
        if !bracket.is_zero() {
            assert_eq!(bracket.weight(&g), Some(wu + wv));
        }

        // On a graded algebra the differential preserves weight.
        let du = differential(&g, &u).unwrap();
        if !du.is_zero() {
            assert_eq!(du.weight(&g), Some(wu));
        }
        checked += 1;
    }
}

#[test]
fn deform_and_extract_are_mutually_inverse() {
    // The ψ's pairwise commute from n = 14 on, so there Σ x_i ψ is a
    // genuine deformation for every X.
    let mut rng = rng(6);
    for case in 0..CASES {
        let n = rng.gen_range(14..=16);
        let g0 = catalog::v(n).unwrap();
        let x: [Rational; 5] = std::array::from_fn(|_| random_rational(&mut rng));
        let total = moduli_deformation(n, &x).unwrap();
        let psi = Deformation::from_cochain(&g0, &total).unwrap();

        let g = deform(&g0, &total).unwrap();
        let back = extract_deformation(&g, &g0).unwrap();
        assert_eq!(back, psi, "extract ∘ deform ≠ id at case {case}");

        // And the reverse composition: re-deforming the extraction gives
        // back the same bracket table.
        let again = deform(&g0, &back.total()).unwrap();
        assert_eq!(again.brackets(), g.brackets());
    }
}

#[test]
fn unitriangular_churn_never_changes_the_extracted_class() {
    // extract is only defined on filtered algebras presented in a weight
    // basis, but arbitrary index-raising changes keep it well-defined
    // and move the deformation within its equivalence class: the
    // canonical coordinates are untouched.
    let mut rng = rng(7);
    let n = 16;
    let g0 = catalog::v(n).unwrap();
    for _ in 0..25 {
        let x: [Rational; 5] = std::array::from_fn(|_| random_rational(&mut rng));
        let g = deform(&g0, &moduli_deformation(n, &x).unwrap()).unwrap();
        let mut below = Vec::new();
        for _ in 0..5 {
            let c = rng.gen_range(1..n as u16);
            let r = rng.gen_range(c + 1..=n as u16);
            below.push((r, c, random_rational(&mut rng)));
        }
        let phi = BasisChange::unitriangular(n, &below).unwrap();
        let moved = g.apply_basis_change(&phi).unwrap();
        let (point, _) =
            filiform::deformation::canonicalize(&extract_deformation(&moved, &g0).unwrap())
                .unwrap();
        assert_eq!(point, filiform::deformation::ModuliPoint::new(n, x).unwrap());
    }
}

#[test]
fn row_reduction_is_idempotent_and_rank_complements_the_kernel() {
    let mut rng = rng(8);
    for _ in 0..CASES {
        let rows = rng.gen_range(1..=7);
        let cols = rng.gen_range(1..=7);
        let fill = rng.gen_range(0..=rows * cols);
        let m = random_matrix(&mut rng, rows, cols, fill);
        let reduced = m.rref().reduced;
        assert_eq!(reduced.rref().reduced, reduced, "rref is not idempotent");
        assert_eq!(m.rank() + m.kernel_basis().dim(), cols);

        // Every kernel vector really multiplies to zero.
        for v in m.kernel_basis().basis() {
            assert!(m.mul_vec(v).is_empty());
        }
    }
}

#[test]
fn solve_certificates_are_exact() {
    let mut rng = rng(9);
    for _ in 0..CASES {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let fill = rng.gen_range(0..=rows * cols);
        let m = random_matrix(&mut rng, rows, cols, fill);

        // Build a guaranteed-consistent rhs from a random preimage.
        let mut x = filiform::exactla::SparseVec::new();
        for c in 0..cols {
            if rng.gen_bool(0.5) {
                x.insert(c, random_rational(&mut rng));
            }
        }
        let rhs = m.mul_vec(&x);
        let solution = m.solve(&rhs).expect("consistent system must solve");
        let mut residual = m.mul_vec(&solution);
        for (k, v) in rhs {
            let entry = residual.remove(&k).unwrap_or_else(Rational::zero) - v;
            assert!(entry.is_zero());
        }
        assert!(residual.values().all(Rational::is_zero));
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        .. ProptestConfig::default()
    })]

    /// Skew determinants are perfect squares (Pfaffian²) — checked via
    /// exact rational square root existence.
    #[test]
    fn skew_determinants_are_perfect_squares(entries in proptest::collection::vec((0usize..6, 0usize..6, -4i64..=4), 0..12)) {
        let size = 6;
        let mut m = SparseMatrix::zero(size, size);
        for (r, c, v) in entries {
            if r != c {
                m.set(r, c, rat(v, 1));
                m.set(c, r, rat(-v, 1));
            }
        }
        let det = m.skew_determinant().unwrap();
        prop_assert!(!filiform::exactla::rational_roots(&det, 2).unwrap().is_empty() || det.is_zero());
    }

    /// The wedge product is graded-commutative on random 1- and 2-forms.
    #[test]
    fn wedge_is_graded_commutative(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 8;
        let a = random_cochain(&mut rng, n, 1, Coefficients::Trivial, 2);
        let b = random_cochain(&mut rng, n, 2, Coefficients::Trivial, 2);
        // deg 1 · deg 2: a ∧ b = b ∧ a.
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        // deg 1 · deg 1: anticommutes.
        let c = random_cochain(&mut rng, n, 1, Coefficients::Trivial, 2);
        prop_assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap().scale(&rat(-1, 1)));
    }
}
