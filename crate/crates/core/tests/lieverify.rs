mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use invdmod::lieverify::forms::{FormContext, FormMatrix};
use invdmod::lieverify::mpoly::MPoly;
use invdmod::lieverify::{
    is_lie_hom, maurer_cartan_check, maurer_cartan_form, trace_dlogdet_check, HomReport, IdentityCheck, LieAlgebraPresentation,
    LieError, LinearRep,
};
use invdmod::limits::DEFAULT_MAX_DEGREE;
use invdmod::{Rational, RationalMatrix};

const NAMES: [&str; 8] = ["gl_1", "gl_2", "gl_3", "sl_2", "sl_3", "sl_4", "abelian_2", "abelian_5"];

/// `Σ_cyc [[x_i, x_j], x_k]` computed from the constants directly.
fn jacobi_holds(c: &[Vec<Vec<Rational>>]) -> bool {
    let n = c.len();
    let zero = Rational::from_integer(0.into());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let mut total = zero.clone();
                    for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, coefficient) in c[a][b].iter().enumerate() {
                            total += coefficient * &c[m][d][out];
                        }
                    }
                    if total != zero {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn conjugate_rep(rho: &LinearRep, p: &RationalMatrix) -> LinearRep {
    let inv = p.inverse().unwrap();
    LinearRep::new(rho.size(), rho.matrices().iter().map(|m| inv.mul(m).mul(p)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn builtin_representations_survive_conjugation(name in prop::sample::select(NAMES.to_vec()), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = LieAlgebraPresentation::builtin(name).unwrap();
        prop_assert!(jacobi_holds(l.constants()));
        let adjoint = l.adjoint_representation();
        prop_assert_eq!(is_lie_hom(&l, &adjoint).unwrap(), HomReport::Ok);
        if let Ok(rho) = LinearRep::defining(name) {
            let p = random_invertible(&mut rng, rho.size());
            prop_assert_eq!(is_lie_hom(&l, &conjugate_rep(&rho, &p)).unwrap(), HomReport::Ok);
        }
    }

    #[test]
    fn perturbed_constants_are_accepted_exactly_when_jacobi_holds(
        i in 0usize..4, j in 0usize..4, k in 0usize..4, num in -2i64..=2,
    ) {
        prop_assume!(i != j);
        let mut c = LieAlgebraPresentation::gl(2).unwrap().constants().to_vec();
        c[i][j][k] += int(num);
        c[j][i][k] -= int(num);
        let result = LieAlgebraPresentation::new(c.clone());
        prop_assert_eq!(result.is_ok(), jacobi_holds(&c));
        if let Err(e) = result {
            let is_jacobi = matches!(e, LieError::JacobiViolation(..));
            prop_assert!(is_jacobi);
        }
    }

    #[test]
    fn exterior_derivative_squares_to_zero(
        coeffs in prop::collection::vec((-3i64..=3, 0usize..4, 0usize..4), 1..6), power in 0u32..=2,
    ) {
        let ctx = FormContext::new(2, DEFAULT_MAX_DEGREE);
        let numerator = coeffs.iter().fold(MPoly::zero(4), |acc, &(c, a, b)| {
            acc.add(&MPoly::var(4, a).mul(&MPoly::var(4, b)).scale(&int(c)))
        });
        let f = ctx.function(numerator, power).unwrap();
        prop_assert!(ctx.d(&ctx.d(&f).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn identities_hold_up_to_rank_three() {
    for r in 1..=3 {
        assert_eq!(maurer_cartan_check(r, DEFAULT_MAX_DEGREE).unwrap(), IdentityCheck::Ok);
        assert_eq!(trace_dlogdet_check(r, DEFAULT_MAX_DEGREE).unwrap(), IdentityCheck::Ok);
    }
    assert!(matches!(maurer_cartan_check(4, DEFAULT_MAX_DEGREE), Err(LieError::UnsupportedRank(4))));
}

#[test]
fn degree_budget_is_enforced() {
    assert!(matches!(maurer_cartan_check(3, 2), Err(LieError::DegreeLimitExceeded { .. })));
}

#[test]
fn the_form_is_left_invariant_at_the_identity() {
    // at g = I, θ(Y) = Y
    let r = 2;
    let ctx = FormContext::new(r, DEFAULT_MAX_DEGREE);
    let theta: FormMatrix = maurer_cartan_form(&ctx).unwrap();
    let identity = [int(1), int(0), int(0), int(1)];
    for i in 0..r {
        for j in 0..r {
            let form = theta.get(i, j);
            for v in 0..r * r {
                let value = form.components().get(&vec![v]).map(|n| n.eval(&identity)).unwrap_or_else(|| int(0));
                let expected = if v == i * r + j { int(1) } else { int(0) };
                assert_eq!(value, expected, "θ_{i}{j} on dx_{v}");
            }
        }
    }
}

#[test]
fn malformed_algebras_are_rejected() {
    let mut c = LieAlgebraPresentation::sl(2).unwrap().constants().to_vec();
    c[0][1][0] += int(1);
    assert!(matches!(LieAlgebraPresentation::new(c), Err(LieError::NotAntisymmetric(0, 1))));
    let mut diag = vec![vec![vec![int(0); 2]; 2]; 2];
    diag[0][0][1] = int(1);
    assert!(matches!(LieAlgebraPresentation::new(diag), Err(LieError::NotAntisymmetric(0, 0))));
    let l = LieAlgebraPresentation::builtin("sl_2").unwrap();
    let wrong_count = LinearRep::new(2, vec![RationalMatrix::identity(2)]).unwrap();
    assert!(matches!(is_lie_hom(&l, &wrong_count), Err(LieError::DimensionMismatch { expected: 3, got: 1 })));
}
