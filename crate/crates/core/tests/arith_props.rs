mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use virasoro_hc::arith::{
    det3, parse_poly, rat, Assignment, Matrix3, Monomial, MultiPoly, Rational, Variable,
};
use virasoro_hc::classify::build_linear_system;

const VARS: [Variable; 4] = [Variable::B, Variable::Rho, Variable::P, Variable::M];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, VARS.len()).prop_map(|exps| {
        VARS.iter().zip(exps).fold(Monomial::one(), |acc, (v, e)| {
            acc.mul(&Monomial::var(*v, e))
        })
    })
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), coefficient()), 0..6).prop_map(MultiPoly::from_terms)
}

fn assignment() -> impl Strategy<Value = Assignment> {
    prop::collection::vec(coefficient(), VARS.len()).prop_map(|vals| {
        VARS.iter()
            .zip(vals)
            .fold(Assignment::new(), |acc, (v, x)| acc.with(*v, x))
    })
}

proptest! {
    #[test]
    fn ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &MultiPoly::one(), x.clone());
    }

    #[test]
    fn divrem_identity(x in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = x.divrem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, x);
        let lead = *d.leading_term().unwrap().0;
        for (mono, _) in r.terms() {
            prop_assert!(mono.checked_div(&lead).is_none());
        }
    }

    #[test]
    fn eval_is_multiplicative(x in poly(), y in poly(), sigma in assignment()) {
        let xy = (&x * &y).eval(&sigma).unwrap();
        prop_assert_eq!(xy, x.eval(&sigma).unwrap() * y.eval(&sigma).unwrap());
    }

    #[test]
    fn canonical_string_round_trips(x in poly()) {
        prop_assert_eq!(parse_poly(&x.canonical_string()).unwrap(), x);
    }

    #[test]
    fn pow_matches_repeated_product(x in poly(), e in 0i64..4) {
        let mut expected = MultiPoly::one();
        for _ in 0..e {
            expected = &expected * &x;
        }
        prop_assert_eq!(x.pow(e).unwrap(), expected);
    }
}

#[test]
fn negative_power_and_zero_divisor_are_rejected() {
    assert!(MultiPoly::var(Variable::M).pow(-1).is_err());
    assert!(MultiPoly::var(Variable::M)
        .divrem(&MultiPoly::zero())
        .is_err());
    assert!(MultiPoly::var(Variable::M)
        .eval(&Assignment::new())
        .is_err());
}

/// Determinant by fraction-exact Gaussian elimination with row pivoting.
fn gauss_det(mut a: [[Rational; 3]; 3]) -> Rational {
    let mut det = Rational::one();
    for col in 0..3 {
        let Some(pivot) = (col..3).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..3 {
            let f = &a[r][col] / &a[col][col];
            for c in col..3 {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

fn eval_matrix(m: &Matrix3, sigma: &Assignment) -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].eval(sigma).unwrap()))
}

#[test]
fn det3_agrees_with_numeric_elimination() {
    let mut rng = common::rng(7);
    let runner_matrix: Matrix3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            parse_poly(&format!(
                "b^{} - {}*rho*p + m^{} + {}",
                (i + j) % 3,
                i + 1,
                j,
                i * 3 + j
            ))
            .unwrap()
        })
    });
    let symbolic = det3(&runner_matrix);
    for _ in 0..100 {
        let sigma = VARS.iter().fold(Assignment::new(), |acc, v| {
            acc.with(*v, common::rational(&mut rng, 7, 5))
        });
        assert_eq!(
            symbolic.eval(&sigma).unwrap(),
            gauss_det(eval_matrix(&runner_matrix, &sigma))
        );
    }
}

#[test]
fn system_determinant_agrees_with_numeric_elimination() {
    use Variable::*;
    let system = build_linear_system().matrix;
    let delta = det3(&system);
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let sigma = [A, B, Bp, Rho, P, K, M]
            .iter()
            .fold(Assignment::new(), |acc, v| {
                acc.with(*v, common::rational(&mut rng, 6, 4))
            });
        assert_eq!(
            delta.eval(&sigma).unwrap(),
            gauss_det(eval_matrix(&system, &sigma))
        );
    }
}
