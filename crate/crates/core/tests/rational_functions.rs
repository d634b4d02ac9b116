mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use qshuffle::qring::rational;
use qshuffle::{Binomial, EvalError, MultiLaurent, QMonomial, RatFun, RatQ};

/// Evaluation of `lhs - rhs` where both sides are finite; `None` at a pole.
fn eval_diff(
    a: &RatFun,
    b: &RatFun,
    pt: &(
        num_rational::BigRational,
        std::collections::BTreeMap<qshuffle::VarId, num_rational::BigRational>,
    ),
) -> Option<num_rational::BigRational> {
    match (a.eval(&pt.0, &pt.1), b.eval(&pt.0, &pt.1)) {
        (Ok(x), Ok(y)) => Some(x - y),
        (Err(EvalError::Pole), _) | (_, Err(EvalError::Pole)) => None,
        (Err(e), _) | (_, Err(e)) => panic!("{e:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalization_is_idempotent(f in ratfun()) {
        let mut g = f.clone();
        g.normalize();
        prop_assert_eq!(&g, &f);
    }

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RatFun::one(), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn arithmetic_agrees_with_evaluation(a in ratfun(), b in ratfun(), pt in point()) {
        let sum = &a + &b;
        let prod = &a * &b;
        if let (Ok(x), Ok(y)) = (a.eval(&pt.0, &pt.1), b.eval(&pt.0, &pt.1)) {
            prop_assert_eq!(sum.eval(&pt.0, &pt.1).unwrap(), &x + &y);
            prop_assert_eq!(prod.eval(&pt.0, &pt.1).unwrap(), &x * &y);
        }
    }

    #[test]
    fn zero_test_agrees_with_evaluation(a in ratfun(), pt in point()) {
        // a*b - b*a and a - a are zero; a + 1 - a is not
        let b = RatFun::new(MultiLaurent::var(VARS[0]), &[Binomial::monic(VARS[1], QMonomial::q_pow(2), VARS[2])]);
        let z = &(&a * &b) - &(&b * &a);
        prop_assert!(z.is_zero());
        if let Some(d) = eval_diff(&(&a * &b), &(&b * &a), &pt) {
            prop_assert!(d.is_zero());
        }
        let one = &(&a + &RatFun::one()) - &a;
        prop_assert!(!one.is_zero());
        if let Ok(v) = one.eval(&pt.0, &pt.1) {
            prop_assert_eq!(v, rational(1, 1));
        }
    }
}

#[test]
fn bulk_sum_matches_pairwise_sum() {
    let [x, y, w] = VARS;
    let terms: Vec<RatFun> = (0..4)
        .map(|k| {
            RatFun::new(
                MultiLaurent::monomial(RatQ::q_pow(k), &[(x, k)]),
                &[
                    Binomial::monic(x, QMonomial::q_pow(k - 1), y),
                    Binomial::monic(y, QMonomial::q_pow(2), w),
                ],
            )
        })
        .collect();
    let pairwise = terms.iter().fold(RatFun::zero(), |acc, t| &acc + t);
    assert_eq!(RatFun::sum(terms.iter()), pairwise);
}
