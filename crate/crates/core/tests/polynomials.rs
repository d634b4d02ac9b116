mod common;

use common::*;
use proptest::prelude::*;
use qshuffle::poly::color_vars;
use qshuffle::qring::rational;
use qshuffle::{Binomial, EvalError, MultiLaurent, QMonomial, RatQ, VarId};

fn factorial(n: i64) -> RatQ {
    RatQ::from_rational(rational((1..=n).product(), 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divide_after_multiply(p in poly(), b in binomial()) {
        let prod = &p * &MultiLaurent::binomial(&b);
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), p);
    }

    #[test]
    fn eval_matches_termwise_oracle(p in poly(), g in poly(), pt in point()) {
        let (q0, vals) = pt;
        let (Ok(x), Ok(y)) = (p.eval(&q0, &vals), g.eval(&q0, &vals)) else { return Ok(()) };
        prop_assert_eq!((&p * &g).eval(&q0, &vals).unwrap(), &x * &y);
        prop_assert_eq!((&p + &g).eval(&q0, &vals).unwrap(), &x + &y);
        prop_assert_eq!(p.bar().eval(&(rational(1, 1) / &q0), &vals).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divisible_iff_substitution_vanishes(p in poly(), b in binomial()) {
        // a x_i - b x_j divides p exactly when p(x_i = (b/a) x_j) = 0
        let image = &b.b * &b.a.inv();
        let vanishes = p.substitute(b.i, &image, b.j).is_zero();
        prop_assert_eq!(p.exact_divide(&b).is_ok(), vanishes);
    }

    #[test]
    fn symmetrizing_twice_multiplies_by_factorial(p in poly()) {
        let vars = [VARS[0], VARS[1]];
        let s = p.symmetrize(&vars);
        prop_assert!(s.is_symmetric(&vars));
        prop_assert_eq!(s.symmetrize(&vars), s.scale(&factorial(2)));
    }
}

#[test]
fn symmetrizing_three_variables() {
    let zs = color_vars(1, 3);
    let p = MultiLaurent::monomial(RatQ::q_pow(1), &[(zs[0], 2), (zs[1], -1)]);
    let s = p.symmetrize_color(1, 3);
    assert_eq!(s.num_terms(), 6);
    assert!(s.is_symmetric_color(1, 3));
    assert_eq!(s.symmetrize_color(1, 3), s.scale(&factorial(3)));
}

#[test]
fn non_divisible_is_reported() {
    let x = VarId::z(1, 1);
    let y = VarId::z(1, 2);
    let p = &MultiLaurent::var(x) + &MultiLaurent::var(y);
    assert!(p
        .exact_divide(&Binomial::monic(x, QMonomial::one(), y))
        .is_err());
    let vals = [(x, rational(0, 1)), (y, rational(1, 1))]
        .into_iter()
        .collect();
    assert_eq!(p.eval(&rational(2, 1), &vals), Err(EvalError::ZeroValue));
}
