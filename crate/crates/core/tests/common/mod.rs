#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;
use qshuffle::qring::rational;
use qshuffle::{Binomial, LaurentQ, MultiLaurent, QMonomial, RatFun, RatQ, VarId};

pub const VARS: [VarId; 3] = [VarId::z(1, 1), VarId::z(1, 2), VarId::z(2, 1)];

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    ((1i64..=4), prop::bool::ANY, (1i64..=3))
        .prop_map(|(n, neg, d)| rational(if neg { -n } else { n }, d))
}

pub fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-3i32..=3, small_rational()), 0..4).prop_map(LaurentQ::from_terms)
}

pub fn ratq() -> impl Strategy<Value = RatQ> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatQ::new(n, d).unwrap())
}

pub fn qmonomial() -> impl Strategy<Value = QMonomial> {
    (nonzero_rational(), -3i32..=3).prop_map(|(c, e)| QMonomial::new(c, e))
}

pub fn poly() -> impl Strategy<Value = MultiLaurent> {
    let term = (laurent(), prop::collection::vec(-2i32..=2, 3));
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = MultiLaurent::zero();
        for (c, e) in terms {
            let powers: Vec<(VarId, i32)> = VARS.iter().copied().zip(e).collect();
            p = &p + &MultiLaurent::monomial(RatQ::from_laurent(c), &powers);
        }
        p
    })
}

pub fn binomial() -> impl Strategy<Value = Binomial> {
    (qmonomial(), 0usize..3, qmonomial(), 1usize..3)
        .prop_map(|(a, i, b, shift)| Binomial::new(a, VARS[i], b, VARS[(i + shift) % 3]))
}

/// `poly / (product of up to two binomials)`.
pub fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), prop::collection::vec(binomial(), 0..3)).prop_map(|(p, d)| RatFun::new(p, &d))
}

/// A sample point: `q0` away from `0, +-1` and nonzero variable values.
pub fn point() -> impl Strategy<Value = (BigRational, BTreeMap<VarId, BigRational>)> {
    let q0 = prop::sample::select(vec![
        rational(2, 1),
        rational(3, 1),
        rational(-2, 1),
        rational(1, 2),
        rational(5, 3),
        rational(-3, 4),
    ]);
    (q0, prop::collection::vec(nonzero_rational(), 3)).prop_map(|(q0, xs)| {
        let vals = VARS.iter().copied().zip(xs).collect();
        (q0, vals)
    })
}
