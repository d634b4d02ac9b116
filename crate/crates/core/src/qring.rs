//! Exact arithmetic over the coefficient field `Q(q)`.
//!
//! [`LaurentQ`] is a Laurent polynomial in the single symbol `q` with
//! arbitrary-precision rational coefficients, [`RatQ`] a reduced quotient of
//! two of them, and [`QMonomial`] the invertible elements `c q^e` that show
//! up as substitution images and binomial-factor coefficients.
//!
//! The q-combinatorial functions use the balanced convention
//! `[n]_q = (q^n - q^-n) / (q - q^-1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::QError;

/// Sparse Laurent polynomial in `q` over the rationals.
///
/// Terms are kept sorted by ascending exponent; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: Vec<(i32, BigRational)>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentQ {
                terms: vec![(exp, c)],
            }
        }
    }

    /// The symbol `q` raised to `exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut v: Vec<(i32, BigRational)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, BigRational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentQ { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i32, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn low_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn high_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    /// Returns the single term if this polynomial is a monomial `c q^e`.
    pub fn as_monomial(&self) -> Option<QMonomial> {
        if self.terms.len() == 1 {
            Some(QMonomial::new(self.terms[0].1.clone(), self.terms[0].0))
        } else {
            None
        }
    }

    /// Multiplies by `q^by`.
    pub fn shift(&self, by: i32) -> Self {
        LaurentQ {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentQ { terms }
    }

    /// Substitutes `q -> q^d` for a nonzero integer `d`.
    pub fn subs_q_power(&self, d: i32) -> Self {
        assert!(d != 0, "q -> q^0 is not an automorphism");
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (e * d, c.clone())).collect();
        if d < 0 {
            terms.reverse();
        }
        LaurentQ { terms }
    }

    /// Evaluates at a nonzero rational `q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, QError> {
        if q0.is_zero() {
            return Err(QError::ZeroPoint);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rational_pow(q0, *e as i64);
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentQ) -> Option<LaurentQ> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(m) = d.as_monomial() {
            let inv = m.inv();
            return Some(self.shift(inv.exp).scale(&inv.coeff));
        }
        let (sa, a) = self.to_dense();
        let (sd, dd) = d.to_dense();
        let (quot, rem) = dense_divrem(&a, &dd);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(sa - sd, quot))
    }

    /// Shift exponent and dense ascending coefficients of `q^-low * self`.
    fn to_dense(&self) -> (i32, Vec<BigRational>) {
        let lo = match self.low_exp() {
            Some(lo) => lo,
            None => return (0, Vec::new()),
        };
        let hi = self.high_exp().unwrap();
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i32, coeffs: Vec<BigRational>) -> Self {
        LaurentQ {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i32, c))
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate_other { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentQ { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(*e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.high_exp().unwrap() + other.high_exp().unwrap();
        let mut acc = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self::from_dense(lo, acc)
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentQ {
    /// Descending exponents, e.g. `q^2 + 1 + q^-2` or `-3/2*q + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            if *e == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !unit {
                write!(f, "{}*", mag)?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{}", e)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $ty:ty, $body:expr) => {
        impl<'a> $tr<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(self, rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $body;
                f(&self, rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, LaurentQ, |a, b| a.merge(b, false));
forward_binop!(Sub, sub, LaurentQ, |a, b| a.merge(b, true));
forward_binop!(Mul, mul, LaurentQ, |a, b| a.product(b));

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(mut self) -> LaurentQ {
        for t in &mut self.terms {
            t.1 = -core::mem::take(&mut t.1);
        }
        self
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -self.clone()
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        *self = self.merge(rhs, true);
    }
}

impl MulAssign<&LaurentQ> for LaurentQ {
    fn mul_assign(&mut self, rhs: &LaurentQ) {
        *self = self.product(rhs);
    }
}

/// `x^e` for a nonzero rational and any integer exponent.
/// `n/d` as a big rational.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        n >>= 1;
        if n > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Long division of dense ascending-coefficient polynomials.
fn dense_divrem(a: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    let mut d = d.to_vec();
    trim(&mut rem);
    trim(&mut d);
    assert!(!d.is_empty(), "division by the zero polynomial");
    if rem.len() < d.len() {
        return (Vec::new(), rem);
    }
    let dl = d.len() - 1;
    let lead_inv = d[dl].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - dl];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, di) in d.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    rem.truncate(dl);
    trim(&mut rem);
    (quot, rem)
}

fn dense_monic(mut v: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut v);
    if let Some(l) = v.last().cloned() {
        for c in &mut v {
            *c /= &l;
        }
    }
    v
}

fn dense_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = dense_monic(a.to_vec());
    let mut y = dense_monic(b.to_vec());
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = dense_monic(r);
    }
    x
}

/// An invertible element `coeff * q^exp` of `Q(q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMonomial {
    pub coeff: BigRational,
    pub exp: i32,
}

impl QMonomial {
    /// Panics if `coeff` is zero: q-monomials are units.
    pub fn new(coeff: BigRational, exp: i32) -> Self {
        assert!(!coeff.is_zero(), "q-monomial with zero coefficient");
        QMonomial { coeff, exp }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn q_pow(exp: i32) -> Self {
        QMonomial {
            coeff: BigRational::one(),
            exp,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), 0)
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.coeff.is_one()
    }

    pub fn inv(&self) -> Self {
        QMonomial {
            coeff: self.coeff.recip(),
            exp: -self.exp,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        QMonomial {
            coeff: rational_pow(&self.coeff, n),
            exp: i32::try_from(self.exp as i64 * n).expect("q exponent overflow"),
        }
    }

    pub fn bar(&self) -> Self {
        QMonomial {
            coeff: self.coeff.clone(),
            exp: -self.exp,
        }
    }

    pub fn to_laurent(&self) -> LaurentQ {
        LaurentQ::monomial(self.coeff.clone(), self.exp)
    }

    pub fn to_ratq(&self) -> RatQ {
        RatQ::from_laurent(self.to_laurent())
    }

    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, QError> {
        if q0.is_zero() {
            return Err(QError::ZeroPoint);
        }
        Ok(&self.coeff * rational_pow(q0, self.exp as i64))
    }
}

impl Mul for &QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: &QMonomial) -> QMonomial {
        QMonomial {
            coeff: &self.coeff * &rhs.coeff,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Mul for QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: QMonomial) -> QMonomial {
        &self * &rhs
    }
}

impl Neg for QMonomial {
    type Output = QMonomial;
    fn neg(self) -> QMonomial {
        QMonomial {
            coeff: -self.coeff,
            exp: self.exp,
        }
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_laurent(), f)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_laurent(), f)
    }
}

/// Element of `Q(q)` in reduced form.
///
/// The denominator is a monic polynomial in `q` with nonzero constant term and
/// is coprime to the numerator, so structural equality is equality in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQ {
    num: LaurentQ,
    den: LaurentQ,
}

impl Default for RatQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQ {
    pub fn zero() -> Self {
        RatQ {
            num: LaurentQ::zero(),
            den: LaurentQ::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_laurent(LaurentQ::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(LaurentQ::constant(r))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    pub fn from_laurent(num: LaurentQ) -> Self {
        RatQ {
            num,
            den: LaurentQ::one(),
        }
    }

    /// `num / den`, reduced.
    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(m) = den.as_monomial() {
            let inv = m.inv();
            return RatQ {
                num: num.shift(inv.exp).scale(&inv.coeff),
                den: LaurentQ::one(),
            };
        }
        let (sn, n) = num.to_dense();
        let (sd, d) = den.to_dense();
        let g = dense_gcd(&n, &d);
        let (n, d) = if g.len() > 1 {
            (dense_divrem(&n, &g).0, dense_divrem(&d, &g).0)
        } else {
            (n, d)
        };
        let lead = d.last().cloned().expect("nonzero denominator");
        let num = LaurentQ::from_dense(sn - sd, n).scale(&lead.recip());
        let den = LaurentQ::from_dense(0, dense_monic(d));
        RatQ { num, den }
    }

    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The polynomial itself when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_monomial(&self) -> Option<QMonomial> {
        self.as_laurent().and_then(|l| l.as_monomial())
    }

    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn mul_monomial(&self, m: &QMonomial) -> Self {
        RatQ {
            num: self.num.shift(m.exp).scale(&m.coeff),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatQ {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    pub fn subs_q_power(&self, d: i32) -> Self {
        Self::reduce(self.num.subs_q_power(d), self.den.subs_q_power(d))
    }

    /// Exact value at a rational `q0`; fails at `q0 = 0` or a pole.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, QError> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(QError::Pole);
        }
        Ok(self.num.eval(q0)? / d)
    }

    fn sum(&self, rhs: &Self, negate: bool) -> Self {
        let signed = |x: &LaurentQ| if negate { -x } else { x.clone() };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RatQ {
                num: signed(&rhs.num),
                den: rhs.den.clone(),
            };
        }
        if self.den.is_one() && rhs.den.is_one() {
            let num = if negate {
                &self.num - &rhs.num
            } else {
                &self.num + &rhs.num
            };
            return RatQ {
                num,
                den: LaurentQ::one(),
            };
        }
        if self.den == rhs.den {
            let num = if negate {
                &self.num - &rhs.num
            } else {
                &self.num + &rhs.num
            };
            return Self::reduce(num, self.den.clone());
        }
        // a/b + c/1 stays reduced when a/b is.
        if rhs.den.is_one() {
            let num = &self.num + &(&signed(&rhs.num) * &self.den);
            return RatQ {
                num,
                den: self.den.clone(),
            }
            .normalize_num();
        }
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &signed(&rhs.num);
            return RatQ {
                num,
                den: rhs.den.clone(),
            }
            .normalize_num();
        }
        let num = &(&self.num * &rhs.den) + &(&signed(&rhs.num) * &self.den);
        Self::reduce(num, &self.den * &rhs.den)
    }

    fn normalize_num(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatQ {
                num: &self.num * &rhs.num,
                den: LaurentQ::one(),
            };
        }
        if let Some(m) = rhs.as_monomial() {
            return self.mul_monomial(&m);
        }
        if let Some(m) = self.as_monomial() {
            return rhs.mul_monomial(&m);
        }
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_binop!(Add, add, RatQ, |a, b| a.sum(b, false));
forward_binop!(Sub, sub, RatQ, |a, b| a.sum(b, true));
forward_binop!(Mul, mul, RatQ, |a, b| a.product(b));

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        -self.clone()
    }
}

impl AddAssign<&RatQ> for RatQ {
    fn add_assign(&mut self, rhs: &RatQ) {
        *self = self.sum(rhs, false);
    }
}

impl SubAssign<&RatQ> for RatQ {
    fn sub_assign(&mut self, rhs: &RatQ) {
        *self = self.sum(rhs, true);
    }
}

impl MulAssign<&RatQ> for RatQ {
    fn mul_assign(&mut self, rhs: &RatQ) {
        *self = self.product(rhs);
    }
}

impl From<LaurentQ> for RatQ {
    fn from(l: LaurentQ) -> Self {
        RatQ::from_laurent(l)
    }
}

impl From<QMonomial> for RatQ {
    fn from(m: QMonomial) -> Self {
        m.to_ratq()
    }
}

impl fmt::Debug for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn q_int(n: i64) -> Result<LaurentQ, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    let n = i32::try_from(n).map_err(|_| QError::NegativeArgument(n))?;
    Ok(LaurentQ::from_terms(
        (0..n).map(|j| (n - 1 - 2 * j, BigRational::one())),
    ))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: i64) -> Result<LaurentQ, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    let mut acc = LaurentQ::one();
    for k in 1..=n {
        acc = &acc * &q_int(k)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n choose p]_q`, computed as an exact quotient of q-factorials.
pub fn q_binomial(n: i64, p: i64) -> Result<LaurentQ, QError> {
    if n < 0 {
        return Err(QError::NegativeArgument(n));
    }
    if p < 0 || p > n {
        return Err(QError::OutOfRange { n, p });
    }
    let num = q_factorial(n)?;
    let den = &q_factorial(p)? * &q_factorial(n - p)?;
    num.div_exact(&den).ok_or(QError::NonExactDivision)
}
