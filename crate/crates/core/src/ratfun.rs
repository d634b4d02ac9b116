//! Rational functions whose denominators are products of binomials `z_i - c z_j`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::EvalError;
use crate::poly::{permutations, Binomial, MultiLaurent, VarId};
use crate::qring::{QMonomial, RatQ};

/// The binomial `z_i - c z_j` with `i < j`; every binomial is a unit multiple of one of these.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    pub i: VarId,
    pub j: VarId,
    pub c: QMonomial,
}

impl BinomialFactor {
    /// Splits `a z_i - b z_j` into a unit and a canonical factor.
    pub fn canonical(b: &Binomial) -> (QMonomial, BinomialFactor) {
        assert!(b.i != b.j, "binomial needs two distinct variables");
        if b.i < b.j {
            (
                b.a.clone(),
                BinomialFactor {
                    i: b.i,
                    j: b.j,
                    c: &b.b * &b.a.inv(),
                },
            )
        } else {
            (
                -b.b.clone(),
                BinomialFactor {
                    i: b.j,
                    j: b.i,
                    c: &b.a * &b.b.inv(),
                },
            )
        }
    }

    pub fn to_binomial(&self) -> Binomial {
        Binomial::monic(self.i, self.c.clone(), self.j)
    }

    pub fn to_poly(&self) -> MultiLaurent {
        MultiLaurent::binomial(&self.to_binomial())
    }
}

impl fmt::Debug for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BinomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - ({})*{}", self.i, self.c, self.j)
    }
}

/// `num / prod factor^mult`, kept normalized: no denominator factor divides the numerator.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatFun {
    num: MultiLaurent,
    den: BTreeMap<BinomialFactor, u32>,
}

impl RatFun {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(MultiLaurent::one())
    }

    pub fn from_poly(num: MultiLaurent) -> Self {
        RatFun {
            num,
            den: BTreeMap::new(),
        }
    }

    /// `num / prod(denominators)`, normalized.
    pub fn new(num: MultiLaurent, denominators: &[Binomial]) -> Self {
        let mut unit = QMonomial::one();
        let mut den = BTreeMap::new();
        for b in denominators {
            let (u, f) = BinomialFactor::canonical(b);
            unit = &unit * &u;
            *den.entry(f).or_insert(0) += 1;
        }
        let mut r = RatFun {
            num: num.scale_monomial(&unit.inv()),
            den,
        };
        r.normalize();
        r
    }

    /// `c / (a z_i - b z_j)`.
    pub fn inverse_binomial(c: RatQ, b: &Binomial) -> Self {
        Self::new(MultiLaurent::constant(c), core::slice::from_ref(b))
    }

    pub fn numer(&self) -> &MultiLaurent {
        &self.num
    }

    pub fn denom(&self) -> &BTreeMap<BinomialFactor, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&MultiLaurent> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Cancels denominator factors dividing the numerator until none does.
    pub fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<BinomialFactor> = self.den.keys().cloned().collect();
        for f in keys {
            let b = f.to_binomial();
            while let Some(m) = self.den.get_mut(&f) {
                match self.num.exact_divide(&b) {
                    Ok(h) => {
                        self.num = h;
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    fn cofactor(&self, lcd: &BTreeMap<BinomialFactor, u32>) -> MultiLaurent {
        let mut p = self.num.clone();
        for (f, &m) in lcd {
            let have = self.den.get(f).copied().unwrap_or(0);
            if m > have {
                let b = f.to_poly();
                for _ in have..m {
                    p = &p * &b;
                }
            }
        }
        p
    }

    /// Sum over a single common denominator with one final normalization.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RatFun>) -> Self {
        let items: Vec<&RatFun> = items.into_iter().filter(|r| !r.is_zero()).collect();
        let mut lcd: BTreeMap<BinomialFactor, u32> = BTreeMap::new();
        for r in &items {
            for (f, &m) in &r.den {
                let e = lcd.entry(f.clone()).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = MultiLaurent::zero();
        for r in items {
            num = &num + &r.cofactor(&lcd);
        }
        let mut out = RatFun { num, den: lcd };
        out.normalize();
        out
    }

    fn product(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let mut out = RatFun {
            num: &self.num * &other.num,
            den,
        };
        out.normalize();
        out
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        let mut out = RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        };
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    pub fn mul_poly(&self, p: &MultiLaurent) -> Self {
        self.product(&RatFun::from_poly(p.clone()))
    }

    /// Renames variables through an injective map, re-canonicalizing the factors.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Self {
        let mut unit = QMonomial::one();
        let mut den = BTreeMap::new();
        for (fac, &m) in &self.den {
            let b = Binomial::new(QMonomial::one(), f(fac.i), fac.c.clone(), f(fac.j));
            let (u, g) = BinomialFactor::canonical(&b);
            unit = &unit * &u.pow(m as i64);
            *den.entry(g).or_insert(0) += m;
        }
        RatFun {
            num: self.num.rename(&f).scale_monomial(&unit.inv()),
            den,
        }
    }

    /// Sum over every permutation of `vars`, normalized.
    pub fn sym_group(&self, vars: &[VarId]) -> Self {
        let terms: Vec<RatFun> = permutations(vars.len())
            .into_iter()
            .map(|perm| {
                self.rename(|x| match vars.iter().position(|y| *y == x) {
                    Some(k) => vars[perm[k]],
                    None => x,
                })
            })
            .collect();
        Self::sum(terms.iter())
    }

    /// `q -> q^-1` throughout.
    pub fn bar(&self) -> Self {
        let den = self
            .den
            .iter()
            .map(|(f, &m)| {
                (
                    BinomialFactor {
                        i: f.i,
                        j: f.j,
                        c: f.c.bar(),
                    },
                    m,
                )
            })
            .collect();
        RatFun {
            num: self.num.bar(),
            den,
        }
    }

    pub fn eval(
        &self,
        q0: &BigRational,
        values: &BTreeMap<VarId, BigRational>,
    ) -> Result<BigRational, EvalError> {
        let mut d = BigRational::from_integer(1.into());
        for (f, &m) in &self.den {
            let v = f.to_poly().eval(q0, values)?;
            if v.is_zero() {
                return Err(EvalError::Pole);
            }
            for _ in 0..m {
                d *= &v;
            }
        }
        Ok(self.num.eval(q0, values)? / d)
    }

    /// All variables in numerator or denominator.
    pub fn vars(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.num.vars().to_vec();
        for f in self.den.keys() {
            v.push(f.i);
            v.push(f.j);
        }
        v.sort();
        v.dedup();
        v
    }
}

impl From<MultiLaurent> for RatFun {
    fn from(p: MultiLaurent) -> Self {
        RatFun::from_poly(p)
    }
}

crate::qring::forward_binop!(Add, add, RatFun, |a, b| RatFun::sum([a, b]));
crate::qring::forward_binop!(Sub, sub, RatFun, |a, b| RatFun::sum([a, &-b]));
crate::qring::forward_binop!(Mul, mul, RatFun, |a, b| a.product(b));

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.num)?;
        if self.den.is_empty() {
            return Ok(());
        }
        f.write_str(" / ")?;
        for (k, (fac, m)) in self.den.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({})", fac)?;
            if *m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{rational, LaurentQ};

    fn z(i: u32) -> VarId {
        VarId::z(1, i)
    }
    fn qm(e: i32) -> QMonomial {
        QMonomial::q_pow(e)
    }
    fn bin(a: i32, i: u32, b: i32, j: u32) -> Binomial {
        Binomial::new(qm(a), z(i), qm(b), z(j))
    }
    fn zp(i: u32) -> MultiLaurent {
        MultiLaurent::var(z(i))
    }

    #[test]
    fn opposite_poles_cancel() {
        let a = RatFun::inverse_binomial(RatQ::one(), &bin(0, 1, 0, 2));
        let b = RatFun::inverse_binomial(RatQ::one(), &bin(0, 2, 0, 1));
        assert!((&a + &b).is_zero());
        assert!(!a.is_zero());
    }

    #[test]
    fn partial_fraction_examples() {
        // -q/(q^2+1), q^2/(q^2+1)
        let q2p1 = LaurentQ::from_terms([(2, rational(1, 1)), (0, rational(1, 1))]);
        let c1 = RatQ::new(LaurentQ::q_pow(1).scale(&rational(-1, 1)), q2p1.clone()).unwrap();
        let c2 = RatQ::new(LaurentQ::q_pow(2), q2p1).unwrap();

        let lhs = RatFun::new(&zp(1) - &zp(2), &[bin(2, 2, 0, 1), bin(-1, 2, 1, 1)]);
        let rhs = &RatFun::inverse_binomial(c1.clone(), &bin(2, 2, 0, 1))
            + &RatFun::inverse_binomial(c1, &bin(0, 2, 2, 1));
        assert!((&lhs - &rhs).is_zero());

        let lhs = RatFun::new(&zp(1) - &zp(2), &[bin(2, 1, 0, 2), bin(-2, 1, 0, 2)]);
        let rhs = &RatFun::inverse_binomial(c2.clone(), &bin(2, 1, 0, 2))
            + &RatFun::inverse_binomial(c2, &bin(0, 1, 2, 2));
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn sym_group_examples() {
        let f = RatFun::inverse_binomial(RatQ::one(), &bin(0, 1, 0, 2));
        assert!(f.sym_group(&[z(1), z(2)]).is_zero());
        let g = RatFun::new(zp(1), &[bin(0, 1, 0, 2)]);
        assert_eq!(g.sym_group(&[z(1), z(2)]), RatFun::one());
        let h = RatFun::from_poly(zp(1)).sym_group(&[z(1), z(2), z(3)]);
        let expect = (&(&zp(1) + &zp(2)) + &zp(3)).scale(&RatQ::from_integer(2));
        assert_eq!(h, RatFun::from_poly(expect));
    }

    #[test]
    fn canonical_orientation() {
        // (q z2 - z1) = -(z1 - q z2)
        let f = RatFun::inverse_binomial(RatQ::one(), &bin(1, 2, 0, 1));
        let g = RatFun::inverse_binomial(-RatQ::one(), &bin(0, 1, 1, 2));
        assert_eq!(f, g);
        let (_, fac) = BinomialFactor::canonical(&bin(1, 2, 0, 1));
        assert_eq!(
            fac,
            BinomialFactor {
                i: z(1),
                j: z(2),
                c: qm(1)
            }
        );
    }

    #[test]
    fn normalization_cancels() {
        let num = &(&zp(1) - &zp(2)) * &zp(3);
        let f = RatFun::new(num, &[bin(0, 2, 0, 1), bin(0, 1, 2, 3)]);
        assert_eq!(f.denom().len(), 1);
        let mut g = f.clone();
        g.normalize();
        assert_eq!(f, g);
    }
}
